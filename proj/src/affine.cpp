#include "alcove/affine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace alcove {

long long floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

AffineComplex::AffineComplex(const RootSystem& rs, const WeylGroup& group)
    : rs_(&rs), w0_(&group), h_(rs.coxeter_number()) {
  theta_coroot_ = rs.coroot_of(rs.highest_root());
  theta_reflection_ = group.reflection(rs.highest_root());

  Coeffs ones{};
  for (int i = 0; i < rs.rank(); ++i) ones[i] = 1;
  rowsum_.resize(group.size());
  for (int w = 0; w < group.size(); ++w)
    rowsum_[w] = mat_apply(group.coweight_matrix(w), ones);

  const auto& pos = rs.positive_roots();
  chamber_lookup_.assign(size_t{1} << pos.size(), -1);
  for (int w = 0; w < group.size(); ++w) {
    size_t mask = 0;
    for (size_t c = 0; c < pos.size(); ++c)
      if (group.chamber_side(pos[c], w) > 0) mask |= size_t{1} << c;
    chamber_lookup_[mask] = w;
  }
}

AffineElement AffineComplex::generator(int letter) const {
  if (letter < 0 || letter > rs_->rank())
    throw Error(ErrorCode::BadArgument, "affine generator index out of range");
  if (letter == 0) return {theta_coroot_, theta_reflection_};
  return {Coeffs{}, w0_->simple(letter)};
}

AffineElement AffineComplex::multiply(const AffineElement& a, const AffineElement& b) const {
  Coeffs moved = w0_->apply_coroot(a.spherical, b.translation);
  Coeffs lambda = a.translation;
  for (int i = 0; i < kMaxRank; ++i) lambda[i] += moved[i];
  return {lambda, w0_->multiply(a.spherical, b.spherical)};
}

AffineElement AffineComplex::multiply_letter(const AffineElement& a, int letter) const {
  return multiply(a, generator(letter));
}

AffineElement AffineComplex::inverse(const AffineElement& a) const {
  int winv = w0_->inverse(a.spherical);
  Coeffs lambda = w0_->apply_coroot(winv, a.translation);
  for (auto& x : lambda) x = -x;
  return {lambda, winv};
}

Coeffs AffineComplex::interior_numerators(const Alcove& a) const {
  // g(x0) = M_w x0 + A lambda; numerators over h.
  Coeffs cw = rs_->coweight_of_coroot(a.translation);
  Coeffs num = rowsum_[a.spherical];
  for (int i = 0; i < rs_->rank(); ++i) num[i] += h_ * cw[i];
  return num;
}

Point AffineComplex::interior_point(const Alcove& a) const {
  Coeffs num = interior_numerators(a);
  Point p;
  for (int i = 0; i < rs_->rank(); ++i) p.coords[i] = Rational(num[i], h_);
  return p;
}

long long AffineComplex::pair_numerator(const Root& alpha, const Alcove& a) const {
  Coeffs num = interior_numerators(a);
  long long acc = 0;
  for (int i = 0; i < rs_->rank(); ++i) acc += alpha.coeffs[i] * num[i];
  return acc;
}

int AffineComplex::side(const Hyperplane& h, const Alcove& a) const {
  long long diff = pair_numerator(h.root, a) - h.level * h_;
  if (diff == 0) throw Error(ErrorCode::Internal, "alcove point on a wall");
  return diff > 0 ? +1 : -1;
}

Hyperplane AffineComplex::separating_wall(const Alcove& a, const Alcove& b) const {
  Coeffs na = interior_numerators(a);
  Coeffs nb = interior_numerators(b);
  const auto& pos = rs_->positive_roots();
  Hyperplane found{};
  int count = 0;
  for (const Root& alpha : pos) {
    long long pa = 0, pb = 0;
    for (int i = 0; i < rs_->rank(); ++i) {
      pa += alpha.coeffs[i] * na[i];
      pb += alpha.coeffs[i] * nb[i];
    }
    long long fa = floor_div(pa, h_), fb = floor_div(pb, h_);
    if (fa != fb) {
      if (fa + 1 != fb && fb + 1 != fa)
        throw Error(ErrorCode::BadArgument, "alcoves are not adjacent");
      found = {alpha, std::max(fa, fb)};
      ++count;
    }
  }
  if (count != 1) throw Error(ErrorCode::BadArgument, "alcoves are not adjacent");
  return found;
}

Hyperplane AffineComplex::wall_of_panel(const Panel& p) const {
  return separating_wall(p.base, multiply_letter(p.base, p.letter));
}

long long AffineComplex::ell(const AffineElement& g) const {
  Coeffs num = interior_numerators(g);
  long long total = 0;
  for (const Root& alpha : rs_->positive_roots()) {
    long long p = 0, p0 = 0;
    for (int i = 0; i < rs_->rank(); ++i) {
      p += alpha.coeffs[i] * num[i];
      p0 += alpha.coeffs[i];  // pair at x0, numerator = height
    }
    total += std::llabs(floor_div(p, h_) - floor_div(p0, h_));
  }
  return total;
}

long long AffineComplex::strip_index(const Root& alpha, const Alcove& a) const {
  return floor_div(pair_numerator(alpha, a), h_);
}

int AffineComplex::chamber_of(const Alcove& a) const {
  Coeffs num = interior_numerators(a);
  const auto& pos = rs_->positive_roots();
  size_t mask = 0;
  for (size_t c = 0; c < pos.size(); ++c) {
    long long p = 0;
    for (int i = 0; i < rs_->rank(); ++i) p += pos[c].coeffs[i] * num[i];
    if (p > 0) mask |= size_t{1} << c;
  }
  int w = chamber_lookup_[mask];
  if (w < 0) throw Error(ErrorCode::Internal, "alcove sign vector matches no chamber");
  return w;
}

bool AffineComplex::in_local_chamber(const Alcove& a, const Coeffs& mu, int v) const {
  Coeffs num = interior_numerators(a);
  for (const Root& alpha : rs_->positive_roots()) {
    long long p = 0;
    for (int i = 0; i < rs_->rank(); ++i) p += alpha.coeffs[i] * num[i];
    long long level = rs_->pair_lattice(alpha, mu);
    int sign = (p - level * h_) > 0 ? +1 : -1;
    if (sign != w0_->chamber_side(alpha, v)) return false;
  }
  return true;
}

int AffineComplex::local_chamber_of(const Alcove& a, const Coeffs& mu) const {
  Coeffs num = interior_numerators(a);
  const auto& pos = rs_->positive_roots();
  size_t mask = 0;
  for (size_t c = 0; c < pos.size(); ++c) {
    long long p = 0;
    for (int i = 0; i < rs_->rank(); ++i) p += pos[c].coeffs[i] * num[i];
    long long level = rs_->pair_lattice(pos[c], mu);
    if (p - level * h_ > 0) mask |= size_t{1} << c;
  }
  int w = chamber_lookup_[mask];
  if (w < 0) throw Error(ErrorCode::Internal, "alcove sign vector matches no chamber");
  return w;
}

bool AffineComplex::in_shrunken_chamber(const Alcove& a, int v, long long k) const {
  // Signed test in every simple direction of the chamber: the alcove must sit
  // at least k walls past each wall through the cone point. (Shifting only the
  // positively-mapped directions leaves the chamber of w0 unshrunk and breaks
  // the naive-subset property; the k-walls-deep reading is the one consistent
  // with the remark that no alcove lies between H_{v(alpha),0} and
  // H_{v(alpha),k}.)
  if (k < 0) throw Error(ErrorCode::BadArgument, "shrink level must be nonnegative");
  for (int i = 1; i <= rs_->rank(); ++i) {
    Root va = w0_->apply(v, rs_->simple_root(i));
    if (pair_numerator(va, a) <= k * h_) return false;
  }
  return true;
}

std::vector<int> AffineComplex::canonical_word(const AffineElement& g) const {
  std::vector<int> word;
  AffineElement cur = g;
  long long len = ell(cur);
  while (len > 0) {
    bool moved = false;
    for (int letter = 0; letter < num_letters(); ++letter) {
      AffineElement next = multiply(generator(letter), cur);
      long long nl = ell(next);
      if (nl < len) {
        word.push_back(letter);
        cur = next;
        len = nl;
        moved = true;
        break;
      }
    }
    if (!moved) throw Error(ErrorCode::Internal, "no descent found");
  }
  return word;
}

AffineElement AffineComplex::element_from_word(const std::vector<int>& letters) const {
  AffineElement g{};
  for (int letter : letters) g = multiply_letter(g, letter);
  return g;
}

std::vector<Alcove> AffineComplex::ball(long long radius) const {
  std::map<AffineElement, long long> seen;
  std::vector<AffineElement> queue{AffineElement{}};
  seen[queue[0]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineElement cur = queue[head];
    for (int letter = 0; letter < num_letters(); ++letter) {
      AffineElement next = multiply_letter(cur, letter);
      if (seen.count(next)) continue;
      long long len = ell(next);
      if (len > radius) continue;
      seen[next] = len;
      queue.push_back(next);
    }
  }
  std::vector<Alcove> out;
  out.reserve(seen.size());
  for (const auto& [a, len] : seen) out.push_back(a);
  std::sort(out.begin(), out.end(), [&](const Alcove& a, const Alcove& b) {
    long long la = seen.at(a), lb = seen.at(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

namespace {

void collect_words(const AffineComplex& cx, const AffineElement& g, long long len,
                   std::vector<int>& prefix, std::vector<std::vector<int>>& out, size_t cap) {
  if (out.size() >= cap) return;
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  for (int letter = 0; letter < cx.num_letters(); ++letter) {
    AffineElement next = cx.multiply(cx.generator(letter), g);
    long long nl = cx.ell(next);
    if (nl < len) {
      prefix.push_back(letter);
      collect_words(cx, next, nl, prefix, out, cap);
      prefix.pop_back();
      if (out.size() >= cap) return;
    }
  }
}

}  // namespace

std::vector<std::vector<int>> AffineComplex::reduced_words(const AffineElement& g,
                                                           size_t cap) const {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(*this, g, ell(g), prefix, out, cap);
  return out;
}

size_t AffineComplex::reduced_word_count(const AffineElement& g, size_t cap) const {
  // Saturating count via the same descent recursion, memoized per element.
  std::map<AffineElement, size_t> memo;
  struct Counter {
    const AffineComplex& cx;
    std::map<AffineElement, size_t>& memo;
    size_t cap;
    size_t run(const AffineElement& g, long long len) {
      if (len == 0) return 1;
      auto it = memo.find(g);
      if (it != memo.end()) return it->second;
      size_t total = 0;
      for (int letter = 0; letter < cx.num_letters(); ++letter) {
        AffineElement next = cx.multiply(cx.generator(letter), g);
        long long nl = cx.ell(next);
        if (nl < len) {
          total += run(next, nl);
          if (total >= cap) {
            total = cap;
            break;
          }
        }
      }
      memo[g] = total;
      return total;
    }
  } counter{*this, memo, cap};
  return counter.run(g, ell(g));
}

}  // namespace alcove
