#include "alcove/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace alcove {

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.rank();

  // Simple reflection matrices on coweight coordinates:
  // (s_i x)_j = x_j - cartan[j][i-1] * x_{i-1}.
  std::vector<IntMat> gens(n + 1);
  for (int i = 1; i <= n; ++i) {
    IntMat m = identity_matrix();
    for (int j = 0; j < n; ++j) m[j][i - 1] -= rs.cartan()[j][i - 1];
    gens[i] = m;
  }

  // Breadth-first enumeration by right multiplication; depth = word length.
  std::map<IntMat, int> index;
  coweight_.push_back(identity_matrix());
  lengths_.push_back(0);
  index[coweight_[0]] = 0;
  for (size_t head = 0; head < coweight_.size(); ++head) {
    for (int i = 1; i <= n; ++i) {
      IntMat m = mat_mul(coweight_[head], gens[i]);
      if (index.emplace(m, static_cast<int>(coweight_.size())).second) {
        coweight_.push_back(m);
        lengths_.push_back(lengths_[head] + 1);
      }
    }
  }

  const int sz = size();
  mult_.assign(sz, std::vector<int>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) mult_[a][b] = index.at(mat_mul(coweight_[a], coweight_[b]));

  inverse_.assign(sz, 0);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      if (mult_[a][b] == 0) inverse_[a] = b;

  longest_ = static_cast<int>(std::max_element(lengths_.begin(), lengths_.end()) -
                              lengths_.begin());

  // Canonical words: repeatedly take the least left descent. Elements are
  // processed in order of increasing length, so the tail word already exists.
  std::vector<int> by_length(sz);
  for (int i = 0; i < sz; ++i) by_length[i] = i;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](int a, int b) { return lengths_[a] < lengths_[b]; });
  words_.assign(sz, {});
  for (int w : by_length) {
    if (w == 0) continue;
    for (int i = 1; i <= n; ++i) {
      int prev = mult_[index.at(gens[i])][w];
      if (lengths_[prev] < lengths_[w]) {
        words_[w].push_back(i);
        words_[w].insert(words_[w].end(), words_[prev].begin(), words_[prev].end());
        break;
      }
    }
  }

  rowsum_.assign(sz, Coeffs{});
  for (int w = 0; w < sz; ++w) {
    Coeffs ones{};
    for (int i = 0; i < n; ++i) ones[i] = 1;
    rowsum_[w] = mat_apply(coweight_[w], ones);
  }

  // Action on the positive-root classes, via canonical words.
  const auto& pos = rs.positive_roots();
  const int np = static_cast<int>(pos.size());
  root_action_.assign(sz, std::vector<std::pair<int, int>>(np));
  for (int w = 0; w < sz; ++w)
    for (int c = 0; c < np; ++c) {
      Root r = pos[c];
      const auto& letters = words_[w];
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = rs.reflect_root(*it, r);
      bool neg = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](long long x) { return x <= 0; });
      Root abs = r;
      if (neg)
        for (auto& x : abs.coeffs) x = -x;
      root_action_[w][c] = {neg ? -1 : +1, rs.class_index(abs)};
    }

  // Reflection elements r_alpha: x - pair(alpha, x) * alpha^vee.
  reflection_root_.assign(sz, -1);
  reflection_by_class_.assign(np, -1);
  for (int c = 0; c < np; ++c) {
    const Root& alpha = pos[c];
    Coeffs cw = rs.coweight_of_coroot(rs.coroot_of(alpha));
    IntMat m = identity_matrix();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[j][k] -= cw[j] * alpha.coeffs[k];
    int idx = index.at(m);
    reflection_root_[idx] = c;
    reflection_by_class_[c] = idx;
  }

  // Coroot-coordinate action: column j of C_w is the coroot of w(alpha_j).
  coroot_.assign(sz, IntMat{});
  for (int w = 0; w < sz; ++w) {
    IntMat m{};
    for (int j = 0; j < n; ++j) {
      Root a{};
      a.coeffs[j] = 1;
      Coeffs col = rs.coroot_of(apply(w, a));
      for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    for (int i = n; i < kMaxRank; ++i) m[i][i] = 1;
    coroot_[w] = m;
  }

  display_order_.assign(sz, 0);
  for (int i = 0; i < sz; ++i) display_order_[i] = i;
  std::sort(display_order_.begin(), display_order_.end(), [&](int a, int b) {
    if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
    return words_[a] < words_[b];
  });

  simple_.assign(n + 1, -1);
  for (int i = 1; i <= n; ++i) simple_[i] = index.at(gens[i]);

  side_class_.assign(np, std::vector<int>(sz));
  for (int c = 0; c < np; ++c)
    for (int v = 0; v < sz; ++v) side_class_[c][v] = chamber_side(pos[c], v);
}

int WeylGroup::simple(int i) const {
  if (i < 1 || i > rs_->rank())
    throw Error(ErrorCode::BadArgument, "generator index out of range");
  return simple_[i];
}

std::string WeylGroup::word_string(int w) const {
  if (words_[w].empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < words_[w].size(); ++i) {
    if (i) out << " ";
    out << "s" << words_[w][i];
  }
  return out.str();
}

Root WeylGroup::apply(int w, const Root& r) const {
  Root out = r;
  const auto& letters = words_[w];
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out = rs_->reflect_root(*it, out);
  return out;
}

int WeylGroup::reflection(const Root& alpha) const {
  return reflection_by_class_[rs_->class_index(alpha)];
}

std::optional<Root> WeylGroup::root_of_reflection(int w) const {
  if (reflection_root_[w] < 0) return std::nullopt;
  return rs_->positive_roots()[reflection_root_[w]];
}

std::optional<Root> WeylGroup::reflection_between(int u, int w) const {
  return root_of_reflection(multiply(w, inverse_[u]));
}

int WeylGroup::chamber_side(const Root& alpha, int v) const {
  long long acc = 0;
  for (int i = 0; i < rs_->rank(); ++i) acc += alpha.coeffs[i] * rowsum_[v][i];
  if (acc == 0) throw Error(ErrorCode::Internal, "degenerate chamber side");
  return acc > 0 ? +1 : -1;
}

int WeylGroup::chamber_from_sides(const std::vector<int>& sides) const {
  const auto& pos = rs_->positive_roots();
  if (sides.size() != pos.size())
    throw Error(ErrorCode::BadArgument, "side vector has wrong size");
  for (int w = 0; w < size(); ++w) {
    bool ok = true;
    for (size_t c = 0; c < pos.size() && ok; ++c)
      ok = chamber_side(pos[c], w) == sides[c];
    if (ok) return w;
  }
  throw Error(ErrorCode::BadArgument, "no chamber matches the sign vector");
}

int WeylGroup::element_from_word(const std::vector<int>& letters) const {
  int w = 0;
  for (int i : letters) w = multiply(w, simple(i));
  return w;
}

std::vector<std::vector<int>> WeylGroup::reduced_words(int w) const {
  if (w == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= rs_->rank(); ++i) {
    int prev = multiply(simple(i), w);
    if (lengths_[prev] < lengths_[w])
      for (auto& tail : reduced_words(prev)) {
        std::vector<int> word{i};
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
      }
  }
  return out;
}

int WeylGroup::index_of(const IntMat& m) const {
  for (int w = 0; w < size(); ++w)
    if (coweight_[w] == m) return w;
  throw Error(ErrorCode::Internal, "matrix not in group");
}

}  // namespace alcove
