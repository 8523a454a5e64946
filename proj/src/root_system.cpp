#include "alcove/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

struct TypeEntry {
  const char* label;
  int rank;
  IntMat cartan;
};

// cartan[j][k] = <alpha_j, alpha_k^vee>. In B2/B3 the last simple root is
// short; in C3 it is long; in G2 alpha_1 is short.
const TypeEntry kTypes[] = {
    {"A1", 1, {{{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}}},
    {"A2", 2, {{{2, -1, 0}, {-1, 2, 0}, {0, 0, 0}}}},
    {"A3", 3, {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}},
    {"B2", 2, {{{2, -1, 0}, {-2, 2, 0}, {0, 0, 0}}}},
    {"B3", 3, {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}}},
    {"C3", 3, {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}}},
    {"G2", 2, {{{2, -1, 0}, {-3, 2, 0}, {0, 0, 0}}}},
};

bool all_nonneg(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
}
bool all_nonpos(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x <= 0; });
}
bool is_zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

}  // namespace

Coeffs mat_apply(const IntMat& m, const Coeffs& v) {
  Coeffs out{};
  for (int i = 0; i < kMaxRank; ++i)
    for (int j = 0; j < kMaxRank; ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out{};
  for (int i = 0; i < kMaxRank; ++i)
    for (int k = 0; k < kMaxRank; ++k)
      for (int j = 0; j < kMaxRank; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IntMat identity_matrix() {
  IntMat m{};
  for (int i = 0; i < kMaxRank; ++i) m[i][i] = 1;
  return m;
}

const std::vector<std::string>& RootSystem::supported_types() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (const auto& t : kTypes) v.push_back(t.label);
    return v;
  }();
  return labels;
}

RootSystem RootSystem::build(const std::string& type_label) {
  const TypeEntry* entry = nullptr;
  for (const auto& t : kTypes)
    if (type_label == t.label) entry = &t;
  if (!entry) {
    std::ostringstream msg;
    msg << "unknown root system type '" << type_label << "'; supported types:";
    for (const auto& l : supported_types()) msg << " " << l;
    throw Error(ErrorCode::BadType, msg.str());
  }

  RootSystem rs;
  rs.label_ = entry->label;
  rs.rank_ = entry->rank;
  rs.cartan_ = entry->cartan;

  // Relative squared lengths from the Cartan matrix: l_j / l_k = A[j][k] / A[k][j]
  // whenever the nodes are joined. Propagate from node 0 and clear denominators.
  const int n = rs.rank_;
  std::vector<Rational> len(n, Rational(0));
  len[0] = Rational(1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == k || rs.cartan_[j][k] == 0) continue;
        if (len[k] != Rational(0) && len[j] == Rational(0)) {
          len[j] = len[k] * Rational(rs.cartan_[j][k], rs.cartan_[k][j]);
          changed = true;
        }
      }
  }
  long long denom = 1;
  for (auto& l : len) denom = std::lcm(denom, l.denominator());
  std::vector<long long> simple_units(n);
  long long min_unit = 0;
  for (int i = 0; i < n; ++i) {
    simple_units[i] = (len[i] * denom).numerator();
    min_unit = min_unit == 0 ? simple_units[i] : std::min(min_unit, simple_units[i]);
  }
  for (auto& u : simple_units) u /= min_unit;

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping the positive side of each orbit. Reflections preserve length.
  std::map<Coeffs, long long> found;  // root coeffs -> length unit
  std::vector<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a{};
    a.coeffs[i] = 1;
    found[a.coeffs] = simple_units[i];
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    const long long unit = found.at(r.coeffs);
    for (int i = 1; i <= n; ++i) {
      Root s = rs.reflect_root(i, r);
      if (!all_nonneg(s.coeffs)) continue;
      if (found.emplace(s.coeffs, unit).second) queue.push_back(s);
    }
  }

  for (const auto& [coeffs, unit] : found) {
    Root r{coeffs};
    rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), [&](const Root& a, const Root& b) {
    long long ha = std::accumulate(a.coeffs.begin(), a.coeffs.end(), 0LL);
    long long hb = std::accumulate(b.coeffs.begin(), b.coeffs.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });
  // Simple roots first, in index order; the sort above already puts the height-1
  // roots first but in lexicographic order (a1 < a2 < a3 holds for Coeffs lex
  // order only by accident); enforce explicitly.
  for (int i = 0; i < n; ++i) {
    Root a{};
    a.coeffs[i] = 1;
    auto it = std::find_if(rs.positive_.begin(), rs.positive_.end(),
                           [&](const Root& r) { return r.coeffs == a.coeffs; });
    std::rotate(rs.positive_.begin() + i, it, it + 1);
  }

  rs.length_units_.reserve(rs.positive_.size());
  for (const auto& r : rs.positive_) rs.length_units_.push_back(found.at(r.coeffs));

  // Highest root: the unique positive root of maximal height.
  long long best = -1;
  for (size_t i = 0; i < rs.positive_.size(); ++i) {
    long long h = rs.height(rs.positive_[i]);
    if (h > best) {
      best = h;
      rs.highest_index_ = static_cast<int>(i);
    }
  }
  rs.coxeter_number_ = static_cast<int>(best) + 1;

  // Coroots: (beta^vee)_i = c_i * l_i / l_beta, always integral.
  for (size_t i = 0; i < rs.positive_.size(); ++i) {
    const Root& r = rs.positive_[i];
    Coeffs d{};
    for (int j = 0; j < n; ++j) {
      long long num = r.coeffs[j] * simple_units[j];
      if (num % rs.length_units_[i] != 0)
        throw Error(ErrorCode::Internal, "non-integral coroot in table for " + rs.label_);
      d[j] = num / rs.length_units_[i];
    }
    rs.coroots_.push_back(d);
  }

  return rs;
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_)
    throw Error(ErrorCode::BadArgument, "simple root index out of range");
  return positive_[i - 1];
}

bool RootSystem::is_positive(const Root& r) const {
  return std::find(positive_.begin(), positive_.end(), r) != positive_.end();
}

bool RootSystem::is_root(const Root& r) const {
  if (is_positive(r)) return true;
  Root neg{};
  for (int i = 0; i < kMaxRank; ++i) neg.coeffs[i] = -r.coeffs[i];
  return is_positive(neg);
}

int RootSystem::class_index(const Root& r) const {
  Coeffs c = r.coeffs;
  if (all_nonpos(c) && !is_zero(c))
    for (auto& x : c) x = -x;
  for (size_t i = 0; i < positive_.size(); ++i)
    if (positive_[i].coeffs == c) return static_cast<int>(i);
  throw Error(ErrorCode::BadArgument, "not a root of " + label_);
}

long long RootSystem::height(const Root& r) const {
  return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0LL);
}

Root RootSystem::reflect_root(int i, const Root& beta) const {
  if (i < 1 || i > rank_)
    throw Error(ErrorCode::BadArgument, "simple reflection index out of range");
  long long p = 0;  // <beta, alpha_i^vee>
  for (int j = 0; j < rank_; ++j) p += beta.coeffs[j] * cartan_[j][i - 1];
  Root out = beta;
  out.coeffs[i - 1] -= p;
  return out;
}

Rational RootSystem::pair(const Root& beta, const Point& x) const {
  Rational acc(0);
  for (int i = 0; i < rank_; ++i) acc += Rational(beta.coeffs[i]) * x.coords[i];
  return acc;
}

long long RootSystem::pair_lattice(const Root& beta, const Coeffs& mu) const {
  Coeffs cw = coweight_of_coroot(mu);
  long long acc = 0;
  for (int i = 0; i < rank_; ++i) acc += beta.coeffs[i] * cw[i];
  return acc;
}

Coeffs RootSystem::coroot_of(const Root& beta) const {
  Coeffs c = beta.coeffs;
  bool neg = all_nonpos(c) && !is_zero(c);
  if (neg)
    for (auto& x : c) x = -x;
  Coeffs d = coroots_[class_index(Root{c})];
  if (neg)
    for (auto& x : d) x = -x;
  return d;
}

Coeffs RootSystem::coweight_of_coroot(const Coeffs& mu) const {
  return mat_apply(cartan_, mu);
}

Point RootSystem::fundamental_interior_point() const {
  Point x;
  for (int i = 0; i < rank_; ++i) x.coords[i] = Rational(1, coxeter_number_);
  return x;
}

Point RootSystem::point_of_coroot(const Coeffs& mu) const {
  Point x;
  Coeffs cw = coweight_of_coroot(mu);
  for (int i = 0; i < rank_; ++i) x.coords[i] = Rational(cw[i]);
  return x;
}

long long RootSystem::length_unit(const Root& r) const {
  return length_units_[class_index(r)];
}

std::string RootSystem::pretty(const Root& r) const {
  std::ostringstream out;
  bool first = true;
  bool negative = all_nonpos(r.coeffs) && !is_zero(r.coeffs);
  for (int i = 0; i < rank_; ++i) {
    long long c = negative ? -r.coeffs[i] : r.coeffs[i];
    if (c == 0) continue;
    if (!first) out << "+";
    if (negative && first) out << "-(";
    if (c != 1) out << c;
    out << "a" << (i + 1);
    first = false;
  }
  if (negative) out << ")";
  if (first) out << "0";
  return out.str();
}

Root RootSystem::parse_root(const std::string& text) const {
  Root r{};
  // Plain coefficient list: "1,1" or "[1,1]".
  if (text.find('a') == std::string::npos) {
    std::string cleaned;
    for (char ch : text)
      if (ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
    std::istringstream in(cleaned);
    std::string tok;
    int i = 0;
    while (std::getline(in, tok, ',')) {
      if (i >= rank_) throw Error(ErrorCode::Parse, "too many root coefficients: " + text);
      try {
        r.coeffs[i++] = std::stoll(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad root coefficient in '" + text + "'");
      }
    }
    if (i != rank_) throw Error(ErrorCode::Parse, "expected " + std::to_string(rank_) +
                                                      " coefficients in '" + text + "'");
  } else {
    // "a1+a2", "2a1+a2", with optional whitespace.
    size_t pos = 0;
    auto skip_space = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    skip_space();
    bool expect_term = true;
    while (pos < text.size()) {
      if (!expect_term) {
        if (text[pos] != '+') throw Error(ErrorCode::Parse, "bad root string '" + text + "'");
        ++pos;
        skip_space();
      }
      long long coeff = 1;
      size_t start = pos;
      while (pos < text.size() && isdigit(text[pos])) ++pos;
      if (pos > start) coeff = std::stoll(text.substr(start, pos - start));
      if (pos >= text.size() || text[pos] != 'a')
        throw Error(ErrorCode::Parse, "bad root string '" + text + "'");
      ++pos;
      start = pos;
      while (pos < text.size() && isdigit(text[pos])) ++pos;
      if (pos == start) throw Error(ErrorCode::Parse, "bad root string '" + text + "'");
      int idx = std::stoi(text.substr(start, pos - start));
      if (idx < 1 || idx > rank_)
        throw Error(ErrorCode::Parse, "root index out of range in '" + text + "'");
      r.coeffs[idx - 1] += coeff;
      skip_space();
      expect_term = false;
    }
  }
  if (!is_root(r)) throw Error(ErrorCode::Parse, "'" + text + "' is not a root of " + label_);
  return r;
}

}  // namespace alcove
