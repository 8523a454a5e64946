#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "alcove/error.hpp"

namespace alcove {

// All supported types have rank <= 3; vectors and matrices are fixed-size and
// zero-padded beyond the rank.
inline constexpr int kMaxRank = 3;

using Rational = boost::rational<long long>;
using Coeffs = std::array<long long, kMaxRank>;
using IntMat = std::array<Coeffs, kMaxRank>;  // row-major, acts on column vectors

// A root in simple-root coordinates: the vector c with root = sum_i c[i] * alpha_i.
// Roots of a crystallographic system are all-nonnegative or all-nonpositive.
struct Root {
  Coeffs coeffs{};

  auto operator<=>(const Root&) const = default;
};

// A point of the ambient space in fundamental-coweight coordinates:
// coords[i] = <alpha_i, x>. Exact rationals throughout; the library never
// touches floating point except when serializing pictures.
struct Point {
  std::array<Rational, kMaxRank> coords{};

  bool operator==(const Point&) const = default;
};

Coeffs mat_apply(const IntMat& m, const Coeffs& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_matrix();

// Cartan data and exact pairing machinery for one irreducible type.
//
// Conventions (fixed here, used everywhere else):
//  * cartan()[j][k] = <alpha_j, alpha_k^vee>, 0-based storage for the 1-based
//    simple roots alpha_1..alpha_n.
//  * pair(alpha, x) = sum_i coeffs(alpha)[i] * coords(x)[i]; the hyperplane
//    H_{alpha,k} is the zero set of pair(alpha, .) - k, and half-spaces carry
//    integer levels in this normalization.
//  * reflections act as r_alpha(x) = x - pair(alpha, x) * alpha^vee.
class RootSystem {
 public:
  // Supported labels: A1, A2, A3, B2, B3, C3, G2. Throws Error(BadType)
  // otherwise, naming the supported set.
  static RootSystem build(const std::string& type_label);

  const std::string& type_label() const { return label_; }
  int rank() const { return rank_; }
  const IntMat& cartan() const { return cartan_; }
  int coxeter_number() const { return coxeter_number_; }

  // Positive roots, simple roots first (alpha_i at index i-1), then by
  // increasing height with lexicographic tie-break.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const;  // i in 1..rank
  const Root& highest_root() const { return positive_[highest_index_]; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  bool is_root(const Root& r) const;
  bool is_positive(const Root& r) const;
  // Index into positive_roots() of r or of -r; throws BadArgument for non-roots.
  int class_index(const Root& r) const;
  long long height(const Root& r) const;

  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, in root coordinates. i in 1..rank.
  Root reflect_root(int i, const Root& beta) const;

  // <beta, x> for a point in coweight coordinates.
  Rational pair(const Root& beta, const Point& x) const;
  // <beta, mu> for mu an integer vector over simple coroots. Always an integer.
  long long pair_lattice(const Root& beta, const Coeffs& mu) const;

  // beta^vee in simple-coroot coordinates. Defined for roots of either sign.
  Coeffs coroot_of(const Root& beta) const;

  // Coweight coordinates of a coroot-lattice vector: cartan * mu.
  Coeffs coweight_of_coroot(const Coeffs& mu) const;

  // The point x0 with all coweight coordinates 1/h; interior to the
  // fundamental alcove, so 0 < pair(alpha, x0) < 1 for every positive root.
  Point fundamental_interior_point() const;

  Point point_of_coroot(const Coeffs& mu) const;

  // Squared-length unit of a root (1 for short, 2 or 3 for long).
  long long length_unit(const Root& r) const;

  // Human-readable form, e.g. "a1+a2", "2a1+a2".
  std::string pretty(const Root& r) const;
  // Accepts "a1+a2"-style strings as well as plain coefficient lists "1,1".
  Root parse_root(const std::string& text) const;

  static const std::vector<std::string>& supported_types();

 private:
  RootSystem() = default;

  std::string label_;
  int rank_ = 0;
  IntMat cartan_{};
  int coxeter_number_ = 0;
  std::vector<Root> positive_;
  std::vector<long long> length_units_;  // parallel to positive_
  std::vector<Coeffs> coroots_;          // parallel to positive_
  int highest_index_ = 0;
};

}  // namespace alcove
