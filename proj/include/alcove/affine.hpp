#pragma once

#include <vector>

#include "alcove/weyl.hpp"

namespace alcove {

// An element t^lambda * w of the affine group W = T ⋊ W0: the map
// x ↦ w(x) + lambda, with lambda in simple-coroot coordinates and w an index
// into the ambient WeylGroup. Alcoves are identified with group elements via
// the simply transitive action g ↦ g * c_f.
struct AffineElement {
  Coeffs translation{};
  int spherical = 0;

  auto operator<=>(const AffineElement&) const = default;
};

using Alcove = AffineElement;

// A wall H_{alpha,k}, stored by its parallelism class (a positive root) and
// integer level.
struct Hyperplane {
  Root root;
  long long level = 0;

  auto operator<=>(const Hyperplane&) const = default;
};

// The type-`letter` panel of an alcove; letter 0 names the affine generator
// s0 = t^{theta^vee} s_theta, letters 1..n the linear ones.
struct Panel {
  Alcove base;
  int letter = 0;
};

// Group operations and exact hyperplane geometry of the affine Coxeter
// complex. Interior points are handled as integer numerator vectors over the
// fixed denominator h (the Coxeter number), so every side/strip test is
// integer arithmetic.
class AffineComplex {
 public:
  AffineComplex(const RootSystem& rs, const WeylGroup& group);

  const RootSystem& roots() const { return *rs_; }
  const WeylGroup& weyl() const { return *w0_; }
  int num_letters() const { return rs_->rank() + 1; }  // generators s0..sn

  AffineElement identity() const { return {}; }
  AffineElement generator(int letter) const;  // letter in 0..rank
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement multiply_letter(const AffineElement& a, int letter) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement translation(const Coeffs& lambda) const { return {lambda, 0}; }

  int spherical_direction(const AffineElement& a) const { return a.spherical; }

  // Numerators over h of the coweight coordinates of the alcove's interior
  // point g(x0); never divisible by h in any pairing against a root.
  Coeffs interior_numerators(const Alcove& a) const;
  Point interior_point(const Alcove& a) const;
  // h * pair(alpha, interior point).
  long long pair_numerator(const Root& alpha, const Alcove& a) const;

  int side(const Hyperplane& h, const Alcove& a) const;  // ±1
  // The unique wall separating two adjacent alcoves (b = a * s for an affine
  // generator s). Throws BadArgument for non-adjacent input.
  Hyperplane separating_wall(const Alcove& a, const Alcove& b) const;
  Hyperplane wall_of_panel(const Panel& p) const;

  // Number of walls separating c_f from g * c_f (the length of g).
  long long ell(const AffineElement& g) const;

  // i with a contained in the strip S_{alpha,i}; the fundamental alcove has
  // strip index 0 for every class.
  long long strip_index(const Root& alpha, const Alcove& a) const;

  // The v with a ⊆ C_v (Weyl chamber at the origin).
  int chamber_of(const Alcove& a) const;
  // a ⊆ C_{mu,v}, the local Weyl chamber at lattice point mu with direction v.
  bool in_local_chamber(const Alcove& a, const Coeffs& mu, int v) const;
  // The unique v with a ⊆ C_{mu,v}.
  int local_chamber_of(const Alcove& a, const Coeffs& mu) const;
  // a ⊆ C~_{v,k}, the k-shrunken chamber: a lies in C_v at least k walls past
  // every wall through the chamber's cone point, i.e. pair(v(alpha_i), pt) > k
  // in the signed sense for every simple i.
  bool in_shrunken_chamber(const Alcove& a, int v, long long k) const;

  // Lexicographically least reduced word of g over the letters 0..rank.
  std::vector<int> canonical_word(const AffineElement& g) const;
  AffineElement element_from_word(const std::vector<int>& letters) const;

  // All alcoves with ell <= radius, sorted by (ell, translation, direction).
  std::vector<Alcove> ball(long long radius) const;

  // Reduced words of g in lexicographic order; stops after `cap` words.
  std::vector<std::vector<int>> reduced_words(const AffineElement& g, size_t cap) const;
  // Number of reduced words, saturated at `cap`.
  size_t reduced_word_count(const AffineElement& g, size_t cap) const;

 private:
  const RootSystem* rs_;
  const WeylGroup* w0_;
  std::vector<Coeffs> rowsum_;      // per W0 element, M_w * (1,...,1)
  Coeffs theta_coroot_{};           // translation part of s0
  int theta_reflection_ = 0;        // spherical part of s0
  long long h_ = 0;
  std::vector<int> chamber_lookup_;  // sign bitmask over positive roots -> W0 index
};

long long floor_div(long long num, long long den);

}  // namespace alcove
