#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

// The spherical Weyl group W0, fully enumerated at construction. Elements are
// referred to by index; index 0 is the identity. Every element carries its
// integer matrix action on coweight coordinates and one canonical reduced word
// (the lexicographically least one).
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  int size() const { return static_cast<int>(coweight_.size()); }
  int identity() const { return 0; }
  int simple(int i) const;  // element index of s_i, i in 1..rank
  int longest() const { return longest_; }

  int length(int w) const { return lengths_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }  // letters 1..rank
  std::string word_string(int w) const;                            // "s1 s2", "e"
  const IntMat& coweight_matrix(int w) const { return coweight_[w]; }
  const IntMat& coroot_matrix(int w) const { return coroot_[w]; }

  int multiply(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  // d(u, v) = length(u^{-1} v), the gallery distance in the spherical complex.
  int distance(int u, int v) const { return lengths_[multiply(inverse_[u], v)]; }

  // w acting on a root (either sign) / a coroot-lattice vector.
  Root apply(int w, const Root& r) const;
  Coeffs apply_coroot(int w, const Coeffs& mu) const { return mat_apply(coroot_[w], mu); }

  // The reflection r_alpha for a positive root alpha, as a group element.
  int reflection(const Root& alpha) const;
  bool is_reflection(int w) const { return reflection_root_[w] >= 0; }
  // The positive root whose reflection this element is, if any.
  std::optional<Root> root_of_reflection(int w) const;

  // The unique positive root alpha with w = r_alpha * u (left convention),
  // empty if u and w are not related by a reflection. The left convention is
  // the one matching the edge labels of the Bruhat moment graph.
  std::optional<Root> reflection_between(int u, int w) const;

  // Side of the chamber of v with respect to H_{alpha,0}: sign of
  // pair(alpha, v(x0)) in {+1,-1}; never 0 since x0 is regular.
  int chamber_side(const Root& alpha, int v) const;
  int chamber_side_class(int cls, int v) const { return side_class_[cls][v]; }

  // (sign, class) of w applied to the positive root of the given class.
  const std::pair<int, int>& root_action(int w, int cls) const { return root_action_[w][cls]; }

  // The unique element whose chamber matches a sign vector over the positive
  // roots (sides[i] = ±1 for positive_roots()[i]).
  int chamber_from_sides(const std::vector<int>& sides) const;

  // Display order used in all serialized output: by (length, lex word).
  const std::vector<int>& display_order() const { return display_order_; }

  int element_from_word(const std::vector<int>& letters) const;  // letters 1..rank
  std::vector<std::vector<int>> reduced_words(int w) const;      // all of them

 private:
  int index_of(const IntMat& m) const;

  const RootSystem* rs_;
  std::vector<IntMat> coweight_;
  std::vector<IntMat> coroot_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  std::vector<int> reflection_root_;            // class index or -1
  std::vector<int> reflection_by_class_;        // class index -> element
  std::vector<Coeffs> rowsum_;                  // M_w * (1,...,1), for chamber sides
  std::vector<std::vector<std::pair<int, int>>> root_action_;  // [w][class] = (sign, class)
  std::vector<std::vector<int>> side_class_;                    // [class][v] = ±1
  std::vector<int> display_order_;
  std::vector<int> simple_;  // 1-based, simple_[i] = element index of s_i
  int longest_ = 0;
};

}  // namespace alcove
