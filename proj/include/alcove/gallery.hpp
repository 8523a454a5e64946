#pragma once

#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

// An alcove-to-alcove gallery: start alcove, type word over the affine
// letters 0..n, and per-step fold state. Step i (1-based) goes from alcove
// c_{i-1} through its type-letters[i-1] panel; a crossed step moves to the
// s-neighbor, a folded step repeats c_{i-1}. Folding at a panel is toggling
// its crossed flag; this is exactly the reflect-the-tail operation, since
// reflections are type preserving.
struct Gallery {
  Alcove start{};
  std::vector<int> letters;
  std::vector<bool> crossed;

  int num_steps() const { return static_cast<int>(letters.size()); }
  // Alcove count, counted with multiplicity (the paper's length n+1).
  int alcove_count() const { return num_steps() + 1; }
  bool is_unfolded() const;
  std::vector<int> fold_indices() const;  // 1-based, increasing

  bool operator==(const Gallery&) const = default;
};

// The ordered parallelism classes of the walls a gallery is folded in.
struct FoldingPattern {
  std::vector<Root> roots;

  bool operator==(const FoldingPattern&) const = default;
};

Gallery gallery_from_word(const Alcove& start, const std::vector<int>& letters);

// c_0, ..., c_m.
std::vector<Alcove> alcove_sequence(const AffineComplex& cx, const Gallery& g);
Alcove end_alcove(const AffineComplex& cx, const Gallery& g);

// The wall of the gallery's i-th panel (1-based), folded or not.
Hyperplane step_wall(const AffineComplex& cx, const Gallery& g, int i);

// True iff g is unfolded and its step count equals ell(start^{-1} end);
// equivalently each separating wall is crossed exactly once.
bool is_minimal(const AffineComplex& cx, const Gallery& g);

// (step index, wall) for every crossed step; folded steps are excluded.
std::vector<std::pair<int, Hyperplane>> crossings(const AffineComplex& cx, const Gallery& g);

// Fold (or unfold) at panel i, 1-based. Involutive; folds commute.
Gallery fold_at(const Gallery& g, int i);
// Fold at each index of idxs (1-based); order-independent.
Gallery fold_set(const Gallery& g, const std::vector<int>& idxs);

FoldingPattern pattern_of(const AffineComplex& cx, const Gallery& g);

// g1 followed by g2 transported to g1's end; g2 must start at c_f.
Gallery concatenate(const AffineComplex& cx, const Gallery& g1, const Gallery& g2);

}  // namespace alcove
