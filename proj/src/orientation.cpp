#include "alcove/orientation.hpp"

namespace alcove {

namespace {

// Sign of the orientation at step i's panel, seen from c_{i-1}. For a crossed
// step this decides crossing positivity; for a folded step the repeated alcove
// is c_{i-1} itself, so it decides fold positivity as well.
int step_sign(const AffineComplex& cx, const WeylChamberOrientation& o, const Gallery& g,
              int i) {
  Alcove cur = g.start;
  for (int j = 0; j + 1 < i; ++j)
    if (g.crossed[j]) cur = cx.multiply_letter(cur, g.letters[j]);
  Hyperplane wall = cx.separating_wall(cur, cx.multiply_letter(cur, g.letters[i - 1]));
  return orientation_sign(cx, o, wall, cur);
}

}  // namespace

int orientation_sign(const AffineComplex& cx, const WeylChamberOrientation& o,
                     const Hyperplane& h, const Alcove& a) {
  return cx.side(h, a) == cx.weyl().chamber_side(h.root, o.direction) ? +1 : -1;
}

bool crossing_is_positive(const AffineComplex& cx, const WeylChamberOrientation& o,
                          const Gallery& g, int i) {
  if (i < 1 || i > g.num_steps())
    throw Error(ErrorCode::BadArgument, "step index out of range");
  if (!g.crossed[i - 1])
    throw Error(ErrorCode::BadArgument, "step is folded, not a crossing");
  return step_sign(cx, o, g, i) == +1;
}

bool fold_is_positive(const AffineComplex& cx, const WeylChamberOrientation& o,
                      const Gallery& g, int i) {
  if (i < 1 || i > g.num_steps())
    throw Error(ErrorCode::BadArgument, "step index out of range");
  if (g.crossed[i - 1])
    throw Error(ErrorCode::BadArgument, "step is a crossing, not a fold");
  return step_sign(cx, o, g, i) == +1;
}

bool gallery_is_positively_folded(const AffineComplex& cx, const WeylChamberOrientation& o,
                                  const Gallery& g) {
  for (int i = 1; i <= g.num_steps(); ++i)
    if (!g.crossed[i - 1] && !fold_is_positive(cx, o, g, i)) return false;
  return true;
}

}  // namespace alcove
