#pragma once

#include "alcove/gallery.hpp"

namespace alcove {

// The Weyl chamber orientation phi_w: the positive side of any wall H_{alpha,k}
// is the side its boundary direction shares with the chamber of w at infinity.
// Evaluating through side(.) is legitimate exactly because Weyl chamber
// orientations are wall-consistent and periodic, so the sign depends only on
// (parallelism class, side).
struct WeylChamberOrientation {
  int direction = 0;  // W0 element index
};

// +1 iff a lies on the phi-positive side of h.
int orientation_sign(const AffineComplex& cx, const WeylChamberOrientation& o,
                     const Hyperplane& h, const Alcove& a);

// Step i of g must be crossed; true iff the crossing leaves the positive side.
bool crossing_is_positive(const AffineComplex& cx, const WeylChamberOrientation& o,
                          const Gallery& g, int i);

// Step i of g must be folded; true iff the repeated alcove sits on the
// positive side of the fold wall.
bool fold_is_positive(const AffineComplex& cx, const WeylChamberOrientation& o,
                      const Gallery& g, int i);

// True iff every folded step is positive (vacuously true when unfolded).
bool gallery_is_positively_folded(const AffineComplex& cx, const WeylChamberOrientation& o,
                                  const Gallery& g);

}  // namespace alcove
