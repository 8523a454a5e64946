#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/orientation.hpp"

namespace alcove {

// Rank-2 picture of the tiled plane: alcove polygons shaded by chamber, wall
// lines with per-class +/- orientation decorations, gallery polylines with
// fold markers, optional shrunken-chamber overlay. All geometry decisions are
// made in exact coweight coordinates; the Euclidean embedding (standard
// angles: 120 degrees for A2, 135 for B2, 150 for G2) is applied only when
// writing coordinates.
struct RenderOptions {
  long long radius = 3;  // window half-width in wall levels
  std::optional<WeylChamberOrientation> orientation;
  std::vector<Gallery> galleries;
  std::optional<std::pair<int, long long>> shrunken;  // (chamber, level)
};

// Throws Error(Unsupported) for rank != 2.
std::string render_svg(const AffineComplex& cx, const RenderOptions& options);

}  // namespace alcove
