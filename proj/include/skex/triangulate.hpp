#pragma once

#include <array>
#include <vector>

#include "skex/geom.hpp"

namespace skex {

/// Ear-clipping triangulation of a polygon with holes. rings[0] is the outer
/// boundary (CCW); the rest are holes (CW). Returns triangles indexing the
/// concatenation of all ring points, CCW. Only input vertices are used, so
/// boundary edges of the triangulation are exactly the ring segments.
std::vector<std::array<int, 3>> triangulate_polygon(const std::vector<std::vector<Vec2>>& rings);

}  // namespace skex
