#pragma once

#include <optional>

#include "morifan/json_io.hpp"

namespace morifan {

// Cross-section of a rank-3 GIT fan by the affine plane where the pairing
// against the effective cone's facet-covector sum equals 1. Every maximal
// cone meets it in a polygon with exact rational vertices.
struct SlicePolygon {
  Cone cone;
  ConeKind kind = ConeKind::Chamber;
  std::vector<RatVec> vertices;  // cyclic order
};

struct SliceCorner {
  IntVec ray;
  std::vector<std::string> labels;  // generator names sitting on this ray
};

struct SliceDoc {
  IntVec plane;  // covector u; the slice is { x : u.x = 1 }
  std::vector<SliceCorner> corners;
  std::vector<SlicePolygon> polygons;
  std::optional<std::vector<RatVec>> overlay;  // slice of Eff restricted to a subspace
};

// subspace: one or two rank-3 vectors spanning the overlay subspace.
SliceDoc slice_fan(const WeightSystem& ws, const std::vector<IntVec>* subspace = nullptr);

Json slice_json(const SliceDoc& doc);
std::string slice_svg(const SliceDoc& doc);

}  // namespace morifan
