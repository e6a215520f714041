#pragma once

#include <cstdint>

#include "morifan/weight_system.hpp"

namespace morifan {

// Divisor class = rational coordinate vector in the chosen basis of Pic.
using DivisorClass = RatVec;

Cone effective_cone(const WeightSystem& ws);

// Intersection over i of the cones spanned by the classes with index != i.
Cone moving_cone(const WeightSystem& ws);

// Nef cone = the GIT-fan chamber whose relative interior contains the ample
// class; requires the weight system to carry one.
Cone nef_cone(const WeightSystem& ws);

// The unique fan cone whose relative interior contains x (the origin cone for
// x = 0). Throws Errc::NotEffective when x is outside the fan's support.
const Cone& fan_cone_containing(const Fan& fan, const RatVec& x);

// Number of monomials u >= 0 with sum_i u_i w_i = D; the dimension of the
// weight-D graded piece of the Cox ring. Counting stops with
// Errc::ResourceLimit once `ceiling` solutions are exceeded.
std::uint64_t h0(const WeightSystem& ws, const DivisorClass& D, std::uint64_t ceiling = 1000000);

struct ZariskiDecomposition {
  DivisorClass positive;              // P = D - N, lies in the moving cone
  RatVec negative_coefficients;       // a_i = min of u_i over the fiber polytope
  DivisorClass negative;              // N = sum a_i w_i
  Cone cone;                          // fan cone whose relative interior contains D
};

// Per-generator exact LP minima over { u >= 0 : sum u_i w_i = D }. Throws
// Errc::NotEffective when D is outside the effective cone.
ZariskiDecomposition zariski(const WeightSystem& ws, const DivisorClass& D);

struct ChamberInfo {
  Cone cone;
  int dim = 0;
  ConeKind kind = ConeKind::Origin;
  Cone positive_face;                    // face of `cone` holding the positive parts
  std::vector<int> exceptional_indices;  // generators with a_i > 0 on the cone's interior
};

ChamberInfo chamber_info(const WeightSystem& ws, const DivisorClass& D);

// True iff the two classes lie in the relative interior of the same fan cone.
// Computed by both the chamber route and the GIT-signature route, which must
// agree.
bool strong_mori_equivalent(const WeightSystem& ws, const DivisorClass& a, const DivisorClass& b);

}  // namespace morifan
