#pragma once

#include "morifan/types.hpp"

namespace morifan {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVec x;       // optimal point (valid when Optimal; feasible point when Unbounded)
  Rat objective;  // c . x (valid when Optimal)
};

// min c.x  subject to  A x = b, x >= 0. Exact rational two-phase simplex with
// Bland's rule, so termination needs no tolerances and cannot cycle.
LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c);

// Feasibility of A x = b, x >= 0.
LpResult lp_feasible(const RatMat& A, const RatVec& b);

// Mixed system over FREE variables y (internally split as differences of
// nonnegative variables):  rows_ge . y >= rhs_ge  and  rows_eq . y = rhs_eq.
struct FreeSystemResult {
  bool feasible = false;
  RatVec y;
};
FreeSystemResult solve_free_system(const RatMat& rows_ge, const RatVec& rhs_ge,
                                   const RatMat& rows_eq, const RatVec& rhs_eq, int nvars);

}  // namespace morifan
