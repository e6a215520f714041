#pragma once

#include <optional>

#include "morifan/types.hpp"

namespace morifan {

// Exact Gaussian elimination utilities. Rows of a RatMat are vectors; the
// matrix acts on column vectors by row-wise dot products.

int rank_of(const RatMat& rows);
int rank_of_int(const std::vector<IntVec>& rows);

// Basis of { x : r . x = 0 for every row r }, as primitive integer vectors in
// a deterministic order (free-column parametrization of the RREF).
std::vector<IntVec> kernel_basis(const RatMat& rows, int ncols);
std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows, int ncols);

// One solution of rows . x = rhs, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& rows, const RatVec& rhs);

}  // namespace morifan
