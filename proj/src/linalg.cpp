#include "morifan/linalg.hpp"

namespace morifan {

namespace {

// Reduced row echelon form in place. Returns pivot column indices.
std::vector<int> rref(RatMat& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (int j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_of(const RatMat& rows) {
  if (rows.empty()) return 0;
  RatMat m = rows;
  return static_cast<int>(rref(m, static_cast<int>(rows[0].size())).size());
}

int rank_of_int(const std::vector<IntVec>& rows) {
  RatMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rat(r));
  return rank_of(m);
}

std::vector<IntVec> kernel_basis(const RatMat& rows, int ncols) {
  RatMat m = rows;
  std::vector<int> pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<IntVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows, int ncols) {
  RatMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rat(r));
  return kernel_basis(m, ncols);
}

std::optional<RatVec> solve(const RatMat& rows, const RatVec& rhs) {
  int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  RatMat m;
  m.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVec r = rows[i];
    r.push_back(rhs[i]);
    m.push_back(std::move(r));
  }
  std::vector<int> pivots = rref(m, ncols + 1);
  for (int p : pivots)
    if (p == ncols) return std::nullopt;  // inconsistent: pivot in rhs column
  RatVec x(ncols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][ncols];
  return x;
}

}  // namespace morifan
