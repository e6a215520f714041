#include "morifan/simplex.hpp"

namespace morifan {

namespace {

// Dense tableau simplex. Columns 0..n-1 are structural, n..n+m-1 artificial.
// basis[i] holds the variable index basic in row i.
struct Tableau {
  int m, n;                 // constraints, structural variables
  RatMat t;                 // m rows by (n + m + 1) columns, last column = rhs
  std::vector<int> basis;
  RatVec cost;              // reduced-cost row, length n + m + 1 (last = -objective)
  int ncols_active;         // columns eligible for pivoting

  Rat& rhs(int i) { return t[i][n + m]; }

  void pivot(int row, int col) {
    Rat inv = Rat(1) / t[row][col];
    for (auto& v : t[row]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    if (cost[col] != 0) {
      Rat f = cost[col];
      for (int j = 0; j <= n + m; ++j) cost[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland: entering = lowest-index column with negative reduced cost;
  // leaving = lowest basic variable index among minimum-ratio rows.
  // Returns Optimal or Unbounded.
  LpStatus run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_active; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c) {
  int m = static_cast<int>(A.size());
  int n = m > 0 ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m, RatVec(n + m + 1, Rat(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (int j = 0; j < n; ++j) tab.t[i][j] = neg ? -A[i][j] : A[i][j];
    tab.t[i][n + i] = 1;
    tab.rhs(i) = neg ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  tab.cost.assign(n + m + 1, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) tab.cost[j] -= tab.t[i][j];
  tab.ncols_active = n + m;
  tab.run();  // bounded below by 0, cannot be unbounded
  if (tab.cost[n + m] != 0) return {LpStatus::Infeasible, {}, Rat(0)};

  // Drive leftover artificials out of the basis; a row with no structural
  // pivot available is redundant and can be zeroed out harmlessly.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) tab.pivot(i, col);
  }

  // Phase 2 with the real objective, artificial columns frozen.
  tab.cost.assign(n + m + 1, Rat(0));
  for (int j = 0; j < n; ++j) tab.cost[j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) continue;  // redundant row, structural cost 0 stays
    if (tab.cost[tab.basis[i]] == 0) continue;
    Rat f = tab.cost[tab.basis[i]];
    for (int j = 0; j <= n + m; ++j) tab.cost[j] -= f * tab.t[i][j];
  }
  tab.ncols_active = n;
  LpStatus st = tab.run();

  LpResult res;
  res.status = st;
  res.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs(i);
  res.objective = dot(c, res.x);
  return res;
}

LpResult lp_feasible(const RatMat& A, const RatVec& b) {
  int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  return solve_lp(A, b, RatVec(n, Rat(0)));
}

FreeSystemResult solve_free_system(const RatMat& rows_ge, const RatVec& rhs_ge,
                                   const RatMat& rows_eq, const RatVec& rhs_eq, int nvars) {
  // Variables: y = u - v with u, v >= 0, plus one slack per >= row.
  int nge = static_cast<int>(rows_ge.size());
  int neq = static_cast<int>(rows_eq.size());
  int ncols = 2 * nvars + nge;
  RatMat A;
  RatVec b;
  A.reserve(nge + neq);
  for (int i = 0; i < nge; ++i) {
    RatVec row(ncols, Rat(0));
    for (int j = 0; j < nvars; ++j) {
      row[j] = rows_ge[i][j];
      row[nvars + j] = -rows_ge[i][j];
    }
    row[2 * nvars + i] = -1;  // rows_ge.y - slack = rhs
    A.push_back(std::move(row));
    b.push_back(rhs_ge[i]);
  }
  for (int i = 0; i < neq; ++i) {
    RatVec row(ncols, Rat(0));
    for (int j = 0; j < nvars; ++j) {
      row[j] = rows_eq[i][j];
      row[nvars + j] = -rows_eq[i][j];
    }
    A.push_back(std::move(row));
    b.push_back(rhs_eq[i]);
  }
  LpResult lp = lp_feasible(A, b);
  FreeSystemResult res;
  res.feasible = lp.status == LpStatus::Optimal;
  if (res.feasible) {
    res.y.assign(nvars, Rat(0));
    for (int j = 0; j < nvars; ++j) res.y[j] = lp.x[j] - lp.x[nvars + j];
  }
  return res;
}

}  // namespace morifan
