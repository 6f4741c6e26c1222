#include "basiclab/simplex.hpp"

#include <cmath>
#include <limits>

#include "basiclab/errors.hpp"

namespace basiclab {

namespace {

// Tableau with columns [original vars | artificials | rhs]; basis holds the
// column index basic in each row.
struct Tableau {
  std::vector<std::vector<double>> rows;
  std::vector<int> basis;
  int n_total = 0;  // columns excluding rhs

  double& at(int r, int j) { return rows[r][j]; }
  double rhs(int r) const { return rows[r][n_total]; }

  void pivot(int r, int j) {
    const double p = rows[r][j];
    for (int col = 0; col <= n_total; ++col) rows[r][col] /= p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      const double factor = rows[i][j];
      if (factor == 0.0) continue;
      for (int col = 0; col <= n_total; ++col)
        rows[i][col] -= factor * rows[r][col];
    }
    basis[r] = j;
  }
};

// Bland's rule: entering = lowest-index column with negative reduced cost;
// leaving = ratio-test winner, ties broken by lowest basis column index.
// Returns Optimal when no entering column exists.
LpStatus run_simplex(Tableau& tab, std::vector<double>& obj_row,
                     double& obj_value, int n_usable, double tol,
                     std::uint64_t max_iterations, std::uint64_t& iterations) {
  const int m = static_cast<int>(tab.rows.size());
  while (true) {
    if (iterations++ > max_iterations) return LpStatus::IterationLimit;

    int enter = -1;
    for (int j = 0; j < n_usable; ++j)
      if (obj_row[j] < -tol) {
        enter = j;
        break;
      }
    if (enter < 0) return LpStatus::Optimal;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = tab.at(r, enter);
      if (a <= tol) continue;
      const double ratio = tab.rhs(r) / a;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && tab.basis[r] < tab.basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) return LpStatus::Unbounded;

    tab.pivot(leave, enter);
    const double factor = obj_row[enter];
    for (int col = 0; col < static_cast<int>(obj_row.size()); ++col)
      obj_row[col] -= factor * tab.rows[leave][col];
    obj_value += factor * tab.rhs(leave);
  }
}

}  // namespace

LpSolution solve_standard_form(std::vector<std::vector<double>> A,
                               std::vector<double> b,
                               const std::vector<double>& c,
                               std::uint64_t max_iterations, double tol) {
  const int m = static_cast<int>(A.size());
  const int n = m > 0 ? static_cast<int>(A[0].size()) : 0;
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
    throw InvalidInput("solve_standard_form: shape mismatch");

  LpSolution sol;
  if (m == 0) {
    sol.status = LpStatus::Optimal;
    sol.objective = 0.0;
    sol.x.assign(n, 0.0);
    return sol;
  }

  for (int r = 0; r < m; ++r)
    if (b[r] < 0.0) {
      for (double& v : A[r]) v = -v;
      b[r] = -b[r];
    }

  Tableau tab;
  tab.n_total = n + m;
  tab.rows.assign(m, std::vector<double>(tab.n_total + 1, 0.0));
  tab.basis.assign(m, 0);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) tab.rows[r][j] = A[r][j];
    tab.rows[r][n + r] = 1.0;  // artificial
    tab.rows[r][tab.n_total] = b[r];
    tab.basis[r] = n + r;
  }

  // Phase 1: minimize the sum of artificials. Reduced-cost row for the
  // all-artificial basis is minus the column sums.
  std::vector<double> obj(tab.n_total + 1, 0.0);
  double phase1 = 0.0;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= tab.n_total; ++j) obj[j] -= tab.rows[r][j];
    phase1 += tab.rhs(r);
  }
  for (int r = 0; r < m; ++r) obj[n + r] = 0.0;

  LpStatus st =
      run_simplex(tab, obj, phase1, n, tol, max_iterations, sol.iterations);
  if (st == LpStatus::IterationLimit) {
    sol.status = st;
    return sol;
  }
  if (phase1 > 1e-7) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive any remaining basic artificials out; a row with no usable entry
  // among the original columns is redundant and harmless at value 0.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    for (int j = 0; j < n; ++j)
      if (std::abs(tab.at(r, j)) > tol) {
        tab.pivot(r, j);
        break;
      }
  }

  // Phase 2 with the real objective: reduced costs c_j - c_B . T_j.
  std::vector<double> obj2(tab.n_total + 1, 0.0);
  for (int j = 0; j < n; ++j) obj2[j] = c[j];
  double value = 0.0;
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] >= n) continue;
    const double cb = c[tab.basis[r]];
    if (cb == 0.0) continue;
    for (int j = 0; j <= tab.n_total; ++j) obj2[j] -= cb * tab.rows[r][j];
    value += cb * tab.rhs(r);
  }
  for (int r = 0; r < m; ++r) obj2[tab.basis[r]] = 0.0;

  st = run_simplex(tab, obj2, value, n, tol, max_iterations, sol.iterations);
  sol.status = st;
  if (st != LpStatus::Optimal) return sol;

  sol.objective = 0.0;
  sol.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.rhs(r);
  for (int j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
  return sol;
}

}  // namespace basiclab
