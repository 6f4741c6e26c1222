#include "basiclab/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "basiclab/errors.hpp"
#include "basiclab/simplex.hpp"

namespace basiclab {

double AxisTable::sup_norm() const {
  double best = 0.0;
  for (const auto& [k, v] : entries) best = std::max(best, std::abs(v));
  return best;
}

double AxisTable::value_at(double key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw InvalidInput("AxisTable::value_at: key not in table");
}

double AxisTable::value_or_zero(double key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return 0.0;
}

double CoordinateFunctionFamily::norm() const {
  double best = 0.0;
  for (const AxisTable& t : axes) best = std::max(best, t.sup_norm());
  return best;
}

double CoordinateFunctionFamily::evaluate(const Point& x) const {
  if (x.size() != axes.size())
    throw InvalidInput("CoordinateFunctionFamily::evaluate: dim mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < axes.size(); ++k) s += axes[k].value_at(x[k]);
  return s;
}

IncidenceSystem build_incidence(const PointSet& X, const std::vector<double>& f) {
  if (f.size() != X.points.size())
    throw InvalidInput("build_incidence: |f| must equal |X|");
  IncidenceSystem sys;
  sys.dim = X.dim;
  sys.rhs = f;

  std::vector<std::vector<double>> axis_values(X.dim);
  for (int k = 1; k <= X.dim; ++k) axis_values[k - 1] = project(X, k);

  std::vector<int> axis_offset(X.dim + 1, 0);
  for (int k = 0; k < X.dim; ++k) {
    for (double v : axis_values[k]) sys.columns.emplace_back(k + 1, v);
    axis_offset[k + 1] = axis_offset[k] + static_cast<int>(axis_values[k].size());
  }

  sys.row_columns.reserve(X.points.size());
  for (const Point& p : X.points) {
    std::vector<int> cols(X.dim);
    for (int k = 0; k < X.dim; ++k) {
      const auto& vals = axis_values[k];
      int idx = -1;
      if (X.eps <= 0.0) {
        const auto it = std::lower_bound(vals.begin(), vals.end(), p[k]);
        idx = static_cast<int>(it - vals.begin());
      } else {
        for (std::size_t j = 0; j < vals.size(); ++j)
          if (coords_equal(vals[j], p[k], X.eps)) {
            idx = static_cast<int>(j);
            break;
          }
      }
      cols[k] = axis_offset[k] + idx;
    }
    sys.row_columns.push_back(std::move(cols));
  }
  return sys;
}

namespace {

CoordinateFunctionFamily family_from_solution(const IncidenceSystem& sys,
                                              const std::vector<double>& phi,
                                              int dim) {
  CoordinateFunctionFamily fam;
  fam.axes.assign(dim, {});
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    const auto& [axis, value] = sys.columns[j];
    fam.axes[axis - 1].entries.emplace_back(value, phi[j]);
  }
  return fam;
}

// Solves (N^T N) z = N^T y for small dense N via Gaussian elimination.
std::vector<double> least_squares_project(
    const std::vector<std::vector<double>>& N, const std::vector<double>& y) {
  const int k = static_cast<int>(N.size());
  std::vector<std::vector<double>> G(k, std::vector<double>(k + 1, 0.0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      G[a][b] = std::inner_product(N[a].begin(), N[a].end(), N[b].begin(), 0.0);
    G[a][k] = std::inner_product(N[a].begin(), N[a].end(), y.begin(), 0.0);
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
    std::swap(G[col], G[piv]);
    if (G[col][col] == 0.0) continue;  // nullspace basis is independent
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = G[r][col] / G[col][col];
      for (int c2 = col; c2 <= k; ++c2) G[r][c2] -= f * G[col][c2];
    }
  }
  std::vector<double> z(k, 0.0);
  for (int a = 0; a < k; ++a)
    if (G[a][a] != 0.0) z[a] = G[a][k] / G[a][a];
  return z;
}

}  // namespace

std::optional<CoordinateFunctionFamily> solve_exact(const PointSet& X,
                                                    const std::vector<double>& f,
                                                    double tau_res) {
  const IncidenceSystem sys = build_incidence(X, f);
  const int rows = static_cast<int>(sys.row_columns.size());
  const int cols = static_cast<int>(sys.columns.size());

  if (rows == 0) {
    CoordinateFunctionFamily fam;
    fam.axes.assign(X.dim, {});
    return fam;
  }

  std::vector<std::vector<double>> M(rows, std::vector<double>(cols + 1, 0.0));
  for (int r = 0; r < rows; ++r) {
    for (int j : sys.row_columns[r]) M[r][j] += 1.0;
    M[r][cols] = sys.rhs[r];
  }

  // Forward elimination with partial pivoting; track pivot columns.
  double max_pivot = 0.0;
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<bool> is_pivot_col(cols, false);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    double best = 0.0;
    for (int r = rank; r < rows; ++r)
      if (std::abs(M[r][col]) > best) {
        best = std::abs(M[r][col]);
        piv = r;
      }
    max_pivot = std::max(max_pivot, best);
    if (piv < 0 || best <= 1e-9 * std::max(1.0, max_pivot)) continue;
    std::swap(M[rank], M[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const double factor = M[r][col] / M[rank][col];
      if (factor == 0.0) continue;
      for (int c2 = col; c2 <= cols; ++c2) M[r][c2] -= factor * M[rank][c2];
    }
    pivot_col_of_row[rank] = col;
    is_pivot_col[col] = true;
    ++rank;
  }

  const double scale = std::max(1.0, max_pivot);
  for (int r = rank; r < rows; ++r)
    if (std::abs(M[r][cols]) > 1e-9 * scale) return std::nullopt;

  // Particular solution with free variables at zero.
  std::vector<double> x(cols, 0.0);
  for (int r = 0; r < rank; ++r) {
    const int pc = pivot_col_of_row[r];
    x[pc] = M[r][cols] / M[r][pc];
  }

  // Nullspace basis, one vector per free column.
  std::vector<std::vector<double>> null_basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot_col[fc]) continue;
    std::vector<double> v(cols, 0.0);
    v[fc] = 1.0;
    for (int r = 0; r < rank; ++r) {
      const int pc = pivot_col_of_row[r];
      v[pc] = -M[r][fc] / M[r][pc];
    }
    null_basis.push_back(std::move(v));
  }

  // Minimal-norm representative: subtract the nullspace projection.
  if (!null_basis.empty()) {
    const std::vector<double> z = least_squares_project(null_basis, x);
    for (std::size_t a = 0; a < null_basis.size(); ++a)
      for (int j = 0; j < cols; ++j) x[j] -= z[a] * null_basis[a][j];
  }

  for (int r = 0; r < rows; ++r) {
    double s = 0.0;
    for (int j : sys.row_columns[r]) s += x[j];
    if (std::abs(s - sys.rhs[r]) > tau_res) return std::nullopt;
  }
  return family_from_solution(sys, x, X.dim);
}

MinimaxOutcome min_supnorm(const PointSet& X, const std::vector<double>& f) {
  const IncidenceSystem sys = build_incidence(X, f);
  const int P = static_cast<int>(sys.row_columns.size());
  const int V = static_cast<int>(sys.columns.size());

  MinimaxOutcome out;
  if (P == 0) {
    out.status = MinimaxOutcome::Status::Optimal;
    out.value = 0.0;
    CoordinateFunctionFamily fam;
    fam.axes.assign(X.dim, {});
    out.family = std::move(fam);
    return out;
  }

  // Standard form: phi_j = p_j - q_j, then
  //   sum_{j in row} (p_j - q_j)           = f(x)   (P rows)
  //   p_j - q_j - t + s1_j                 = 0      (V rows)
  //  -p_j + q_j - t + s2_j                 = 0      (V rows)
  // Columns: p (V), q (V), t (1), s1 (V), s2 (V).
  const int n_vars = 4 * V + 1;
  const int t_col = 2 * V;
  const int rows = P + 2 * V;
  std::vector<std::vector<double>> A(rows, std::vector<double>(n_vars, 0.0));
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(n_vars, 0.0);
  c[t_col] = 1.0;

  for (int r = 0; r < P; ++r) {
    for (int j : sys.row_columns[r]) {
      A[r][j] += 1.0;
      A[r][V + j] -= 1.0;
    }
    b[r] = sys.rhs[r];
  }
  for (int j = 0; j < V; ++j) {
    const int up = P + j;
    A[up][j] = 1.0;
    A[up][V + j] = -1.0;
    A[up][t_col] = -1.0;
    A[up][2 * V + 1 + j] = 1.0;
    const int dn = P + V + j;
    A[dn][j] = -1.0;
    A[dn][V + j] = 1.0;
    A[dn][t_col] = -1.0;
    A[dn][2 * V + 1 + V + j] = 1.0;
  }

  const LpSolution lp = solve_standard_form(std::move(A), std::move(b), c);
  switch (lp.status) {
    case LpStatus::Infeasible:
      out.status = MinimaxOutcome::Status::Infeasible;
      return out;
    case LpStatus::IterationLimit:
      throw SolverError("min_supnorm: simplex iteration cap exceeded");
    case LpStatus::Unbounded:
      throw SolverError("min_supnorm: unexpected unbounded LP");
    case LpStatus::Optimal:
      break;
  }

  std::vector<double> phi(V, 0.0);
  for (int j = 0; j < V; ++j) phi[j] = lp.x[j] - lp.x[V + j];
  out.status = MinimaxOutcome::Status::Optimal;
  out.value = lp.objective;
  out.family = family_from_solution(sys, phi, X.dim);
  return out;
}

double extend(const CoordinateFunctionFamily& family, int k, double v) {
  if (k < 1 || k > static_cast<int>(family.axes.size()))
    throw InvalidInput("extend: axis out of range");
  const AxisTable& table = family.axes[k - 1];
  if (table.entries.empty()) throw InvalidInput("extend: empty axis table");
  double best_key = table.entries.front().first;
  double best_val = table.entries.front().second;
  double best_dist = std::abs(v - best_key);
  for (const auto& [key, val] : table.entries) {
    const double d = std::abs(v - key);
    if (d < best_dist || (d == best_dist && key < best_key)) {
      best_dist = d;
      best_key = key;
      best_val = val;
    }
  }
  return best_val;
}

PointSet e_step(const PointSet& Y) {
  PointSet out;
  out.dim = Y.dim;
  out.eps = Y.eps;
  for (const Point& p : Y.points) {
    bool keep = true;
    for (int k = 0; k < Y.dim && keep; ++k) {
      int fiber = 0;
      for (const Point& q : Y.points)
        if (coords_equal(p[k], q[k], Y.eps)) ++fiber;
      if (fiber < 2) keep = false;
    }
    if (keep) out.points.push_back(p);
  }
  return out;
}

ETrace e_iterate(const PointSet& X) {
  ETrace trace;
  std::vector<std::size_t> current(X.points.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  trace.stages.push_back(current);

  PointSet Y = X;
  std::vector<std::size_t> idx = current;
  while (true) {
    PointSet Z;
    Z.dim = Y.dim;
    Z.eps = Y.eps;
    std::vector<std::size_t> next_idx;
    const PointSet stepped = e_step(Y);
    // Recover indices: e_step preserves input order.
    std::size_t pos = 0;
    for (std::size_t a = 0; a < Y.points.size(); ++a) {
      if (pos < stepped.points.size() &&
          points_equal(Y.points[a], stepped.points[pos], Y.eps)) {
        next_idx.push_back(idx[a]);
        Z.points.push_back(Y.points[a]);
        ++pos;
      }
    }
    if (Z.points.size() == Y.points.size()) break;  // fixpoint reached
    trace.stages.push_back(next_idx);
    Y = std::move(Z);
    idx = std::move(next_idx);
  }
  trace.l = trace.stages.size() - 1;
  trace.empties = trace.stages.back().empty();
  return trace;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  // Returns false when a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_forest(const PointSet& X) {
  if (X.dim != 2) throw InvalidInput("is_forest: dim must be 2");
  const std::vector<double> xs = project(X, 1);
  const std::vector<double> ys = project(X, 2);
  const auto index_of = [&X](const std::vector<double>& vals, double v) {
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (coords_equal(vals[j], v, X.eps)) return static_cast<int>(j);
    throw InvalidInput("is_forest: projection lookup failed");
  };
  UnionFind uf(static_cast<int>(xs.size() + ys.size()));
  for (const Point& p : X.points) {
    const int a = index_of(xs, p[0]);
    const int b = static_cast<int>(xs.size()) + index_of(ys, p[1]);
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

}  // namespace basiclab
