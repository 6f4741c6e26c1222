#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "basiclab/core.hpp"

// Basic-decomposition machinery over finite point sets: exact solvability of
// f(x) = sum_k phi_k(x_k), minimum sup-norm decomposition via linear
// programming, norm-preserving extension, and the E-operator certificate.

namespace basiclab {

// Finite table for one axis, keys sorted ascending.
struct AxisTable {
  std::vector<std::pair<double, double>> entries;  // (key, value)

  double sup_norm() const;
  // Exact-key lookup; throws if the key is absent.
  double value_at(double key) const;
  // Exact-key lookup defaulting to 0 for absent keys.
  double value_or_zero(double key) const;
};

struct CoordinateFunctionFamily {
  std::vector<AxisTable> axes;  // one per axis, index k-1

  double norm() const;  // max over axes of the axis sup-norm
  // Sum of per-axis values at the coordinates of x (exact keys).
  double evaluate(const Point& x) const;
};

// Rows: one per point; columns: one per (axis, distinct value), axis-major
// with values ascending; each row has exactly dim ones.
struct IncidenceSystem {
  std::vector<std::pair<int, double>> columns;  // (axis k, value)
  std::vector<std::vector<int>> row_columns;    // column indices per point
  std::vector<double> rhs;
  int dim = 0;
};

struct MinimaxOutcome {
  enum class Status { Optimal, Infeasible };
  Status status = Status::Infeasible;
  double value = 0.0;
  std::optional<CoordinateFunctionFamily> family;
};

struct ETrace {
  // Y_0 = X down to the fixpoint, as indices into the input order.
  std::vector<std::vector<std::size_t>> stages;
  bool empties = false;
  std::size_t l = 0;  // first index with Y_l equal to the fixpoint
};

IncidenceSystem build_incidence(const PointSet& X, const std::vector<double>& f);

// Decides consistency by Gaussian elimination with partial pivoting; when
// consistent returns the minimal-Euclidean-norm solution as a family.
std::optional<CoordinateFunctionFamily> solve_exact(const PointSet& X,
                                                    const std::vector<double>& f,
                                                    double tau_res = 1e-7);

// minimize t  s.t.  sum_k phi_k(x_k) = f(x) on X,  |phi_k(v)| <= t.
MinimaxOutcome min_supnorm(const PointSet& X, const std::vector<double>& f);

// Nearest-key extension (ties toward the smaller key); never increases the
// axis sup-norm. k is 1-based.
double extend(const CoordinateFunctionFamily& family, int k, double v);

// Keeps the points all of whose axis-fibers within Y contain >= 2 points.
PointSet e_step(const PointSet& Y);

// Iterates e_step to its fixpoint; empties == true certifies basicness.
ETrace e_iterate(const PointSet& X);

// Plane oracle: true iff the multigraph on X_1 ⊔ X_2 with one edge per
// point is acyclic.
bool is_forest(const PointSet& X);

}  // namespace basiclab
