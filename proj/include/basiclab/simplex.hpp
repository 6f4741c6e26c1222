#pragma once

#include <cstdint>
#include <vector>

// Dense two-phase primal simplex with Bland's anti-cycling rule for
// standard-form problems: minimize c.x subject to A x = b, x >= 0.
// Instances here are small and dense; determinism matters more than speed.

namespace basiclab {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  double objective = 0.0;
  std::vector<double> x;
  std::uint64_t iterations = 0;
};

LpSolution solve_standard_form(std::vector<std::vector<double>> A,
                               std::vector<double> b,
                               const std::vector<double>& c,
                               std::uint64_t max_iterations = 1000000,
                               double tol = 1e-9);

}  // namespace basiclab
