#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basiclab/core.hpp"

// Construction, validation and detection of Sternfeld arrays: grid-indexed
// families of pairwise distinct points in R^{2n} where voxels adjacent along
// axis t agree in coordinate xi(t).

namespace basiclab {

struct SternfeldArray {
  GridShape shape;
  std::vector<Point> points;  // lex order (last axis fastest)

  const Point& at(const Voxel& v) const {
    return points[lex_rank(v, shape)];
  }
};

struct Violation {
  enum class Kind { Duplicate, Mismatch };
  Kind kind;
  Voxel i, j;
  int axis = 0;        // t, mismatch only
  int coordinate = 0;  // xi(t), mismatch only
  double value_i = 0.0, value_j = 0.0;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
};

enum class BoltMode { AllDistinct, ConsecutiveDistinct };

// A lightning bolt in the plane: first segment vertical, consecutive
// segments alternate vertical/horizontal.
struct PlaneBolt {
  BoltMode mode = BoltMode::AllDistinct;
  std::vector<Point> points;
};

// Checks point count, dimensions, pairwise distinctness and every
// xi-equality; ok iff the candidate is a Sternfeld array.
ValidationReport validate_array(const GridShape& shape,
                                const std::vector<Point>& points_lex,
                                double eps = 0.0);

// Integer-grid bolt a_{2j-1} = (j, j), a_{2j} = (j, j+1); m >= 2.
SternfeldArray gen_plane_zigzag(int m);

// Size-4 array in R^{2n} whose image is exactly {0,1}^{2n}.
SternfeldArray gen_hypercube(int n);

// Product of n plane arrays of common size m; coordinates (2t-1, 2t) of a_i
// equal the i_t-th point of factor t shifted by offsets[t]. Composite
// duplicates are rejected as degenerate.
SternfeldArray gen_product(const std::vector<SternfeldArray>& factors,
                           const std::vector<std::array<double, 2>>& offsets);

// Exhaustive DFS for a bolt of length >= target_len. The first move is
// vertical unless allow_either_first_move is set. Throws BudgetExceeded if
// the node budget runs out before the search space is exhausted.
std::optional<PlaneBolt> detect_plane_bolt(const PointSet& X, int target_len,
                                           BoltMode mode,
                                           std::uint64_t budget = 1000000,
                                           bool allow_either_first_move = false);

// Best-effort backtracking assignment of voxels to distinct points of X
// satisfying all xi-equalities. Throws BudgetExceeded as above.
std::optional<SternfeldArray> detect_grid_array(const PointSet& X,
                                                const GridShape& shape,
                                                std::uint64_t budget = 1000000);

// Post-hoc re-check of a bolt's own invariants (alternation, first segment
// vertical, distinctness per mode).
bool bolt_satisfies_mode(const PlaneBolt& bolt, double eps = 0.0,
                         bool allow_either_first_move = false);

}  // namespace basiclab
