#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Grid/index combinatorics (voxels, adjacency, xi, parity) and point-set
// primitives shared by the rest of the library. All types are immutable
// values after construction and all operations are pure.

namespace basiclab {

// Voxel coordinates are 1-based: each entry lies in [1, m].
using Voxel = std::vector<int>;
using Point = std::vector<double>;

struct GridShape {
  int n = 1;  // array dimension; points live in R^{2n}
  int m = 1;  // size per axis

  std::uint64_t voxel_count() const;  // m^n
  int ambient_dim() const { return 2 * n; }
};

// A finite list of points in R^dim. eps = 0 means exact (bitwise on parsed
// values) coordinate comparison; eps > 0 enables an absolute-tolerance mode
// for detection on noisy data.
struct PointSet {
  int dim = 0;
  std::vector<Point> points;
  double eps = 0.0;

  std::size_t size() const { return points.size(); }
};

bool coords_equal(double a, double b, double eps);
bool points_equal(const Point& a, const Point& b, double eps);
double euclidean_distance(const Point& a, const Point& b);

bool valid_voxel(const Voxel& v, const GridShape& shape);

// Returns the axis t (1-based) iff j differs from i only in coordinate t by
// exactly +-1; empty otherwise.
std::optional<int> voxel_adjacency(const Voxel& i, const Voxel& j,
                                   const GridShape& shape);

// xi(t) = 2t - (i_t mod 2) for the adjacent pair with j_t = i_t + 1:
// 2t-1 when i_t is odd, 2t when i_t is even. Both t and the result are
// 1-based.
int xi(int t, int i_t);

// (-1)^{i_1 + ... + i_n}
int parity_sign(const Voxel& v);

// Row-major rank with the last axis varying fastest; 0-based.
std::uint64_t lex_rank(const Voxel& v, const GridShape& shape);
Voxel lex_unrank(std::uint64_t r, const GridShape& shape);

// Distinct kth coordinates, ascending (k is 1-based). In tolerance mode
// values within eps of the previous representative are merged.
std::vector<double> project(const PointSet& X, int k);

// Minimum Euclidean distance over unordered pairs. Requires >= 2 points;
// duplicate points are rejected as degenerate.
double min_pairwise_distance(const PointSet& X);

}  // namespace basiclab
