#include "basiclab/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "basiclab/errors.hpp"

namespace basiclab {

std::uint64_t GridShape::voxel_count() const {
  std::uint64_t c = 1;
  for (int t = 0; t < n; ++t) c *= static_cast<std::uint64_t>(m);
  return c;
}

bool coords_equal(double a, double b, double eps) {
  if (eps <= 0.0) return a == b;
  return std::abs(a - b) <= eps;
}

bool points_equal(const Point& a, const Point& b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!coords_equal(a[k], b[k], eps)) return false;
  return true;
}

double euclidean_distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw InvalidInput("euclidean_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

bool valid_voxel(const Voxel& v, const GridShape& shape) {
  if (static_cast<int>(v.size()) != shape.n) return false;
  for (int c : v)
    if (c < 1 || c > shape.m) return false;
  return true;
}

std::optional<int> voxel_adjacency(const Voxel& i, const Voxel& j,
                                   const GridShape& shape) {
  if (!valid_voxel(i, shape) || !valid_voxel(j, shape))
    throw InvalidInput("voxel_adjacency: voxel invalid for shape");
  std::optional<int> axis;
  for (int t = 0; t < shape.n; ++t) {
    if (i[t] == j[t]) continue;
    if (axis.has_value()) return std::nullopt;  // differs in two axes
    if (std::abs(i[t] - j[t]) != 1) return std::nullopt;
    axis = t + 1;
  }
  return axis;  // empty when i == j
}

int xi(int t, int i_t) {
  if (t < 1) throw InvalidInput("xi: axis must be >= 1");
  if (i_t < 1) throw InvalidInput("xi: grid index must be >= 1");
  return 2 * t - (i_t % 2);
}

int parity_sign(const Voxel& v) {
  long long s = 0;
  for (int c : v) s += c;
  return (s % 2 == 0) ? +1 : -1;
}

std::uint64_t lex_rank(const Voxel& v, const GridShape& shape) {
  if (!valid_voxel(v, shape))
    throw InvalidInput("lex_rank: voxel invalid for shape");
  std::uint64_t r = 0;
  for (int t = 0; t < shape.n; ++t)
    r = r * static_cast<std::uint64_t>(shape.m) +
        static_cast<std::uint64_t>(v[t] - 1);
  return r;
}

Voxel lex_unrank(std::uint64_t r, const GridShape& shape) {
  if (r >= shape.voxel_count())
    throw InvalidInput("lex_unrank: rank out of range");
  Voxel v(static_cast<std::size_t>(shape.n), 1);
  for (int t = shape.n - 1; t >= 0; --t) {
    v[t] = static_cast<int>(r % static_cast<std::uint64_t>(shape.m)) + 1;
    r /= static_cast<std::uint64_t>(shape.m);
  }
  return v;
}

std::vector<double> project(const PointSet& X, int k) {
  if (k < 1 || k > X.dim) throw InvalidInput("project: axis out of range");
  std::vector<double> vals;
  vals.reserve(X.points.size());
  for (const Point& p : X.points) vals.push_back(p[k - 1]);
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || !coords_equal(out.back(), v, X.eps)) out.push_back(v);
  return out;
}

double min_pairwise_distance(const PointSet& X) {
  if (X.points.size() < 2)
    throw InvalidInput("min_pairwise_distance: need at least 2 points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < X.points.size(); ++a)
    for (std::size_t b = a + 1; b < X.points.size(); ++b) {
      const double d = euclidean_distance(X.points[a], X.points[b]);
      if (d == 0.0 || points_equal(X.points[a], X.points[b], X.eps))
        throw DegenerateInput("min_pairwise_distance: duplicate points");
      best = std::min(best, d);
    }
  return best;
}

}  // namespace basiclab
