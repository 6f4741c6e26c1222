#include "basiclab/arrays.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "basiclab/errors.hpp"

namespace basiclab {

ValidationReport validate_array(const GridShape& shape,
                                const std::vector<Point>& points_lex,
                                double eps) {
  if (shape.n < 1 || shape.m < 1)
    throw InvalidInput("validate_array: shape must be positive");
  if (points_lex.size() != shape.voxel_count())
    throw InvalidInput("validate_array: expected m^n points");
  const int d = shape.ambient_dim();
  for (const Point& p : points_lex)
    if (static_cast<int>(p.size()) != d)
      throw InvalidInput("validate_array: point dimension must be 2n");

  ValidationReport report;
  const std::uint64_t count = points_lex.size();

  for (std::uint64_t a = 0; a < count; ++a)
    for (std::uint64_t b = a + 1; b < count; ++b)
      if (points_equal(points_lex[a], points_lex[b], eps)) {
        Violation v;
        v.kind = Violation::Kind::Duplicate;
        v.i = lex_unrank(a, shape);
        v.j = lex_unrank(b, shape);
        report.violations.push_back(std::move(v));
      }

  // One equality per adjacent pair {i, i+e_t}, at coordinate xi(t, i_t).
  for (std::uint64_t r = 0; r < count; ++r) {
    const Voxel i = lex_unrank(r, shape);
    for (int t = 1; t <= shape.n; ++t) {
      if (i[t - 1] >= shape.m) continue;
      Voxel j = i;
      ++j[t - 1];
      const int c = xi(t, i[t - 1]);
      const double vi = points_lex[r][c - 1];
      const double vj = points_lex[lex_rank(j, shape)][c - 1];
      if (!coords_equal(vi, vj, eps)) {
        Violation v;
        v.kind = Violation::Kind::Mismatch;
        v.i = i;
        v.j = j;
        v.axis = t;
        v.coordinate = c;
        v.value_i = vi;
        v.value_j = vj;
        report.violations.push_back(std::move(v));
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

SternfeldArray gen_plane_zigzag(int m) {
  if (m < 2) throw InvalidInput("gen_plane_zigzag: m must be >= 2");
  SternfeldArray arr;
  arr.shape = GridShape{1, m};
  arr.points.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const int j = (i + 1) / 2;
    if (i % 2 == 1)
      arr.points.push_back({static_cast<double>(j), static_cast<double>(j)});
    else
      arr.points.push_back({static_cast<double>(j), static_cast<double>(j + 1)});
  }
  return arr;
}

SternfeldArray gen_hypercube(int n) {
  if (n < 1) throw InvalidInput("gen_hypercube: n must be >= 1");
  // Walk around the unit square; consecutive corners share one coordinate.
  static const double corner[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  SternfeldArray arr;
  arr.shape = GridShape{n, 4};
  const std::uint64_t count = arr.shape.voxel_count();
  arr.points.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    const Voxel v = lex_unrank(r, arr.shape);
    Point p(static_cast<std::size_t>(2 * n));
    for (int t = 1; t <= n; ++t) {
      p[2 * t - 2] = corner[v[t - 1] - 1][0];
      p[2 * t - 1] = corner[v[t - 1] - 1][1];
    }
    arr.points.push_back(std::move(p));
  }
  return arr;
}

SternfeldArray gen_product(const std::vector<SternfeldArray>& factors,
                           const std::vector<std::array<double, 2>>& offsets) {
  if (factors.empty()) throw InvalidInput("gen_product: need >= 1 factor");
  if (offsets.size() != factors.size())
    throw InvalidInput("gen_product: one offset per factor");
  const int m = factors.front().shape.m;
  for (const SternfeldArray& f : factors) {
    if (f.shape.n != 1)
      throw InvalidInput("gen_product: factors must be plane arrays");
    if (f.shape.m != m)
      throw InvalidInput("gen_product: factors must share a common size");
    if (!validate_array(f.shape, f.points).ok)
      throw InvalidInput("gen_product: factor is not a Sternfeld array");
  }

  const int n = static_cast<int>(factors.size());
  SternfeldArray arr;
  arr.shape = GridShape{n, m};
  const std::uint64_t count = arr.shape.voxel_count();
  arr.points.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    const Voxel v = lex_unrank(r, arr.shape);
    Point p(static_cast<std::size_t>(2 * n));
    for (int t = 1; t <= n; ++t) {
      const Point& q = factors[t - 1].points[v[t - 1] - 1];
      p[2 * t - 2] = q[0] + offsets[t - 1][0];
      p[2 * t - 1] = q[1] + offsets[t - 1][1];
    }
    arr.points.push_back(std::move(p));
  }

  for (std::size_t a = 0; a < arr.points.size(); ++a)
    for (std::size_t b = a + 1; b < arr.points.size(); ++b)
      if (points_equal(arr.points[a], arr.points[b], 0.0))
        throw DegenerateInput(
            "gen_product: composite duplicate; adjust factor offsets");
  return arr;
}

bool bolt_satisfies_mode(const PlaneBolt& bolt, double eps,
                         bool allow_either_first_move) {
  const auto& pts = bolt.points;
  if (pts.size() < 2) return false;
  for (const Point& p : pts)
    if (p.size() != 2) return false;

  // Determine the direction of each segment; vertical = shared abscissa.
  std::vector<bool> vertical(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool sx = coords_equal(pts[i][0], pts[i + 1][0], eps);
    const bool sy = coords_equal(pts[i][1], pts[i + 1][1], eps);
    if (sx == sy) return false;  // degenerate or diagonal segment
    vertical[i] = sx;
  }
  if (!allow_either_first_move && !vertical[0]) return false;
  for (std::size_t i = 0; i + 1 < vertical.size(); ++i)
    if (vertical[i] == vertical[i + 1]) return false;

  if (bolt.mode == BoltMode::AllDistinct) {
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (points_equal(pts[a], pts[b], eps)) return false;
  }
  // Consecutive distinctness is implied by each segment being non-degenerate.
  return true;
}

namespace {

// State graph for bolt walks: node = (point index, direction of the NEXT
// move). An edge exists when the move lands on a different point sharing
// the required coordinate.
struct BoltGraph {
  const PointSet& X;
  double eps;

  int states() const { return 2 * static_cast<int>(X.size()); }
  static int state(int p, bool vertical) { return 2 * p + (vertical ? 1 : 0); }

  std::vector<int> successors(int s) const {
    const int p = s / 2;
    const bool vertical = (s % 2) == 1;
    const int axis = vertical ? 0 : 1;
    std::vector<int> out;
    for (int q = 0; q < static_cast<int>(X.size()); ++q) {
      if (q == p) continue;
      if (!coords_equal(X.points[p][axis], X.points[q][axis], eps)) continue;
      if (points_equal(X.points[p], X.points[q], eps)) continue;
      out.push_back(state(q, !vertical));
    }
    return out;
  }
};

constexpr long long kUnbounded = std::numeric_limits<long long>::max();

// Longest walk (in points) starting at each state; kUnbounded when a cycle
// is reachable.
std::vector<long long> longest_walks(const BoltGraph& g, std::uint64_t budget,
                                     std::uint64_t& nodes) {
  const int S = g.states();
  std::vector<std::vector<int>> succ(S);
  for (int s = 0; s < S; ++s) succ[s] = g.successors(s);

  // color: 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> color(S, 0);
  std::vector<long long> best(S, 1);
  std::vector<bool> unbounded(S, false);

  struct Frame {
    int s;
    std::size_t next = 0;
  };
  for (int root = 0; root < S; ++root) {
    if (color[root] != 0) continue;
    std::vector<Frame> stack{{root}};
    color[root] = 1;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (++nodes > budget)
        throw BudgetExceeded("detect_plane_bolt: node budget exhausted");
      if (fr.next < succ[fr.s].size()) {
        const int q = succ[fr.s][fr.next++];
        if (color[q] == 0) {
          color[q] = 1;
          stack.push_back({q});
        } else if (color[q] == 1) {
          unbounded[fr.s] = true;  // back edge: a pumpable cycle
        } else {
          if (unbounded[q])
            unbounded[fr.s] = true;
          else
            best[fr.s] = std::max(best[fr.s], 1 + best[q]);
        }
      } else {
        color[fr.s] = 2;
        const int s = fr.s;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().s;
          if (unbounded[s])
            unbounded[parent] = true;
          else
            best[parent] = std::max(best[parent], 1 + best[s]);
        }
      }
    }
    // A DFS tree edge into a cross-SCC node may leave unbounded flags
    // unpropagated when the child finished before the back edge was seen;
    // fix up with a relaxation pass below.
  }

  // Relax until stable: unbounded propagates backwards over edges.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < S; ++s) {
      if (unbounded[s]) continue;
      for (int q : succ[s]) {
        if (unbounded[q]) {
          unbounded[s] = true;
          changed = true;
          break;
        }
        if (best[s] < 1 + best[q]) {
          best[s] = 1 + best[q];
          changed = true;
        }
      }
    }
  }

  std::vector<long long> out(S);
  for (int s = 0; s < S; ++s) out[s] = unbounded[s] ? kUnbounded : best[s];
  return out;
}

std::optional<PlaneBolt> detect_consecutive(const PointSet& X, int target_len,
                                            std::uint64_t budget,
                                            bool allow_either_first_move) {
  BoltGraph g{X, X.eps};
  std::uint64_t nodes = 0;
  const std::vector<long long> reach = longest_walks(g, budget, nodes);

  int start = -1;
  for (int p = 0; p < static_cast<int>(X.size()) && start < 0; ++p) {
    if (reach[BoltGraph::state(p, true)] >= target_len)
      start = BoltGraph::state(p, true);
    else if (allow_either_first_move &&
             reach[BoltGraph::state(p, false)] >= target_len)
      start = BoltGraph::state(p, false);
  }
  if (start < 0) return std::nullopt;

  PlaneBolt bolt;
  bolt.mode = BoltMode::ConsecutiveDistinct;
  int s = start;
  long long remaining = target_len;
  bolt.points.push_back(X.points[s / 2]);
  while (--remaining > 0) {
    for (int q : g.successors(s)) {
      if (reach[q] >= remaining) {
        s = q;
        bolt.points.push_back(X.points[s / 2]);
        break;
      }
    }
  }
  return bolt;
}

struct DistinctDfs {
  const PointSet& X;
  int target_len;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<bool> used;
  std::vector<int> path;

  bool run(int p, bool vertical) {
    if (++nodes > budget)
      throw BudgetExceeded("detect_plane_bolt: node budget exhausted");
    used[p] = true;
    path.push_back(p);
    if (static_cast<int>(path.size()) >= target_len) return true;
    const int axis = vertical ? 0 : 1;
    for (int q = 0; q < static_cast<int>(X.size()); ++q) {
      if (used[q]) continue;
      if (!coords_equal(X.points[p][axis], X.points[q][axis], X.eps)) continue;
      if (run(q, !vertical)) return true;
    }
    used[p] = false;
    path.pop_back();
    return false;
  }
};

}  // namespace

std::optional<PlaneBolt> detect_plane_bolt(const PointSet& X, int target_len,
                                           BoltMode mode, std::uint64_t budget,
                                           bool allow_either_first_move) {
  if (X.dim != 2) throw InvalidInput("detect_plane_bolt: dim must be 2");
  if (target_len < 2)
    throw InvalidInput("detect_plane_bolt: target length must be >= 2");

  if (mode == BoltMode::ConsecutiveDistinct)
    return detect_consecutive(X, target_len, budget, allow_either_first_move);

  DistinctDfs dfs{X, target_len, budget};
  dfs.used.assign(X.size(), false);
  for (int p = 0; p < static_cast<int>(X.size()); ++p) {
    if (dfs.run(p, true)) {
      PlaneBolt bolt;
      bolt.mode = BoltMode::AllDistinct;
      for (int idx : dfs.path) bolt.points.push_back(X.points[idx]);
      return bolt;
    }
    if (allow_either_first_move && dfs.run(p, false)) {
      PlaneBolt bolt;
      bolt.mode = BoltMode::AllDistinct;
      for (int idx : dfs.path) bolt.points.push_back(X.points[idx]);
      return bolt;
    }
  }
  return std::nullopt;
}

namespace {

struct GridDfs {
  const PointSet& X;
  GridShape shape;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> assignment;  // voxel rank -> point index
  std::vector<bool> used;
  std::vector<Voxel> voxels;

  bool run(std::uint64_t r) {
    if (r == voxels.size()) return true;
    const Voxel& v = voxels[r];
    for (int cand = 0; cand < static_cast<int>(X.size()); ++cand) {
      if (used[cand]) continue;
      if (++nodes > budget)
        throw BudgetExceeded("detect_grid_array: node budget exhausted");
      if (!consistent(v, cand)) continue;
      assignment[r] = cand;
      used[cand] = true;
      if (run(r + 1)) return true;
      used[cand] = false;
    }
    return false;
  }

  bool consistent(const Voxel& v, int cand) const {
    // Lex-earlier neighbors are v - e_t for every axis with v[t] > 1.
    for (int t = 1; t <= shape.n; ++t) {
      if (v[t - 1] <= 1) continue;
      Voxel u = v;
      --u[t - 1];
      const int c = xi(t, u[t - 1]);
      const int prev = assignment[lex_rank(u, shape)];
      if (!coords_equal(X.points[cand][c - 1], X.points[prev][c - 1], X.eps))
        return false;
    }
    return true;
  }
};

}  // namespace

std::optional<SternfeldArray> detect_grid_array(const PointSet& X,
                                                const GridShape& shape,
                                                std::uint64_t budget) {
  if (X.dim != shape.ambient_dim())
    throw InvalidInput("detect_grid_array: dim must equal 2n");
  if (X.size() < shape.voxel_count()) return std::nullopt;  // pigeonhole

  GridDfs dfs{X, shape, budget};
  const std::uint64_t count = shape.voxel_count();
  dfs.assignment.assign(count, -1);
  dfs.used.assign(X.size(), false);
  dfs.voxels.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r)
    dfs.voxels.push_back(lex_unrank(r, shape));

  if (!dfs.run(0)) return std::nullopt;
  SternfeldArray arr;
  arr.shape = shape;
  arr.points.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r)
    arr.points.push_back(X.points[dfs.assignment[r]]);
  return arr;
}

}  // namespace basiclab
