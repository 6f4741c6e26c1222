#pragma once

#include <random>
#include <vector>

#include "basiclab/core.hpp"
#include "basiclab/lemma.hpp"

// Shared test-only generators. These stay independent of the code paths
// they help check.

namespace basiclab::testing {

// Random conditions-passing lemma instance. Construction: c_{i,k} =
// (-1)^{|i|} psi_k(i) with psi_1/psi_2 solved per axis-1 fiber so that each
// voxel's coordinate sum equals a drawn u_i > 1/2, psi_k = 0 for k >= 3.
// The psi tables are constant on the adjacency classes that the zero-sum
// condition couples, so the condition holds with exactly-zero sums.
inline LemmaInstance random_lemma_instance(int n, int m, std::mt19937_64& rng) {
  LemmaInstance inst;
  inst.shape = GridShape{n, m};
  const std::uint64_t count = inst.shape.voxel_count();
  inst.c.assign(count, std::vector<double>(2 * n, 0.0));

  std::uniform_real_distribution<double> u_dist(0.6, 3.0);
  std::uniform_real_distribution<double> a_dist(-2.0, 2.0);

  // Enumerate fibers along axis 1: all voxels sharing i_2..i_n.
  GridShape rest{n - 1, m};
  const std::uint64_t fibers = n == 1 ? 1 : rest.voxel_count();
  for (std::uint64_t fr = 0; fr < fibers; ++fr) {
    Voxel tail = n == 1 ? Voxel{} : lex_unrank(fr, rest);
    std::vector<double> v(m + 1), psi1(m + 1), psi2(m + 1);
    std::vector<int> sign(m + 1);
    for (int j = 1; j <= m; ++j) {
      Voxel vox;
      vox.push_back(j);
      vox.insert(vox.end(), tail.begin(), tail.end());
      sign[j] = parity_sign(vox);
      v[j] = sign[j] * u_dist(rng);
    }
    psi1[1] = a_dist(rng);
    psi2[1] = v[1] - psi1[1];
    for (int j = 2; j <= m; ++j) {
      if (j % 2 == 0) {
        psi1[j] = psi1[j - 1];  // class {j-1, j} for coordinate 1
        psi2[j] = v[j] - psi1[j];
      } else {
        psi2[j] = psi2[j - 1];  // class {j-1, j} for coordinate 2
        psi1[j] = v[j] - psi2[j];
      }
    }
    for (int j = 1; j <= m; ++j) {
      Voxel vox;
      vox.push_back(j);
      vox.insert(vox.end(), tail.begin(), tail.end());
      auto& row = inst.c[lex_rank(vox, inst.shape)];
      row[0] = sign[j] * psi1[j];
      row[1] = sign[j] * psi2[j];
    }
  }
  return inst;
}

// Random plane set on an integer grid, distinct points.
inline PointSet random_grid_pointset(int max_points, int grid, std::mt19937_64& rng) {
  PointSet X;
  X.dim = 2;
  std::uniform_int_distribution<int> count_dist(1, max_points);
  std::uniform_int_distribution<int> coord(0, grid - 1);
  const int target = count_dist(rng);
  while (static_cast<int>(X.points.size()) < target) {
    Point p{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
    bool dup = false;
    for (const Point& q : X.points)
      if (points_equal(p, q, 0.0)) dup = true;
    if (!dup) X.points.push_back(std::move(p));
  }
  return X;
}

}  // namespace basiclab::testing
