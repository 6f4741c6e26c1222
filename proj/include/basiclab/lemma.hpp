#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "basiclab/core.hpp"

// The combinatorial lemma: a real-valued array (c_i)_k over [m]^n x [2n]
// with even m, whose adjacency sums vanish and whose per-voxel coordinate
// sums exceed 1/2, must carry an entry exceeding m/(4n). This module builds
// the A/B/C index partition, checks the two conditions and produces the
// witness certificate with its audit sums.

namespace basiclab {

struct LemmaInstance {
  GridShape shape;                     // m must be even
  std::vector<std::vector<double>> c;  // lex voxel order, 2n values per voxel

  double at(std::uint64_t rank, int k) const { return c[rank][k - 1]; }
};

// Pairs (voxel rank, coordinate k), k 1-based.
using IndexPair = std::pair<std::uint64_t, int>;

struct IndexPartition {
  std::set<IndexPair> A, B, C;
};

struct ConditionViolation {
  bool adjacency = false;  // otherwise a half_far violation
  Voxel i, j;              // j meaningful for adjacency violations only
  int axis = 0;
  int coordinate = 0;  // xi(t) for adjacency; unused for half_far
  double value = 0.0;  // offending sum
};

struct ConditionCheck {
  bool adjacency_zero = false;
  bool half_far = false;
  std::optional<ConditionViolation> first_violation;
};

struct LemmaCertificate {
  ConditionCheck conditions;
  Voxel witness_voxel;
  int witness_coordinate = 0;
  double witness_value = 0.0;
  double bound = 0.0;  // m/(4n)
  // Proof-side audit: sums over A and B vanish, the C sum exceeds m^n/2.
  double sum_A = 0.0, sum_B = 0.0, sum_C = 0.0;
};

// A = {(i, 2t-1), (i+e_t, 2t-1) : i_t odd}; B = {(i, 2t), (i+e_t, 2t) :
// i_t even, i_t < m}; C = {(i, 2t) : i_t in {1, m}}. Disjoint union covers
// [m]^n x [2n]; |C| = 2n m^{n-1}. Rejects odd m.
IndexPartition abc_partition(const GridShape& shape);

// tau is the absolute tolerance for the adjacency zero-sum; instances built
// from exact integer data should pass with tau = 0. half_far is strict.
ConditionCheck check_conditions(const LemmaInstance& inst, double tau = 1e-9);

// Requires both conditions; returns the global maximizing entry, whose value
// is guaranteed to exceed m/(4n).
LemmaCertificate lemma_witness(const LemmaInstance& inst, double tau = 1e-9);

void validate_instance(const LemmaInstance& inst);

}  // namespace basiclab
