#include "basiclab/lemma.hpp"

#include <cmath>
#include <limits>

#include "basiclab/errors.hpp"

namespace basiclab {

void validate_instance(const LemmaInstance& inst) {
  const GridShape& shape = inst.shape;
  if (shape.n < 1 || shape.m < 1)
    throw InvalidInput("lemma: shape must be positive");
  if (shape.m % 2 != 0)
    throw UnsupportedOddSize(
        "lemma: odd array sizes are out of scope (even m required)");
  if (inst.c.size() != shape.voxel_count())
    throw InvalidInput("lemma: expected m^n value rows");
  for (const auto& row : inst.c) {
    if (static_cast<int>(row.size()) != shape.ambient_dim())
      throw InvalidInput("lemma: expected 2n values per voxel");
    for (double v : row)
      if (!std::isfinite(v)) throw InvalidInput("lemma: values must be finite");
  }
}

IndexPartition abc_partition(const GridShape& shape) {
  if (shape.m % 2 != 0)
    throw UnsupportedOddSize(
        "abc_partition: odd array sizes are out of scope (even m required)");
  IndexPartition part;
  const std::uint64_t count = shape.voxel_count();
  for (std::uint64_t r = 0; r < count; ++r) {
    const Voxel i = lex_unrank(r, shape);
    for (int t = 1; t <= shape.n; ++t) {
      const int it = i[t - 1];
      if (it % 2 == 1) {
        Voxel j = i;
        ++j[t - 1];  // i_t odd and m even, so i_t < m
        part.A.insert({r, 2 * t - 1});
        part.A.insert({lex_rank(j, shape), 2 * t - 1});
      }
      if (it % 2 == 0 && it < shape.m) {
        Voxel j = i;
        ++j[t - 1];
        part.B.insert({r, 2 * t});
        part.B.insert({lex_rank(j, shape), 2 * t});
      }
      if (it == 1 || it == shape.m) part.C.insert({r, 2 * t});
    }
  }
  return part;
}

ConditionCheck check_conditions(const LemmaInstance& inst, double tau) {
  validate_instance(inst);
  const GridShape& shape = inst.shape;
  ConditionCheck out;
  out.adjacency_zero = true;
  out.half_far = true;

  const std::uint64_t count = shape.voxel_count();
  for (std::uint64_t r = 0; r < count && out.adjacency_zero; ++r) {
    const Voxel i = lex_unrank(r, shape);
    for (int t = 1; t <= shape.n; ++t) {
      if (i[t - 1] >= shape.m) continue;
      Voxel j = i;
      ++j[t - 1];
      const int k = xi(t, i[t - 1]);
      const double sum = inst.at(r, k) + inst.at(lex_rank(j, shape), k);
      if (std::abs(sum) > tau) {
        out.adjacency_zero = false;
        ConditionViolation v;
        v.adjacency = true;
        v.i = i;
        v.j = j;
        v.axis = t;
        v.coordinate = k;
        v.value = sum;
        out.first_violation = std::move(v);
        break;
      }
    }
  }

  for (std::uint64_t r = 0; r < count; ++r) {
    double sum = 0.0;
    for (int k = 1; k <= shape.ambient_dim(); ++k) sum += inst.at(r, k);
    if (!(sum > 0.5)) {
      out.half_far = false;
      if (!out.first_violation) {
        ConditionViolation v;
        v.adjacency = false;
        v.i = lex_unrank(r, shape);
        v.value = sum;
        out.first_violation = std::move(v);
      }
      break;
    }
  }
  return out;
}

LemmaCertificate lemma_witness(const LemmaInstance& inst, double tau) {
  LemmaCertificate cert;
  cert.conditions = check_conditions(inst, tau);
  if (!cert.conditions.adjacency_zero || !cert.conditions.half_far)
    throw PreconditionFailed(
        cert.conditions.first_violation &&
                cert.conditions.first_violation->adjacency
            ? "lemma_witness: adjacency zero-sum condition violated"
            : "lemma_witness: some voxel coordinate sum is not > 1/2");

  const GridShape& shape = inst.shape;
  cert.bound = static_cast<double>(shape.m) / (4.0 * shape.n);

  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t best_rank = 0;
  int best_k = 1;
  const std::uint64_t count = shape.voxel_count();
  for (std::uint64_t r = 0; r < count; ++r)
    for (int k = 1; k <= shape.ambient_dim(); ++k)
      if (inst.at(r, k) > best) {
        best = inst.at(r, k);
        best_rank = r;
        best_k = k;
      }
  cert.witness_voxel = lex_unrank(best_rank, shape);
  cert.witness_coordinate = best_k;
  cert.witness_value = best;

  const IndexPartition part = abc_partition(shape);
  for (const auto& [r, k] : part.A) cert.sum_A += inst.at(r, k);
  for (const auto& [r, k] : part.B) cert.sum_B += inst.at(r, k);
  for (const auto& [r, k] : part.C) cert.sum_C += inst.at(r, k);
  return cert;
}

}  // namespace basiclab
