#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basiclab/arrays.hpp"
#include "basiclab/core.hpp"
#include "basiclab/decompose.hpp"
#include "basiclab/lemma.hpp"

// The norm blow-up construction at finite truncation: bump functions on
// arrays, the inductive schedule m_{s+1} > m_s (||phi^s|| + s + 1), stage
// placement with disjoint supports, tail audits, and the experiment whose
// headline outcome is that any decomposition of F_S has norm exceeding S.

namespace basiclab {

// Piecewise function equal to (-1)^{|i|} at center a_i, decaying linearly
// to 0 at distance r = (1/3) min pairwise distance, 0 outside all disks.
struct BumpFunction {
  std::vector<Point> centers;
  std::vector<int> signs;
  double radius = 0.0;

  double eval(const Point& x) const;
};

BumpFunction bump(const SternfeldArray& array);

// Smallest integer strictly greater than m_s * (phi_norm + s + 1).
long long choose_next_m(long long m_s, double phi_norm, int s);

struct BlowupStage {
  int s = 0;                 // stage number, >= 1
  long long m_s = 0;         // schedule value; array size is 4 n m_s
  SternfeldArray array;      // placed (translated) stage array
  double bump_radius = 0.0;
  std::size_t first_point = 0;  // offset of this stage's points in X
};

// Everything the experiment accumulates while building stages.
struct BlowupSchedule {
  int n = 1;
  std::vector<long long> m;  // m_0 = 1, then one entry per built stage
  std::vector<BlowupStage> stages;
  PointSet ground;                          // union of stage array images
  std::vector<double> F;                    // F_s values on ground
  std::vector<CoordinateFunctionFamily> phi;  // phi^s, decomposition of F_s
  std::vector<double> phi_norm;             // ||phi^s||
};

// Appends stage s (1-based). Requires stages < s built and phi^{s-1}
// available; generates an array of size 4 n m_s, places it away from all
// previous stages, and updates F.
void build_stage(BlowupSchedule& schedule, int s);

// Sum_{l = s+1}^{S-1} m_s / m_l over the built schedule; asserts the audit
// bounds (< 1/2 for s >= 2, and m_l / m_{l-1} > l for all l >= 1).
double tail_audit(const std::vector<long long>& m, int s);

struct StageCertificate {
  int s = 0;                    // certificate for phi - phi^s
  long long array_m = 0;        // lemma grid size 4 n m_{s+1}
  LemmaCertificate lemma;       // witness value > array_m / (4n) = m_{s+1}
  double phi_diff_lower = 0.0;  // implied max_k ||phi_k - phi^s_k|| bound
};

struct StageRecord {
  int s = 0;
  long long m_s = 0;
  std::size_t array_size = 0;
  bool lp_optimal = false;
  double lp_value = 0.0;  // min_supnorm of F_s on the ground set so far
};

struct BlowupReport {
  int n = 1;
  int stage_count = 0;  // S
  std::vector<long long> m;
  std::vector<StageRecord> stages;             // s = 0..S
  std::vector<StageCertificate> certificates;  // s = 0..S-1
  std::vector<double> tail_audits;             // indexed by s
  std::string verdict;  // NORM_EXCEEDS_S or NON_DECOMPOSABLE_AT s
  int non_decomposable_at = -1;
  double final_norm = 0.0;
};

// Runs stages 0..S. When every stage is feasible, verifies the per-stage
// lemma certificates exactly (tau = 0) and that min_supnorm(F_S) > S.
// Infeasibility at some stage is reported as NON_DECOMPOSABLE_AT, a direct
// non-basicness witness rather than a failure.
BlowupReport blowup_experiment(int n, int S);

}  // namespace basiclab
