#include "basiclab/nonbasic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "basiclab/errors.hpp"

namespace basiclab {

namespace {

// Thrown when some F_s admits no decomposition; the experiment reports this
// as a direct non-basicness witness.
struct NonDecomposable {
  int stage;
};

}  // namespace

double BumpFunction::eval(const Point& x) const {
  // Supports are pairwise disjoint (r < d_min / 2), so the first hit wins.
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const double d = euclidean_distance(x, centers[i]);
    if (d < radius) return signs[i] * (1.0 - d / radius);
  }
  return 0.0;
}

BumpFunction bump(const SternfeldArray& array) {
  if (array.points.size() < 2)
    throw InvalidInput("bump: array must have at least 2 points");
  PointSet X;
  X.dim = array.shape.ambient_dim();
  X.points = array.points;
  double d_min = 0.0;
  try {
    d_min = min_pairwise_distance(X);
  } catch (const DegenerateInput&) {
    throw InvalidInput("bump: array has duplicate points");
  }
  BumpFunction f;
  f.centers = array.points;
  f.radius = d_min / 3.0;
  f.signs.reserve(array.points.size());
  const std::uint64_t count = array.shape.voxel_count();
  for (std::uint64_t r = 0; r < count; ++r)
    f.signs.push_back(parity_sign(lex_unrank(r, array.shape)));
  return f;
}

long long choose_next_m(long long m_s, double phi_norm, int s) {
  if (m_s < 1) throw InvalidInput("choose_next_m: m_s must be >= 1");
  if (phi_norm < 0.0) throw InvalidInput("choose_next_m: norm must be >= 0");
  const double v = static_cast<double>(m_s) * (phi_norm + s + 1);
  return static_cast<long long>(std::floor(v)) + 1;
}

namespace {

SternfeldArray stage_array(int n, long long m_s) {
  const int size = static_cast<int>(4 * n * m_s);
  if (n == 1) return gen_plane_zigzag(size);
  std::vector<SternfeldArray> factors(n, gen_plane_zigzag(size));
  std::vector<std::array<double, 2>> offsets(n, {0.0, 0.0});
  return gen_product(factors, offsets);
}

double max_abs_coordinate(const PointSet& X) {
  double m = 0.0;
  for (const Point& p : X.points)
    for (double v : p) m = std::max(m, std::abs(v));
  return m;
}

double bbox_diameter(const SternfeldArray& arr) {
  const int d = arr.shape.ambient_dim();
  double s = 0.0;
  for (int k = 0; k < d; ++k) {
    double lo = arr.points.front()[k], hi = lo;
    for (const Point& p : arr.points) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    s += (hi - lo) * (hi - lo);
  }
  return std::sqrt(s);
}

// phi^{s} = min-sup-norm decomposition of F_s on the current ground set.
void ensure_phi(BlowupSchedule& schedule, int s) {
  while (static_cast<int>(schedule.phi.size()) <= s) {
    const int stage = static_cast<int>(schedule.phi.size());
    const MinimaxOutcome lp = min_supnorm(schedule.ground, schedule.F);
    if (lp.status != MinimaxOutcome::Status::Optimal)
      throw NonDecomposable{stage};
    schedule.phi.push_back(*lp.family);
    schedule.phi_norm.push_back(lp.value);
  }
}

}  // namespace

void build_stage(BlowupSchedule& schedule, int s) {
  if (s < 1 || static_cast<int>(schedule.stages.size()) != s - 1)
    throw PreconditionFailed("build_stage: stages must be built in order");
  ensure_phi(schedule, s - 1);

  const long long m_s =
      choose_next_m(schedule.m[s - 1], schedule.phi_norm[s - 1], s - 1);
  schedule.m.push_back(m_s);

  SternfeldArray arr = stage_array(schedule.n, m_s);
  // Diagonal translation keeps every stage's per-axis projections disjoint
  // from all earlier stages and inter-stage distances far above any bump
  // radius, so supports stay disjoint and bump values are exact.
  const double offset =
      max_abs_coordinate(schedule.ground) + 10.0 * (bbox_diameter(arr) + 1.0);
  for (Point& p : arr.points)
    for (double& v : p) v += offset;

  BlowupStage stage;
  stage.s = s;
  stage.m_s = m_s;
  stage.first_point = schedule.ground.points.size();
  stage.array = std::move(arr);
  {
    PointSet tmp;
    tmp.dim = stage.array.shape.ambient_dim();
    tmp.points = stage.array.points;
    stage.bump_radius = min_pairwise_distance(tmp) / 3.0;
  }

  schedule.ground.dim = stage.array.shape.ambient_dim();
  const std::uint64_t count = stage.array.shape.voxel_count();
  for (std::uint64_t r = 0; r < count; ++r) {
    schedule.ground.points.push_back(stage.array.points[r]);
    // F_s = F_{s-1} + bump(A_s) / m_{s-1}: the new bump vanishes on every
    // earlier point and earlier bumps vanish here.
    const int sign = parity_sign(lex_unrank(r, stage.array.shape));
    schedule.F.push_back(sign / static_cast<double>(schedule.m[s - 1]));
  }
  schedule.stages.push_back(std::move(stage));
}

double tail_audit(const std::vector<long long>& m, int s) {
  if (s < 0 || s >= static_cast<int>(m.size()))
    throw InvalidInput("tail_audit: stage out of range");
  for (std::size_t l = 1; l < m.size(); ++l)
    if (!(static_cast<double>(m[l]) / static_cast<double>(m[l - 1]) >
          static_cast<double>(l)))
      throw ScheduleInvariantViolated("tail_audit: m_l / m_{l-1} <= l");
  double sum = 0.0;
  for (std::size_t l = s + 1; l < m.size(); ++l)
    sum += static_cast<double>(m[s]) / static_cast<double>(m[l]);
  if (s >= 2 && !(sum < 0.5))
    throw ScheduleInvariantViolated("tail_audit: tail sum >= 1/2");
  return sum;
}

BlowupReport blowup_experiment(int n, int S) {
  if (n < 1) throw InvalidInput("blowup_experiment: n must be >= 1");
  if (S < 1) throw InvalidInput("blowup_experiment: S must be >= 1");

  BlowupReport report;
  report.n = n;
  report.stage_count = S;

  BlowupSchedule schedule;
  schedule.n = n;
  schedule.m = {1};
  schedule.ground.dim = 2 * n;

  try {
    for (int s = 1; s <= S; ++s) build_stage(schedule, s);
    ensure_phi(schedule, S);
  } catch (const NonDecomposable& nd) {
    report.m = schedule.m;
    report.non_decomposable_at = nd.stage;
    report.verdict = "NON_DECOMPOSABLE_AT " + std::to_string(nd.stage);
    for (int s = 0; s < static_cast<int>(schedule.phi_norm.size()); ++s) {
      StageRecord rec;
      rec.s = s;
      rec.m_s = schedule.m[s];
      rec.array_size = s == 0 ? 0 : schedule.stages[s - 1].array.points.size();
      rec.lp_optimal = true;
      rec.lp_value = schedule.phi_norm[s];
      report.stages.push_back(rec);
    }
    StageRecord rec;
    rec.s = nd.stage;
    rec.m_s = schedule.m[nd.stage];
    rec.array_size =
        nd.stage == 0 ? 0 : schedule.stages[nd.stage - 1].array.points.size();
    rec.lp_optimal = false;
    report.stages.push_back(rec);
    return report;
  }

  report.m = schedule.m;
  for (int s = 0; s <= S; ++s) {
    StageRecord rec;
    rec.s = s;
    rec.m_s = schedule.m[s];
    rec.array_size = s == 0 ? 0 : schedule.stages[s - 1].array.points.size();
    rec.lp_optimal = true;
    rec.lp_value = schedule.phi_norm[s];
    report.stages.push_back(rec);
  }

  // Stage certificates: apply the lemma to the stage-(s+1) array with
  // c_{i,k} = (-1)^{|i|} m_s (phi_k - phi^s_k)((a_i)_k), where phi = phi^S.
  // phi^s has no table entries at later stages' coordinates; its
  // zero extension there coincides with the minimizer over the full set.
  const CoordinateFunctionFamily& phi = schedule.phi[S];
  for (int s = 0; s < S; ++s) {
    const BlowupStage& stage = schedule.stages[s];
    LemmaInstance inst;
    inst.shape = stage.array.shape;
    const std::uint64_t count = inst.shape.voxel_count();
    inst.c.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) {
      const int sign = parity_sign(lex_unrank(r, inst.shape));
      const Point& a = stage.array.points[r];
      std::vector<double> row(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = phi.axes[k].value_at(a[k]) -
                            schedule.phi[s].axes[k].value_or_zero(a[k]);
        row[k] = sign * static_cast<double>(schedule.m[s]) * diff;
      }
      inst.c.push_back(std::move(row));
    }

    StageCertificate cert;
    cert.s = s;
    cert.array_m = inst.shape.m;
    cert.lemma = lemma_witness(inst, 0.0);
    cert.phi_diff_lower =
        cert.lemma.witness_value / static_cast<double>(schedule.m[s]);
    report.certificates.push_back(std::move(cert));
  }

  for (int s = 0; s <= S; ++s)
    report.tail_audits.push_back(tail_audit(schedule.m, s));

  report.final_norm = schedule.phi_norm[S];
  if (!(report.final_norm > static_cast<double>(S)))
    throw ScheduleInvariantViolated(
        "blowup_experiment: min_supnorm(F_S) does not exceed S");
  report.verdict = "NORM_EXCEEDS_S";
  return report;
}

}  // namespace basiclab
