// basiclab command-line front end. JSON in, JSON out (stdout); diagnostics
// on stderr. Exit codes: 0 success, 1 negative-but-valid answer (not an
// array, infeasible, none found), 2 invalid input, 3 budget/solver failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "basiclab/arrays.hpp"
#include "basiclab/decompose.hpp"
#include "basiclab/errors.hpp"
#include "basiclab/json_io.hpp"
#include "basiclab/lemma.hpp"
#include "basiclab/nonbasic.hpp"
#include "basiclab/svg.hpp"

namespace {

using nlohmann::json;
using namespace basiclab;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BASICLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw InvalidInput("BASICLAB_BUDGET must be a positive integer");
  }
  return 1000000;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& file) {
  const json j = parse_json_file(file);
  const SternfeldArray arr = array_from_json(j);
  const ValidationReport report = validate_array(arr.shape, arr.points);
  emit(to_json(report, arr.shape));
  return report.ok ? kExitOk : kExitNegative;
}

int cmd_gen(const std::string& kind, int m, int n, double offset) {
  SternfeldArray arr;
  if (kind == "zigzag") {
    arr = gen_plane_zigzag(m);
  } else if (kind == "hypercube") {
    arr = gen_hypercube(n);
  } else if (kind == "product") {
    std::vector<SternfeldArray> factors(n, gen_plane_zigzag(m));
    std::vector<std::array<double, 2>> offsets;
    for (int t = 0; t < n; ++t)
      offsets.push_back({t * offset, t * offset});
    arr = gen_product(factors, offsets);
  } else {
    throw InvalidInput("gen-array: unknown kind " + kind);
  }
  emit(to_json(arr));
  return kExitOk;
}

int cmd_detect(const std::string& target, int size, const std::string& mode,
               std::uint64_t budget, const std::string& points_file) {
  const PointSet X = pointset_from_json(parse_json_file(points_file));
  if (target == "bolt") {
    const BoltMode bm = mode == "consecutive" ? BoltMode::ConsecutiveDistinct
                                              : BoltMode::AllDistinct;
    const auto bolt = detect_plane_bolt(X, size, bm, budget);
    if (!bolt) {
      emit(json{{"found", false}});
      return kExitNegative;
    }
    json out = to_json(*bolt);
    out["found"] = true;
    emit(out);
    return kExitOk;
  }
  if (target == "grid") {
    if (X.dim % 2 != 0)
      throw InvalidInput("detect --target grid: dim must be even");
    const GridShape shape{X.dim / 2, size};
    const auto arr = detect_grid_array(X, shape, budget);
    if (!arr) {
      emit(json{{"found", false}});
      return kExitNegative;
    }
    json out = to_json(*arr);
    out["found"] = true;
    emit(out);
    return kExitOk;
  }
  throw InvalidInput("detect: unknown target " + target);
}

int cmd_e_iterate(const std::string& points_file) {
  const PointSet X = pointset_from_json(parse_json_file(points_file));
  const ETrace trace = e_iterate(X);
  emit(to_json(trace));
  return trace.empties ? kExitOk : kExitNegative;
}

int cmd_decompose(const std::string& objective, const std::string& points_file,
                  const std::string& values_file) {
  const PointSet X = pointset_from_json(parse_json_file(points_file));
  const json vj = parse_json_file(values_file);
  if (!vj.is_array()) throw InvalidInput("decompose: values must be an array");
  const auto f = vj.get<std::vector<double>>();
  if (f.size() != X.points.size())
    throw InvalidInput("decompose: need one value per point");

  if (objective == "exact") {
    const auto fam = solve_exact(X, f);
    if (!fam) {
      emit(json{{"status", "infeasible"}});
      return kExitNegative;
    }
    json out = to_json(*fam);
    out["status"] = "optimal";
    emit(out);
    return kExitOk;
  }
  if (objective == "minimax") {
    const MinimaxOutcome outcome = min_supnorm(X, f);
    if (outcome.status == MinimaxOutcome::Status::Infeasible) {
      emit(json{{"status", "infeasible"}});
      return kExitNegative;
    }
    json out = to_json(*outcome.family);
    out["status"] = "optimal";
    out["value"] = outcome.value;
    emit(out);
    return kExitOk;
  }
  throw InvalidInput("decompose: unknown objective " + objective);
}

int cmd_lemma_check(const std::string& file) {
  const LemmaInstance inst = lemma_instance_from_json(parse_json_file(file));
  const ConditionCheck check = check_conditions(inst);
  if (!check.adjacency_zero || !check.half_far) {
    json out{{"conditions",
              {{"adjacency_zero", check.adjacency_zero},
               {"half_far", check.half_far}}}};
    if (check.first_violation) {
      const ConditionViolation& v = *check.first_violation;
      out["first_violation"] =
          json{{"kind", v.adjacency ? "adjacency" : "half_far"},
               {"voxel", v.i},
               {"value", v.value}};
    }
    emit(out);
    return kExitNegative;
  }
  emit(to_json(lemma_witness(inst)));
  return kExitOk;
}

int cmd_blowup(int n, int stages, bool slow) {
  // Stage sizes grow factorially; past S = 2 the LPs get big fast.
  if (stages > 2 && !slow)
    throw InvalidInput("blowup: pass --slow to run more than 2 stages");
  const BlowupReport report = blowup_experiment(n, stages);
  emit(to_json(report));
  return kExitOk;
}

int cmd_plot(const std::string& input_file, const std::string& out_file) {
  const json j = parse_json_file(input_file);
  std::vector<Point> points;
  bool connect = true;
  if (j.contains("points_lex")) {
    const SternfeldArray arr = array_from_json(j);
    if (arr.shape.ambient_dim() != 2)
      throw InvalidInput("plot: only plane arrays can be drawn");
    points = arr.points;
  } else if (j.contains("mode")) {
    points = bolt_from_json(j).points;
  } else if (j.contains("dim")) {
    const PointSet X = pointset_from_json(j);
    if (X.dim != 2) throw InvalidInput("plot: only plane sets can be drawn");
    points = X.points;
    connect = false;
  } else {
    throw InvalidInput("plot: input is neither an array, a bolt nor a set");
  }
  const std::string svg = render_plane_figure_svg(points, connect);
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw InvalidInput("plot: cannot open output " + out_file);
  out << svg;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sternfeld arrays, basic decompositions and the norm blow-up "
               "experiment"};
  app.require_subcommand(1);

  std::string file, points_file, values_file, out_file;
  std::string kind, target = "bolt", mode = "distinct", objective = "minimax";
  int m = 4, n = 1, size = 2, stages = 1;
  double offset = 0.0;
  std::uint64_t budget = 0;
  bool slow = false;

  auto* validate = app.add_subcommand("validate-array",
                                      "Check a candidate Sternfeld array");
  validate->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen-array", "Generate a Sternfeld array");
  gen->add_option("--kind", kind, "zigzag|hypercube|product")->required();
  gen->add_option("--m", m, "size per axis");
  gen->add_option("--n", n, "array dimension");
  gen->add_option("--offset", offset, "per-factor translation (product)");

  auto* detect = app.add_subcommand("detect", "Search for a bolt or array");
  detect->add_option("--target", target, "bolt|grid");
  detect->add_option("--size", size, "target length / grid size")->required();
  detect->add_option("--mode", mode, "distinct|consecutive");
  detect->add_option("--budget", budget, "max search nodes");
  detect->add_option("points", points_file)->required();

  auto* eit = app.add_subcommand("e-iterate", "Iterate the E-operator");
  eit->add_option("points", points_file)->required();

  auto* dec = app.add_subcommand("decompose",
                                 "Decompose values into per-axis functions");
  dec->add_option("--objective", objective, "exact|minimax");
  dec->add_option("points", points_file)->required();
  dec->add_option("values", values_file)->required();

  auto* lem = app.add_subcommand("lemma-check",
                                 "Check lemma conditions and emit a witness");
  lem->add_option("instance", file)->required();

  auto* blow = app.add_subcommand("blowup", "Run the norm blow-up experiment");
  blow->add_option("--n", n)->required();
  blow->add_option("--stages", stages)->required();
  blow->add_flag("--slow", slow, "allow more than 2 stages");

  auto* plot = app.add_subcommand("plot", "Emit an SVG figure");
  plot->add_option("input", file)->required();
  plot->add_option("--out", out_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (budget == 0) budget = default_budget();
    if (validate->parsed()) return cmd_validate(file);
    if (gen->parsed()) return cmd_gen(kind, m, n, offset);
    if (detect->parsed())
      return cmd_detect(target, size, mode, budget, points_file);
    if (eit->parsed()) return cmd_e_iterate(points_file);
    if (dec->parsed()) return cmd_decompose(objective, points_file, values_file);
    if (lem->parsed()) return cmd_lemma_check(file);
    if (blow->parsed()) return cmd_blowup(n, stages, slow);
    if (plot->parsed()) return cmd_plot(file, out_file);
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const SolverError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const DegenerateInput& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
