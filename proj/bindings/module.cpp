#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "basiclab/arrays.hpp"
#include "basiclab/core.hpp"
#include "basiclab/decompose.hpp"
#include "basiclab/errors.hpp"
#include "basiclab/json_io.hpp"
#include "basiclab/lemma.hpp"
#include "basiclab/nonbasic.hpp"
#include "basiclab/svg.hpp"

namespace py = pybind11;
using namespace basiclab;

namespace {

PointSet make_pointset(int dim, const std::vector<Point>& points, double eps) {
  PointSet X;
  X.dim = dim;
  X.points = points;
  X.eps = eps;
  for (const Point& p : X.points)
    if (static_cast<int>(p.size()) != dim)
      throw InvalidInput("point dimension mismatch");
  return X;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sternfeld arrays, basic decompositions and the norm blow-up "
            "experiment";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput",
                                          PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed",
                                             PyExc_RuntimeError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<ScheduleInvariantViolated>(
      m, "ScheduleInvariantViolated", PyExc_RuntimeError);

  py::class_<SternfeldArray>(m, "SternfeldArray")
      .def_property_readonly(
          "n", [](const SternfeldArray& a) { return a.shape.n; })
      .def_property_readonly(
          "m", [](const SternfeldArray& a) { return a.shape.m; })
      .def_property_readonly(
          "points", [](const SternfeldArray& a) { return a.points; })
      .def("to_json", [](const SternfeldArray& a) { return to_json(a).dump(); });

  // core
  m.def("xi", &xi, py::arg("t"), py::arg("i_t"));
  m.def("parity_sign", &parity_sign, py::arg("voxel"));
  m.def(
      "voxel_adjacency",
      [](const Voxel& i, const Voxel& j, int n, int mm) {
        return voxel_adjacency(i, j, GridShape{n, mm});
      },
      py::arg("i"), py::arg("j"), py::arg("n"), py::arg("m"));
  m.def(
      "lex_rank",
      [](const Voxel& v, int n, int mm) {
        return lex_rank(v, GridShape{n, mm});
      },
      py::arg("voxel"), py::arg("n"), py::arg("m"));
  m.def(
      "lex_unrank",
      [](std::uint64_t r, int n, int mm) {
        return lex_unrank(r, GridShape{n, mm});
      },
      py::arg("rank"), py::arg("n"), py::arg("m"));
  m.def(
      "project",
      [](int dim, const std::vector<Point>& pts, int k, double eps) {
        return project(make_pointset(dim, pts, eps), k);
      },
      py::arg("dim"), py::arg("points"), py::arg("k"), py::arg("eps") = 0.0);
  m.def(
      "min_pairwise_distance",
      [](int dim, const std::vector<Point>& pts) {
        return min_pairwise_distance(make_pointset(dim, pts, 0.0));
      },
      py::arg("dim"), py::arg("points"));

  // arrays
  m.def("gen_plane_zigzag", &gen_plane_zigzag, py::arg("m"));
  m.def("gen_hypercube", &gen_hypercube, py::arg("n"));
  m.def(
      "gen_product",
      [](const std::vector<SternfeldArray>& factors,
         const std::vector<std::array<double, 2>>& offsets) {
        return gen_product(factors, offsets);
      },
      py::arg("factors"), py::arg("offsets"));
  m.def(
      "validate_array",
      [](int n, int mm, const std::vector<Point>& points) {
        const GridShape shape{n, mm};
        const ValidationReport report = validate_array(shape, points);
        return py::make_tuple(report.ok, to_json(report, shape).dump());
      },
      py::arg("n"), py::arg("m"), py::arg("points_lex"));
  m.def(
      "detect_plane_bolt",
      [](const std::vector<Point>& pts, int target_len, const std::string& mode,
         std::uint64_t budget) -> std::optional<std::vector<Point>> {
        const BoltMode bm = mode == "consecutive-distinct"
                                ? BoltMode::ConsecutiveDistinct
                                : BoltMode::AllDistinct;
        const auto bolt =
            detect_plane_bolt(make_pointset(2, pts, 0.0), target_len, bm, budget);
        if (!bolt) return std::nullopt;
        return bolt->points;
      },
      py::arg("points"), py::arg("target_len"),
      py::arg("mode") = "all-distinct", py::arg("budget") = 1000000);
  m.def(
      "detect_grid_array",
      [](const std::vector<Point>& pts, int n, int mm,
         std::uint64_t budget) -> std::optional<SternfeldArray> {
        return detect_grid_array(make_pointset(2 * n, pts, 0.0),
                                 GridShape{n, mm}, budget);
      },
      py::arg("points"), py::arg("n"), py::arg("m"),
      py::arg("budget") = 1000000);

  // lemma
  m.def(
      "abc_sizes",
      [](int n, int mm) {
        const IndexPartition part = abc_partition(GridShape{n, mm});
        return py::make_tuple(part.A.size(), part.B.size(), part.C.size());
      },
      py::arg("n"), py::arg("m"));
  m.def(
      "check_conditions",
      [](int n, int mm, const std::vector<std::vector<double>>& c, double tau) {
        LemmaInstance inst;
        inst.shape = GridShape{n, mm};
        inst.c = c;
        const ConditionCheck check = check_conditions(inst, tau);
        return py::make_tuple(check.adjacency_zero, check.half_far);
      },
      py::arg("n"), py::arg("m"), py::arg("c_lex"), py::arg("tau") = 1e-9);
  m.def(
      "lemma_witness",
      [](int n, int mm, const std::vector<std::vector<double>>& c, double tau) {
        LemmaInstance inst;
        inst.shape = GridShape{n, mm};
        inst.c = c;
        return to_json(lemma_witness(inst, tau)).dump();
      },
      py::arg("n"), py::arg("m"), py::arg("c_lex"), py::arg("tau") = 1e-9);

  // decompose
  m.def(
      "solve_exact",
      [](int dim, const std::vector<Point>& pts, const std::vector<double>& f)
          -> std::optional<std::string> {
        const auto fam = solve_exact(make_pointset(dim, pts, 0.0), f);
        if (!fam) return std::nullopt;
        return to_json(*fam).dump();
      },
      py::arg("dim"), py::arg("points"), py::arg("values"));
  m.def(
      "min_supnorm",
      [](int dim, const std::vector<Point>& pts,
         const std::vector<double>& f) -> py::tuple {
        const MinimaxOutcome out = min_supnorm(make_pointset(dim, pts, 0.0), f);
        if (out.status == MinimaxOutcome::Status::Infeasible)
          return py::make_tuple("infeasible", py::none(), py::none());
        return py::make_tuple("optimal", out.value,
                              to_json(*out.family).dump());
      },
      py::arg("dim"), py::arg("points"), py::arg("values"));
  m.def(
      "extend",
      [](const std::string& family_json, int k, double v) {
        return extend(family_from_json(nlohmann::json::parse(family_json)), k,
                      v);
      },
      py::arg("family_json"), py::arg("k"), py::arg("v"));
  m.def(
      "e_step",
      [](int dim, const std::vector<Point>& pts) {
        return e_step(make_pointset(dim, pts, 0.0)).points;
      },
      py::arg("dim"), py::arg("points"));
  m.def(
      "e_iterate",
      [](int dim, const std::vector<Point>& pts) {
        const ETrace trace = e_iterate(make_pointset(dim, pts, 0.0));
        return py::make_tuple(trace.stages, trace.empties, trace.l);
      },
      py::arg("dim"), py::arg("points"));
  m.def(
      "is_forest",
      [](const std::vector<Point>& pts) {
        return is_forest(make_pointset(2, pts, 0.0));
      },
      py::arg("points"));

  // nonbasic
  m.def("choose_next_m", &choose_next_m, py::arg("m_s"), py::arg("phi_norm"),
        py::arg("s"));
  m.def("tail_audit", &tail_audit, py::arg("m"), py::arg("s"));
  m.def(
      "bump_values",
      [](const SternfeldArray& arr, const std::vector<Point>& queries) {
        const BumpFunction f = bump(arr);
        std::vector<double> out;
        out.reserve(queries.size());
        for (const Point& q : queries) out.push_back(f.eval(q));
        return out;
      },
      py::arg("array"), py::arg("queries"));
  m.def(
      "blowup_experiment",
      [](int n, int S) { return to_json(blowup_experiment(n, S)).dump(); },
      py::arg("n"), py::arg("stages"));

  // svg
  m.def("render_plane_figure_svg", &render_plane_figure_svg, py::arg("points"),
        py::arg("connect") = true);
}
