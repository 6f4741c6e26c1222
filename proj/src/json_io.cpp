#include "basiclab/json_io.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "basiclab/errors.hpp"

namespace basiclab {

using nlohmann::json;

namespace {

std::vector<Point> points_from_json(const json& j, int dim) {
  if (!j.is_array()) throw InvalidInput("json: expected an array of points");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const json& pj : j) {
    if (!pj.is_array() || static_cast<int>(pj.size()) != dim)
      throw InvalidInput("json: point has wrong dimension");
    Point p;
    p.reserve(pj.size());
    for (const json& v : pj) {
      if (!v.is_number()) throw InvalidInput("json: coordinate is not a number");
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw InvalidInput("json: coordinate not finite");
      p.push_back(x);
    }
    out.push_back(std::move(p));
  }
  return out;
}

json points_to_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const Point& p : points) out.push_back(p);
  return out;
}

}  // namespace

json to_json(const PointSet& X) {
  return json{{"dim", X.dim}, {"points", points_to_json(X.points)}};
}

PointSet pointset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw InvalidInput("json: point set needs \"dim\" and \"points\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw InvalidInput("json: \"dim\" must be a positive integer");
  PointSet X;
  X.dim = j["dim"].get<int>();
  X.points = points_from_json(j["points"], X.dim);
  return X;
}

json to_json(const SternfeldArray& arr) {
  return json{{"n", arr.shape.n},
              {"m", arr.shape.m},
              {"points_lex", points_to_json(arr.points)}};
}

SternfeldArray array_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("points_lex"))
    throw InvalidInput("json: array needs \"n\", \"m\", \"points_lex\"");
  SternfeldArray arr;
  arr.shape.n = j["n"].get<int>();
  arr.shape.m = j["m"].get<int>();
  if (arr.shape.n < 1 || arr.shape.m < 1)
    throw InvalidInput("json: array shape must be positive");
  arr.points = points_from_json(j["points_lex"], arr.shape.ambient_dim());
  if (arr.points.size() != arr.shape.voxel_count())
    throw InvalidInput("json: array must hold m^n points");
  return arr;
}

json to_json(const PlaneBolt& bolt) {
  return json{{"mode", bolt.mode == BoltMode::AllDistinct
                           ? "all-distinct"
                           : "consecutive-distinct"},
              {"points", points_to_json(bolt.points)}};
}

PlaneBolt bolt_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("points"))
    throw InvalidInput("json: bolt needs \"mode\" and \"points\"");
  PlaneBolt bolt;
  const std::string mode = j["mode"].get<std::string>();
  if (mode == "all-distinct")
    bolt.mode = BoltMode::AllDistinct;
  else if (mode == "consecutive-distinct")
    bolt.mode = BoltMode::ConsecutiveDistinct;
  else
    throw InvalidInput("json: unknown bolt mode");
  bolt.points = points_from_json(j["points"], 2);
  return bolt;
}

json to_json(const ValidationReport& report, const GridShape& shape) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json vj{{"kind", v.kind == Violation::Kind::Duplicate ? "duplicate"
                                                          : "mismatch"},
            {"voxels", json::array({v.i, v.j})}};
    if (v.kind == Violation::Kind::Mismatch) {
      vj["axis"] = v.axis;
      vj["coordinate"] = v.coordinate;
      vj["values"] = json::array({v.value_i, v.value_j});
    }
    violations.push_back(std::move(vj));
  }
  return json{{"ok", report.ok},
              {"n", shape.n},
              {"m", shape.m},
              {"violations", std::move(violations)}};
}

json to_json(const LemmaInstance& inst) {
  json rows = json::array();
  for (const auto& row : inst.c) rows.push_back(row);
  return json{{"n", inst.shape.n}, {"m", inst.shape.m}, {"c_lex", rows}};
}

LemmaInstance lemma_instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("c_lex"))
    throw InvalidInput("json: lemma instance needs \"n\", \"m\", \"c_lex\"");
  LemmaInstance inst;
  inst.shape.n = j["n"].get<int>();
  inst.shape.m = j["m"].get<int>();
  for (const json& row : j["c_lex"])
    inst.c.push_back(row.get<std::vector<double>>());
  validate_instance(inst);
  return inst;
}

json to_json(const LemmaCertificate& cert) {
  json j{{"conditions",
          {{"adjacency_zero", cert.conditions.adjacency_zero},
           {"half_far", cert.conditions.half_far}}},
         {"bound", cert.bound},
         {"audit",
          {{"sum_A", cert.sum_A}, {"sum_B", cert.sum_B}, {"sum_C", cert.sum_C}}}};
  j["witness"] = json{{"voxel", cert.witness_voxel},
                      {"coordinate", cert.witness_coordinate},
                      {"value", cert.witness_value}};
  return j;
}

json to_json(const CoordinateFunctionFamily& family) {
  json axes = json::array();
  for (std::size_t k = 0; k < family.axes.size(); ++k) {
    json table = json::array();
    for (const auto& [key, value] : family.axes[k].entries)
      table.push_back(json::array({key, value}));
    axes.push_back(json{{"k", k + 1}, {"table", std::move(table)}});
  }
  return json{{"axes", std::move(axes)}, {"norm", family.norm()}};
}

CoordinateFunctionFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("axes"))
    throw InvalidInput("json: decomposition needs \"axes\"");
  CoordinateFunctionFamily fam;
  fam.axes.resize(j["axes"].size());
  for (const json& aj : j["axes"]) {
    const int k = aj.at("k").get<int>();
    if (k < 1 || k > static_cast<int>(fam.axes.size()))
      throw InvalidInput("json: axis index out of range");
    for (const json& entry : aj.at("table"))
      fam.axes[k - 1].entries.emplace_back(entry.at(0).get<double>(),
                                           entry.at(1).get<double>());
  }
  return fam;
}

json to_json(const ETrace& trace) {
  json stages = json::array();
  for (const auto& stage : trace.stages) stages.push_back(stage);
  return json{{"stages", std::move(stages)},
              {"empties", trace.empties},
              {"l", trace.l}};
}

json to_json(const BlowupReport& report) {
  json stages = json::array();
  for (const StageRecord& rec : report.stages) {
    json sj{{"s", rec.s},
            {"m_s", rec.m_s},
            {"array_size", rec.array_size},
            {"lp", json{{"status", rec.lp_optimal ? "optimal" : "infeasible"}}}};
    if (rec.lp_optimal) sj["lp"]["value"] = rec.lp_value;
    stages.push_back(std::move(sj));
  }
  json certs = json::array();
  for (const StageCertificate& cert : report.certificates) {
    certs.push_back(json{{"s", cert.s},
                         {"array_m", cert.array_m},
                         {"certificate", to_json(cert.lemma)},
                         {"phi_diff_lower", cert.phi_diff_lower}});
  }
  return json{{"n", report.n},
              {"stage_count", report.stage_count},
              {"m", report.m},
              {"stages", std::move(stages)},
              {"certificates", std::move(certs)},
              {"tail_audits", report.tail_audits},
              {"verdict", report.verdict}};
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace basiclab
