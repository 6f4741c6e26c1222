#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "basiclab/arrays.hpp"
#include "basiclab/core.hpp"
#include "basiclab/decompose.hpp"
#include "basiclab/lemma.hpp"
#include "basiclab/nonbasic.hpp"

// JSON wire formats. Everything is UTF-8 JSON; numbers are serialized with
// the shortest round-trip representation.
//
//   PointSet       {"dim": d, "points": [[...d numbers...], ...]}
//   Array          {"n":, "m":, "points_lex": [[...2n numbers...], ...]}
//   Bolt           {"mode": "all-distinct"|"consecutive-distinct",
//                   "points": [...]}
//   LemmaInstance  {"n":, "m":, "c_lex": [[2n reals per voxel], ...]}
//   Decomposition  {"axes": [{"k": 1, "table": [[v, phi], ...]}, ...],
//                   "norm": t}
//   ETrace         stage lists of point indices into the input order.

namespace basiclab {

nlohmann::json to_json(const PointSet& X);
PointSet pointset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SternfeldArray& arr);
SternfeldArray array_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PlaneBolt& bolt);
PlaneBolt bolt_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidationReport& report,
                        const GridShape& shape);

nlohmann::json to_json(const LemmaInstance& inst);
LemmaInstance lemma_instance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LemmaCertificate& cert);

nlohmann::json to_json(const CoordinateFunctionFamily& family);
CoordinateFunctionFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ETrace& trace);

nlohmann::json to_json(const BlowupReport& report);

nlohmann::json parse_json_file(const std::string& path);

}  // namespace basiclab
