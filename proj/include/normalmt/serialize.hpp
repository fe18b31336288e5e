#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "normalmt/analysis.hpp"
#include "normalmt/curve.hpp"
#include "normalmt/scheme.hpp"
#include "normalmt/transform.hpp"

namespace nmt {

// Wire formats. Doubles go through nlohmann's shortest round-trip printing,
// so a saved decomposition reconstructs bit-identically.

nlohmann::json scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const TransformConfig& c);
TransformConfig config_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j);

void save_decomposition(const std::string& path, const Decomposition& dec);
Decomposition load_decomposition(const std::string& path);

nlohmann::json curve_to_json(const Curve& c);
std::unique_ptr<Curve> curve_from_json(const nlohmann::json& j);
// Mini-spec: "circle", "circle:<r>", "ellipse:<a>,<b>", or "@<path>" loading
// a JSON curve spec.
std::unique_ptr<Curve> curve_from_spec(const std::string& spec);

std::string decay_table_csv(const DecayTable& table);
std::string points_csv(const PeriodicSequence<Point2>& points);
std::string diagnostics_csv(const Decomposition& dec);
std::string experiment_csv(const std::vector<ExperimentRow>& rows);
std::string normal_accuracy_csv(const NormalAccuracyReport& report);

}  // namespace nmt
