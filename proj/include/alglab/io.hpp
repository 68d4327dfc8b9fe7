#pragma once

#include <string>
#include <variant>

#include "alglab/metric.hpp"
#include "alglab/presets.hpp"

#include <json.hpp>

namespace alglab {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON algebra document:
// {"dim": n, "mode": "rational"|"float", "labels": [...],
//  "constants": [[i,j,k,"p/q"|number],...], "metric": [[...],...], "meta": {}}
struct LoadedAlgebra {
  bool rational_mode = true;
  std::optional<Algebra<Rat>> alg_exact;
  std::optional<Mat<Rat>> metric_exact;
  std::optional<Algebra<double>> alg_float;
  std::optional<Mat<double>> metric_float;
  nlohmann::json meta;
};

LoadedAlgebra load_algebra_file(const std::string& path);
LoadedAlgebra parse_algebra_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const Algebra<Rat>& a, const Mat<Rat>* h,
                               const nlohmann::json& meta = {});
nlohmann::json algebra_to_json(const Algebra<double>& a, const Mat<double>* h,
                               const nlohmann::json& meta = {});
void save_algebra_file(const std::string& path, const nlohmann::json& doc);

// A source is either a preset address ("preset:name:params" / bare preset
// name) or a path to an algebra file.
struct Source {
  Preset preset;          // file sources are wrapped into an anonymous preset
  std::string origin;     // the string the user gave
};
Source resolve_source(const std::string& spec);

// Report envelope: every CLI command emits one of these; identical
// (input, seed, config) produce byte-identical output.
struct Report {
  nlohmann::json body;
  std::string to_json() const;
  std::string to_csv() const;
};

Report make_report(const std::string& command, const nlohmann::json& config,
                   const nlohmann::json& result);

extern const char* const kToolVersion;

}  // namespace alglab
