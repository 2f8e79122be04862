#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "creases/analyze.hpp"
#include "creases/branched.hpp"
#include "creases/composer.hpp"
#include "creases/config.hpp"
#include "creases/weighting.hpp"

namespace creases {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Top-level "schema" field selects the document kind:
//   crease/1  -> CreaseConfig
//   diagram/1 -> branched::BranchedDiagram
using ParsedDocument = std::variant<CreaseConfig, branched::BranchedDiagram>;

ParsedDocument parse_document(const std::string& json_text);
ParsedDocument parse_document_file(const std::string& path);

std::string config_to_json(const CreaseConfig& cfg);
std::string diagram_to_json(const branched::BranchedDiagram& d);

std::string weighting_to_json(const CreaseConfig& cfg, const Weighting& w);
std::string report_to_json(const RealizationReport& report);
std::string table_to_json(const FiveCurveTable& table);

}  // namespace creases
