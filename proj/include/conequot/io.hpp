#pragma once

// JSON input documents, the classification pipeline, and report rendering (JSON, text, DOT).

#include "conequot/collections.hpp"
#include "conequot/geometry.hpp"
#include "conequot/git.hpp"
#include "conequot/grading.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conequot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// A candidate bunch given by the generators of its cones.
struct NamedBunch {
  std::string name;
  std::vector<std::vector<IntVector>> cones;
};

struct InputDocument {
  std::string schema_version = kSchemaVersion;
  GradingInput grading;
  std::vector<NamedBunch> bunches;
  Json metadata = Json::object();
};

struct ParseResult {
  InputDocument document;
  std::vector<std::string> warnings;  // unknown fields outside strict mode
};

/// Parses and structurally validates a document. All problems found are reported together in
/// one InputError, one per line, each prefixed with its JSON pointer.
ParseResult parse_input(std::string_view text, bool strict = false);

/// The document in canonical form; parse_input(emit_input(d)) reproduces d.
Json input_to_json(const InputDocument& doc);

struct BunchStudy {
  std::string name;
  Bunch bunch;
  BunchCheck check;
  std::optional<std::size_t> collection;  // index into Classification::collections
  std::optional<GeometryReport> geometry;
  std::string error;
};

struct Classification {
  InputDocument input;
  ValidationReport validation;
  OrbitConeSet omega;
  GitFan fan;
  std::vector<Collection> collections;  // all 2-maximal, quasiprojective flags filled
  std::vector<std::size_t> interior;    // indices into collections
  MorphismPoset poset;                  // over the interior collections
  std::vector<GeometryReport> geometry;  // one per interior collection, collection_id indexes collections
  std::vector<BunchStudy> bunch_studies;
  std::vector<std::string> warnings;
};

struct PipelineOptions {
  std::size_t max_omega = kDefaultMaxOmega;
  bool with_geometry = true;
};

/// orbit_cones -> git_fan -> two_maximal_collections -> interior filter -> geometry_report ->
/// morphism_poset, plus a study of every bunch listed in the input.
Classification classify(const InputDocument& doc, const PipelineOptions& opts = {});

Json cone_to_json(const Cone& c);
Json validation_to_json(const InputDocument& doc, const ValidationReport& v);
Json orbit_cones_to_json(const OrbitConeSet& omega);
Json git_fan_to_json(const GitFan& fan);
Json collections_to_json(const Classification& c);
Json classification_to_json(const Classification& c);

/// Indented JSON with short arrays that contain no objects kept on one line.
std::string format_json(const Json& j);

std::string validation_to_text(const InputDocument& doc, const ValidationReport& v);
std::string orbit_cones_to_text(const OrbitConeSet& omega);
std::string git_fan_to_text(const GitFan& fan);
std::string collections_to_text(const Classification& c);
std::string classification_to_text(const Classification& c);

/// Variety-level diagram: node X<i> per interior collection i, an edge X<j> -> X<i> for every
/// covering relation Psi_i below Psi_j.
std::string emit_dot(const Classification& c);
std::string emit_dot(const MorphismPoset& poset, const std::vector<std::string>& names);

/// "X<i>" for collection i.
std::string collection_name(std::size_t i);

}  // namespace conequot
