#pragma once

#include "conifold/fibered.hpp"
#include "conifold/localmodel.hpp"
#include "conifold/relations.hpp"
#include "conifold/surgery.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace conifold {

// All documents are UTF-8 JSON with a top-level schema_version; integer matrix
// entries travel as decimal strings so arbitrary precision survives the trip.
// nlohmann::json emits keys in sorted order, and no document carries a
// timestamp, so serialization is byte-deterministic.
inline constexpr const char* kSchemaVersion = "1.0";

using Json = nlohmann::json;

std::string integer_to_string(const Integer& x);
Integer integer_from_string(const std::string& s);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

Json config_to_json(const CycleConfiguration& config);
CycleConfiguration config_from_json(const Json& j);

Json topology_to_json(const SixManifoldTopology& t);
SixManifoldTopology topology_from_json(const Json& j);

Json search_report_to_json(const SearchReport& report);
SearchReport search_report_from_json(const Json& j);

Json residual_report_to_json(const ResidualReport& report);

Json fibration_to_json(const EllipticFibration& f);
EllipticFibration fibration_from_json(const Json& j);
Json arc_to_json(const BaseArc& arc);
BaseArc arc_from_json(const Json& j);

// Canonical rendering used for files and stdout: sorted keys, 2-space indent,
// trailing newline.
std::string render_json(const Json& j);

// Parse with location diagnostics mapped to DataError.
Json parse_json(const std::string& text, const std::string& origin);
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// FNV-1a 64 over raw bytes, rendered as "fnv1a64:<16 hex digits>".
std::string fnv1a64_digest(const std::string& bytes);

}  // namespace conifold
