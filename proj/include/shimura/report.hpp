#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shimura/obstruction.hpp"
#include "shimura/tracesets.hpp"

namespace shimura::report {

using nlohmann::json;

inline constexpr std::string_view kVersion = "shimura-cert 1.0.0";

// Field names are part of the certificate schema and must not change.
json field_to_json(const obstruction::FieldRecord& f);
obstruction::FieldRecord field_from_json(const json& j);

/// Certificate object with "verdict": "Proven", the given citations and the
/// tool version.
json certificate_to_json(const obstruction::Certificate& c, const std::vector<std::string>& citations = {});
obstruction::Certificate certificate_from_json(const json& j);

json verdict_to_json(const obstruction::Verdict& v, const std::vector<std::string>& citations = {});
obstruction::Verdict verdict_from_json(const json& j);

json hasse_to_json(const obstruction::HasseReport& r);
obstruction::HasseReport hasse_from_json(const json& j);

json trace_data_to_json(const tracesets::TraceData& t);
tracesets::TraceData trace_data_from_json(const json& j);

}  // namespace shimura::report
