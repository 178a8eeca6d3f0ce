#pragma once

#include <string>

#include "json.hpp"
#include "planesyz/report.hpp"

namespace planesyz {

using Json = nlohmann::ordered_json;

Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

/// Keys appear in a fixed order, so equal reports serialize to equal bytes.
Json report_to_json(const CurveReport& report);
/// Inverse of report_to_json. Throws ParseError on malformed input.
CurveReport report_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace planesyz
