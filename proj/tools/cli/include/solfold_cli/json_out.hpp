#pragma once

#include <json.hpp>

#include <string>

namespace solfold::cli {

using Json = nlohmann::ordered_json;

// Pretty-printed JSON (two-space indent, trailing newline). Floating-point
// values use 17 significant digits; non-finite values become null.
std::string dump_json(const Json& value);

// %.17g.
std::string format_double(double v);

}  // namespace solfold::cli
