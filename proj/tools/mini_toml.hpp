#pragma once

#include <string>

#include <json.hpp>

namespace minitoml {

// Reads the TOML subset used by bench configs into a JSON object:
// key = value pairs, [table] and [[array-of-tables]] headers with dotted
// names, # comments, basic and literal strings, integers, floats, booleans
// and (possibly multi-line) arrays. Throws std::runtime_error with a line
// number on anything else.
nlohmann::ordered_json parse(const std::string& text);

}  // namespace minitoml
