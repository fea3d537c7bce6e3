#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

namespace hifi {

// Returns the first syntactically valid top-level JSON array in `text`,
// scanning '[' ... matching ']' spans after stripping surrounding markdown
// code fences. Throws JsonArrayError (no_array_found / malformed_array).
nlohmann::json extract_json_array(std::string_view text);

}  // namespace hifi
