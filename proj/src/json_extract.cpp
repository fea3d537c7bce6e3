#include "hifi/json_extract.hpp"

#include "hifi/errors.hpp"
#include "hifi/strings.hpp"

namespace hifi {

namespace {

// Removes a leading ```lang fence line and a trailing ``` fence line.
std::string strip_code_fences(std::string_view text) {
    std::string trimmed = trim(text);
    if (!trimmed.starts_with("```")) return trimmed;
    auto first_newline = trimmed.find('\n');
    if (first_newline == std::string::npos) return trimmed;
    std::string body = trimmed.substr(first_newline + 1);
    auto closing = body.rfind("```");
    if (closing != std::string::npos && is_blank(body.substr(closing + 3))) {
        body = body.substr(0, closing);
    }
    return body;
}

// Finds the end (one past ']') of a balanced array starting at `start`,
// honoring JSON string literals and escapes. npos when unbalanced.
std::size_t balanced_array_end(std::string_view text, std::size_t start) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '[') {
            ++depth;
        } else if (c == ']') {
            --depth;
            if (depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

}  // namespace

nlohmann::json extract_json_array(std::string_view text) {
    std::string body = strip_code_fences(text);

    bool saw_bracket = false;
    std::size_t pos = 0;
    while ((pos = body.find('[', pos)) != std::string::npos) {
        saw_bracket = true;
        std::size_t end = balanced_array_end(body, pos);
        if (end != std::string_view::npos) {
            auto parsed = nlohmann::json::parse(body.substr(pos, end - pos), nullptr,
                                                /*allow_exceptions=*/false);
            if (parsed.is_array()) return parsed;
        }
        ++pos;
    }

    if (saw_bracket) {
        throw JsonArrayError(JsonArrayError::Kind::malformed_array,
                             "found '[' but no parseable JSON array");
    }
    throw JsonArrayError(JsonArrayError::Kind::no_array_found, "no JSON array in model output");
}

}  // namespace hifi
