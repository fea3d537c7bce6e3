#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hifi/types.hpp"

namespace hifi {

// Lenient HTML token stream. Comments, doctypes, and processing instructions
// are dropped; script/style bodies are consumed at the tokenizer level; text
// is entity-decoded. Exposed so tests can rebuild the retained-text oracle
// from the same event stream the parser consumes.
struct HtmlToken {
    enum class Type { open, close, text };
    Type type = Type::text;
    std::string name;  // lowercase tag name for open/close
    std::string text;  // decoded payload for text tokens
    bool self_closing = false;
};

std::vector<HtmlToken> tokenize_html(std::string_view html);

// Elements removed wholesale before sectioning (boilerplate and non-content).
bool is_stripped_element(std::string_view tag);

// Groups block text under its nearest h1-h4 heading. Text before the first
// heading becomes a synthetic level-0 preamble; h5/h6 fold into the current
// section as bold lines; headings with no body text produce no section.
// Throws ParseError when the document has no extractable text.
PageDocument parse_hierarchical(std::string_view html, const std::string& url, int snippet_chars = 200);

std::string decode_html_entities(std::string_view s);

}  // namespace hifi
