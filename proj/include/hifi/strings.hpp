#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hifi {

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

bool is_blank(std::string_view s);

// Collapses every run of whitespace (space, tab, CR, LF, FF, VT) to a single
// space and trims the ends. "a  b\n c" -> "a b c".
std::string collapse_whitespace(std::string_view s);

// Longest prefix of `s` that is at most `max_bytes` long and does not split a
// UTF-8 code point.
std::string utf8_prefix(std::string_view s, std::size_t max_bytes);

std::vector<std::string> split_lines(std::string_view s);

// Replaces every occurrence of `needle` in `haystack`.
std::string replace_all(std::string haystack, std::string_view needle, std::string_view replacement);

// "\r\n" and lone "\r" become "\n".
std::string normalize_newlines(std::string_view s);

}  // namespace hifi
