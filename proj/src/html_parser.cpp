#include "hifi/html_parser.hpp"

#include <array>
#include <cctype>
#include <optional>

#include "hifi/errors.hpp"
#include "hifi/strings.hpp"

namespace hifi {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_raw_text_element(std::string_view tag) { return tag == "script" || tag == "style"; }

bool is_void_element(std::string_view tag) {
    static const std::array<std::string_view, 14> tags = {
        "area", "base", "br",  "col",   "embed",  "hr",    "img",
        "input", "link", "meta", "param", "source", "track", "wbr",
    };
    for (auto t : tags) {
        if (tag == t) return true;
    }
    return false;
}

// Block boundaries that terminate the current paragraph.
bool is_block_element(std::string_view tag) {
    static const std::array<std::string_view, 24> tags = {
        "p",  "div", "section", "article", "main",    "header",  "blockquote", "pre",
        "ul", "ol",  "li",      "table",   "tr",      "figure",  "figcaption", "dl",
        "dt", "dd",  "hr",      "address", "details", "summary", "fieldset",   "form",
    };
    for (auto t : tags) {
        if (tag == t) return true;
    }
    return false;
}

int heading_level_of(std::string_view tag) {
    if (tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6') return tag[1] - '0';
    return 0;
}

std::string parse_tag_name(std::string_view html, std::size_t& pos) {
    std::string name;
    while (pos < html.size()) {
        char c = html[pos];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':') {
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            ++pos;
        } else {
            break;
        }
    }
    return name;
}

// Advances past attributes up to and including '>'. Returns true when the tag
// is self-closing. Quoted attribute values may contain '>'.
bool skip_attributes(std::string_view html, std::size_t& pos) {
    bool self_closing = false;
    char quote = 0;
    while (pos < html.size()) {
        char c = html[pos];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            ++pos;
            return self_closing;
        } else if (c == '/') {
            self_closing = true;
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '=') {
            self_closing = false;
        }
        ++pos;
    }
    return self_closing;
}

}  // namespace

std::string decode_html_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        auto semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view entity = s.substr(i + 1, semi - i - 1);
        if (entity == "amp") out.push_back('&');
        else if (entity == "lt") out.push_back('<');
        else if (entity == "gt") out.push_back('>');
        else if (entity == "quot") out.push_back('"');
        else if (entity == "apos") out.push_back('\'');
        else if (entity == "nbsp") out.push_back(' ');
        else if (entity == "mdash") out += "\xE2\x80\x94";
        else if (entity == "ndash") out += "\xE2\x80\x93";
        else if (entity == "hellip") out += "\xE2\x80\xA6";
        else if (entity == "rsquo") out += "\xE2\x80\x99";
        else if (entity == "lsquo") out += "\xE2\x80\x98";
        else if (entity == "rdquo") out += "\xE2\x80\x9D";
        else if (entity == "ldquo") out += "\xE2\x80\x9C";
        else if (!entity.empty() && entity[0] == '#') {
            unsigned long cp = 0;
            bool ok = entity.size() > 1;
            if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
                for (std::size_t k = 2; k < entity.size() && ok; ++k) {
                    char c = entity[k];
                    if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
                    else cp = cp * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(c))
                                                                       ? c - '0'
                                                                       : std::tolower(c) - 'a' + 10);
                }
            } else {
                for (std::size_t k = 1; k < entity.size() && ok; ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(entity[k]))) ok = false;
                    else cp = cp * 10 + static_cast<unsigned long>(entity[k] - '0');
                }
            }
            if (ok && cp > 0) append_utf8(out, cp);
            else { out.push_back('&'); ++i; continue; }
        } else {
            // Unknown entity: keep it literal.
            out.push_back('&');
            ++i;
            continue;
        }
        i = semi + 1;
    }
    return out;
}

std::vector<HtmlToken> tokenize_html(std::string_view html) {
    std::vector<HtmlToken> tokens;
    std::string text_buf;

    auto flush_text = [&] {
        if (!text_buf.empty()) {
            tokens.push_back({HtmlToken::Type::text, "", decode_html_entities(text_buf), false});
            text_buf.clear();
        }
    };

    std::size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            text_buf.push_back(html[i++]);
            continue;
        }
        if (html.compare(i, 4, "<!--") == 0) {
            flush_text();
            auto end = html.find("-->", i + 4);
            i = end == std::string_view::npos ? html.size() : end + 3;
            continue;
        }
        if (i + 1 < html.size() && (html[i + 1] == '!' || html[i + 1] == '?')) {
            flush_text();
            auto end = html.find('>', i + 2);
            i = end == std::string_view::npos ? html.size() : end + 1;
            continue;
        }
        if (i + 1 < html.size() && html[i + 1] == '/') {
            std::size_t pos = i + 2;
            std::string name = parse_tag_name(html, pos);
            if (name.empty()) {
                text_buf.push_back(html[i++]);
                continue;
            }
            flush_text();
            auto end = html.find('>', pos);
            i = end == std::string_view::npos ? html.size() : end + 1;
            tokens.push_back({HtmlToken::Type::close, name, "", false});
            continue;
        }
        if (i + 1 < html.size() && std::isalpha(static_cast<unsigned char>(html[i + 1]))) {
            std::size_t pos = i + 1;
            std::string name = parse_tag_name(html, pos);
            bool self_closing = skip_attributes(html, pos);
            flush_text();
            i = pos;
            if (is_raw_text_element(name) && !self_closing) {
                // Consume raw content up to the matching close tag.
                std::string close = "</" + name;
                std::size_t search = i;
                while (search < html.size()) {
                    auto candidate = html.find('<', search);
                    if (candidate == std::string_view::npos) {
                        search = html.size();
                        break;
                    }
                    if (candidate + close.size() <= html.size() &&
                        iequals(html.substr(candidate, close.size()), close)) {
                        search = candidate;
                        break;
                    }
                    search = candidate + 1;
                }
                if (search >= html.size()) {
                    i = html.size();
                } else {
                    auto end = html.find('>', search);
                    i = end == std::string_view::npos ? html.size() : end + 1;
                }
                continue;  // script/style bodies never become tokens
            }
            bool childless = self_closing || is_void_element(name);
            tokens.push_back({HtmlToken::Type::open, name, "", childless});
            if (childless) tokens.push_back({HtmlToken::Type::close, name, "", false});
            continue;
        }
        // Stray '<' without a tag: literal text.
        text_buf.push_back(html[i++]);
    }
    flush_text();
    return tokens;
}

bool is_stripped_element(std::string_view tag) {
    static const std::array<std::string_view, 9> tags = {
        "script", "style", "nav", "footer", "aside", "noscript", "template", "iframe", "svg",
    };
    for (auto t : tags) {
        if (tag == t) return true;
    }
    return false;
}

namespace {

struct Line {
    std::string text;
    bool list_item = false;
};

struct RawSection {
    std::vector<std::string> heading_path;
    int heading_level = 0;
    std::vector<Line> lines;
};

std::string join_lines(const std::vector<Line>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += (lines[i].list_item && lines[i - 1].list_item) ? "\n" : "\n\n";
        if (lines[i].list_item) out += "- ";
        out += lines[i].text;
    }
    return out;
}

}  // namespace

PageDocument parse_hierarchical(std::string_view html, const std::string& url, int snippet_chars) {
    auto tokens = tokenize_html(html);

    std::array<std::optional<std::string>, 5> heading_stack;  // levels 1..4
    std::vector<RawSection> raw_sections;
    RawSection current;  // starts as the level-0 preamble

    std::string paragraph;
    std::string title_buf;
    std::string first_h1;
    int strip_depth = 0;
    int li_depth = 0;
    bool in_title = false;
    int heading_capture = 0;  // 1..6 while inside a heading element
    std::string heading_buf;

    auto flush_paragraph = [&] {
        std::string text = collapse_whitespace(paragraph);
        paragraph.clear();
        if (!text.empty()) current.lines.push_back({std::move(text), li_depth > 0});
    };

    auto finalize_section = [&] {
        flush_paragraph();
        if (!current.lines.empty()) raw_sections.push_back(std::move(current));
        current = RawSection{};
    };

    auto open_section = [&](int level, const std::string& heading) {
        finalize_section();
        heading_stack[static_cast<std::size_t>(level)] = heading;
        for (int deeper = level + 1; deeper <= 4; ++deeper) {
            heading_stack[static_cast<std::size_t>(deeper)].reset();
        }
        current.heading_level = level;
        for (int shallower = 1; shallower < level; ++shallower) {
            if (heading_stack[static_cast<std::size_t>(shallower)]) {
                current.heading_path.push_back(*heading_stack[static_cast<std::size_t>(shallower)]);
            }
        }
        current.heading_path.push_back(heading);
    };

    for (const auto& token : tokens) {
        switch (token.type) {
            case HtmlToken::Type::open: {
                if (is_stripped_element(token.name)) {
                    // The tokenizer pairs self-closing opens with a synthetic
                    // close, so open/close counting stays balanced.
                    ++strip_depth;
                    break;
                }
                if (strip_depth > 0) break;
                if (token.name == "title") {
                    in_title = true;
                    break;
                }
                if (int level = heading_level_of(token.name)) {
                    flush_paragraph();
                    heading_capture = level;
                    heading_buf.clear();
                    break;
                }
                if (token.name == "li") {
                    flush_paragraph();
                    ++li_depth;
                    break;
                }
                if (token.name == "td" || token.name == "th") {
                    paragraph.push_back(' ');
                    break;
                }
                if (token.name == "br") {
                    paragraph.push_back(' ');
                    break;
                }
                if (is_block_element(token.name)) flush_paragraph();
                break;
            }
            case HtmlToken::Type::close: {
                if (is_stripped_element(token.name)) {
                    if (strip_depth > 0) --strip_depth;
                    break;
                }
                if (strip_depth > 0) break;
                if (token.name == "title") {
                    in_title = false;
                    break;
                }
                if (int level = heading_level_of(token.name); level && heading_capture) {
                    std::string heading = collapse_whitespace(heading_buf);
                    heading_capture = 0;
                    if (heading.empty()) break;
                    if (level == 1 && first_h1.empty()) first_h1 = heading;
                    if (level <= 4) {
                        open_section(level, heading);
                    } else {
                        // h5/h6 fold into the current section as a bold line.
                        current.lines.push_back({"**" + heading + "**", false});
                    }
                    break;
                }
                if (token.name == "li") {
                    flush_paragraph();
                    if (li_depth > 0) --li_depth;
                    break;
                }
                if (token.name == "td" || token.name == "th") {
                    paragraph.push_back(' ');
                    break;
                }
                if (is_block_element(token.name)) flush_paragraph();
                break;
            }
            case HtmlToken::Type::text: {
                if (strip_depth > 0) break;
                if (in_title) {
                    title_buf += token.text;
                } else if (heading_capture) {
                    heading_buf += token.text;
                } else {
                    paragraph += token.text;
                }
                break;
            }
        }
    }
    finalize_section();

    if (raw_sections.empty()) throw ParseError("no extractable text: " + url);

    PageDocument doc;
    doc.url = url;
    doc.kind = PageKind::web;
    doc.title = collapse_whitespace(title_buf);
    if (doc.title.empty()) doc.title = first_h1;
    if (doc.title.empty()) doc.title = url;

    auto max_snippet = static_cast<std::size_t>(snippet_chars);
    for (std::size_t i = 0; i < raw_sections.size(); ++i) {
        Section section;
        section.index = static_cast<int>(i);
        section.heading_path = std::move(raw_sections[i].heading_path);
        section.heading_level = raw_sections[i].heading_level;
        section.content = join_lines(raw_sections[i].lines);
        section.snippet = utf8_prefix(section.content, max_snippet);
        doc.sections.push_back(std::move(section));
    }
    doc.preview = doc.title + "\n" + doc.sections.front().snippet;
    return doc;
}

}  // namespace hifi
