#include "hifi/templates.hpp"

#include <array>

#include "hifi/errors.hpp"

namespace hifi {

namespace {

// Several lines keep a trailing space before the newline; that is part of the
// frozen template bytes.
constexpr std::string_view kQueryPlan =
    "Create an effective and concise Google search query for this question: \n"
    "[USER_QUESTION]\n"
    "Return a json list of strings for the best 1-2 search queries.";

constexpr std::string_view kUrlFilter =
    "What URLs from the list below would be helpful to read further to answer \n"
    "\"[USER_QUESTION]\"?\n"
    "Please return a JSON list of URL strings. Here are the urls with their \n"
    "preview content:\n"
    "\n"
    "[SEARCH_RESULT]";

constexpr std::string_view kChunkFilter =
    "Given a webpage preview and its section titles and an opening snippet, \n"
    "help determine what sections are helpful for us to read further to \n"
    "help answer [USER_QUESTION] without having to search/research further.\n"
    "Return a JSON list of the useful section indices, sorted by most usefulness first.\n"
    "\n"
    "Example output: [3, 2, 6, 7]\n"
    "\n"
    "==================\n"
    "Webpage overview: [WEB_PREVIEW_CONTENT]\n"
    "------------------\n"
    "Section previews in the page: [SECTION_PREVIEWS]\n"
    "------------------\n"
    "Useful chunks:";

constexpr std::string_view kDraft =
    "You are a helpful and knowledgeable assistant.\n"
    "Answer the user question in a plain text in one paragraph (1-4 sentences).\n"
    "Include only the answer without any introductory phrases, conversational filler, \n"
    "or preamble.\n"
    "\n"
    "User question: [USER_QUESTION]\n"
    "-----------\n"
    "Here're extra information from Web Search, you might find helpful:\n"
    "[WEB_CONTENT]\n"
    "-----------\n"
    "[USER_QUESTION]";

constexpr std::string_view kRefine =
    "Revise your answer to have a style and length similar to the \"answer\" \n"
    "in the following examples:\n"
    "[VAL_EXAMPLES]";

constexpr std::string_view kCitation =
    "Read the ANSWER and identify which SOURCES (by [number]) directly support \n"
    "the information it contains (for citations purpose).\n"
    "Only list indices of the sources that directly support the answer. \n"
    "If no sources match, return [].\n"
    "If multiple sources support the same fact, prioritize the source that is \n"
    "the most specific and direct match.\n"
    "\n"
    "Your output MUST be a single, valid JSON array of source indices.\n"
    "Example Output: [1, 4, 6]\n"
    "\n"
    "-----------\n"
    "ANSWER: [AI_ANSWER]\n"
    "-----------\n"
    "SOURCES:\n"
    "[WEB_CONTENT]";

constexpr std::string_view kBaselineQ = "Please limit your answer to under 200 words. [USER_QUESTION]";

struct TemplateSpec {
    TemplateId id;
    const char* name;
    std::string_view text;
    std::vector<std::string> placeholders;
};

const std::array<TemplateSpec, 7>& specs() {
    static const std::array<TemplateSpec, 7> all = {{
        {TemplateId::query_plan, "query-plan", kQueryPlan, {"USER_QUESTION"}},
        {TemplateId::url_filter, "url-filter", kUrlFilter, {"USER_QUESTION", "SEARCH_RESULT"}},
        {TemplateId::chunk_filter, "chunk-filter", kChunkFilter,
         {"USER_QUESTION", "WEB_PREVIEW_CONTENT", "SECTION_PREVIEWS"}},
        {TemplateId::draft, "draft", kDraft, {"USER_QUESTION", "WEB_CONTENT"}},
        {TemplateId::refine, "refine", kRefine, {"VAL_EXAMPLES"}},
        {TemplateId::citation, "citation", kCitation, {"AI_ANSWER", "WEB_CONTENT"}},
        {TemplateId::baseline_q, "baseline-q", kBaselineQ, {"USER_QUESTION"}},
    }};
    return all;
}

const TemplateSpec& spec_for(TemplateId id) {
    for (const auto& s : specs()) {
        if (s.id == id) return s;
    }
    throw TemplateError("unknown template id");
}

}  // namespace

const char* to_string(TemplateId id) { return spec_for(id).name; }

TemplateId template_id_from_string(const std::string& name) {
    for (const auto& s : specs()) {
        if (name == s.name) return s.id;
    }
    throw TemplateError("unknown template id \"" + name + "\"");
}

const std::vector<std::string>& template_placeholders(TemplateId id) { return spec_for(id).placeholders; }

std::string_view template_text(TemplateId id) { return spec_for(id).text; }

std::string render_template(TemplateId id, const std::map<std::string, std::string>& bindings) {
    const TemplateSpec& spec = spec_for(id);
    for (const auto& name : spec.placeholders) {
        if (!bindings.count(name)) {
            throw TemplateError(std::string("template ") + spec.name + ": missing binding [" + name + "]");
        }
    }
    for (const auto& [name, _] : bindings) {
        bool declared = false;
        for (const auto& p : spec.placeholders) declared |= (p == name);
        if (!declared) {
            throw TemplateError(std::string("template ") + spec.name + ": unknown binding [" + name + "]");
        }
    }

    std::string_view text = spec.text;
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto open = text.find('[', pos);
        if (open == std::string_view::npos) {
            out.append(text.substr(pos));
            break;
        }
        auto close = text.find(']', open + 1);
        bool replaced = false;
        if (close != std::string_view::npos) {
            std::string name(text.substr(open + 1, close - open - 1));
            auto it = bindings.find(name);
            if (it != bindings.end()) {
                out.append(text.substr(pos, open - pos));
                out.append(it->second);
                pos = close + 1;
                replaced = true;
            }
        }
        if (!replaced) {
            // Literal bracket (e.g. the "[number]" wording in the citation
            // template); copy it through and keep scanning.
            out.append(text.substr(pos, open - pos + 1));
            pos = open + 1;
        }
    }
    return out;
}

std::string render_draft_without_web(const std::string& user_question) {
    std::string_view text = kDraft;
    auto cut = text.find("\n-----------");
    std::string out(text.substr(0, cut));

    const std::string token = "[USER_QUESTION]";
    std::size_t pos = 0;
    while ((pos = out.find(token, pos)) != std::string::npos) {
        out.replace(pos, token.size(), user_question);
        pos += user_question.size();
    }
    return out;
}

}  // namespace hifi
