#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hifi {

// The seven prompt templates used across the pipeline. Their text is a
// byte-exact contract covered by golden tests; do not reflow.
enum class TemplateId {
    query_plan,
    url_filter,
    chunk_filter,
    draft,
    refine,
    citation,
    baseline_q,
};

const char* to_string(TemplateId id);
TemplateId template_id_from_string(const std::string& name);

// Placeholder names (without brackets) the template declares.
const std::vector<std::string>& template_placeholders(TemplateId id);

std::string_view template_text(TemplateId id);

// Substitutes every declared [NAME] token in a single left-to-right pass, so
// substituted values are never re-scanned. Throws TemplateError when a
// declared placeholder has no binding or a binding names no placeholder.
std::string render_template(TemplateId id, const std::map<std::string, std::string>& bindings);

// The draft template with the web-search block removed; used by the
// prompt-only baseline. Keeps the instruction header and the question line.
std::string render_draft_without_web(const std::string& user_question);

}  // namespace hifi
