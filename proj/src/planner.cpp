#include "hifi/planner.hpp"

#include <set>

#include "hifi/log.hpp"
#include "hifi/strings.hpp"
#include "hifi/templates.hpp"

namespace hifi {

std::vector<SearchQuery> plan_queries(Gateway& gateway, const UserQuery& question, int max_queries) {
    std::string prompt = render_template(TemplateId::query_plan, {{"USER_QUESTION", question.text}});
    auto array = gateway.complete_json_array(ModelTier::fast, {{Role::user, prompt}});

    std::vector<SearchQuery> queries;
    if (array) {
        std::set<std::string> seen;
        for (const auto& element : *array) {
            if (!element.is_string()) continue;
            std::string text = trim(element.get<std::string>());
            if (text.empty() || !seen.insert(text).second) continue;
            queries.push_back({std::move(text)});
            if (static_cast<int>(queries.size()) >= max_queries) break;
        }
    }
    if (queries.empty()) {
        log::warn("query planning failed for \"" + question.id + "\"; searching the raw question");
        queries.push_back({trim(question.text)});
    }
    return queries;
}

}  // namespace hifi
