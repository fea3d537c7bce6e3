#include "hifi/citations.hpp"

#include <set>

#include "hifi/errors.hpp"
#include "hifi/log.hpp"
#include "hifi/templates.hpp"

namespace hifi {

std::vector<Citation> verify_citations(Gateway& gateway, const std::string& answer,
                                       const AssembledContext& sources) {
    if (answer.empty()) throw Error("verify_citations requires a non-empty answer");

    std::string prompt = render_template(
        TemplateId::citation, {{"AI_ANSWER", answer}, {"WEB_CONTENT", sources.text}});
    auto array = gateway.complete_json_array(ModelTier::fast, {{Role::user, prompt}});
    if (!array) {
        log::warn("citation verification unavailable; emitting no citations");
        return {};
    }

    std::vector<Citation> citations;
    std::set<int> seen;
    for (const auto& element : *array) {
        if (!element.is_number_integer()) {
            log::warn("citation verifier returned a non-integer element; ignoring it");
            continue;
        }
        int index = element.get<int>();
        auto it = sources.index_to_url.find(index);
        if (it == sources.index_to_url.end()) continue;
        if (seen.insert(index).second) citations.push_back({index, it->second});
    }
    return citations;
}

}  // namespace hifi
