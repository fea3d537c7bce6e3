#include "hifi/relevance.hpp"

#include <set>

#include "hifi/errors.hpp"
#include "hifi/log.hpp"
#include "hifi/templates.hpp"

namespace hifi {

std::string serialize_section_previews(const PageDocument& page) {
    std::string out;
    for (std::size_t i = 0; i < page.sections.size(); ++i) {
        if (i) out += "\n";
        const Section& section = page.sections[i];
        out += std::to_string(section.index) + ". " + heading_path_display(section) + " \xE2\x80\x94 " +
               section.snippet;
    }
    return out;
}

std::vector<int> rank_sections(Gateway& gateway, const UserQuery& question, const PageDocument& page) {
    std::string prompt = render_template(TemplateId::chunk_filter,
                                         {{"USER_QUESTION", question.text},
                                          {"WEB_PREVIEW_CONTENT", page.preview},
                                          {"SECTION_PREVIEWS", serialize_section_previews(page)}});
    auto array = gateway.complete_json_array(ModelTier::fast, {{Role::user, prompt}});

    if (!array) {
        log::warn("section ranking unavailable for " + page.url + "; keeping all sections");
        std::vector<int> all;
        all.reserve(page.sections.size());
        for (const auto& section : page.sections) all.push_back(section.index);
        return all;
    }

    const int count = static_cast<int>(page.sections.size());
    std::vector<int> kept;
    std::set<int> seen;
    for (const auto& element : *array) {
        if (!element.is_number_integer()) {
            log::warn("section ranking returned a non-integer element; ignoring it");
            continue;
        }
        int index = element.get<int>();
        if (index < 0 || index >= count) continue;
        if (seen.insert(index).second) kept.push_back(index);
    }
    return kept;
}

SiteContext apply_filter(const PageDocument& page, const std::vector<int>& indices) {
    SiteContext site;
    site.title = page.title;
    site.url = page.url;
    site.preview = page.preview;
    site.kept_sections.reserve(indices.size());
    for (int index : indices) {
        site.kept_sections.push_back(page.sections.at(static_cast<std::size_t>(index)));
    }
    return site;
}

double reduction_ratio(int before, int after) {
    if (before < 1) throw Error("reduction_ratio requires before >= 1");
    if (after < 0 || after > before) throw Error("reduction_ratio requires 0 <= after <= before");
    return static_cast<double>(before - after) / static_cast<double>(before);
}

}  // namespace hifi
