#include "hifi/answer.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/templates.hpp"

namespace hifi {

using nlohmann::json;

AssembledContext assemble_web_content(const std::vector<SiteContext>& sites) {
    AssembledContext out;
    int n = 0;
    for (const auto& site : sites) {
        if (site.kept_sections.empty()) continue;
        ++n;
        if (n > 1) out.text += "\n";
        out.text += "[" + std::to_string(n) + "] " + site.title + "\n" + site.url + "\n" +
                    site.preview + "\n";
        for (const auto& section : site.kept_sections) {
            out.text += "\n## " + heading_path_display(section) + "\n" + section.content + "\n";
        }
        out.index_to_url.emplace(n, site.url);
    }
    return out;
}

std::string serialize_examples(const std::vector<FewShotExample>& examples) {
    std::string out;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        if (i) out += "\n\n";
        out += "Question: " + examples[i].question + "\nAnswer: " + examples[i].answer;
    }
    return out;
}

std::vector<FewShotExample> load_fewshot_examples(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open examples file: " + path);
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_array()) {
        throw DataError("examples file must be a JSON array: " + path);
    }
    std::vector<FewShotExample> examples;
    for (const auto& item : doc) {
        FewShotExample example;
        example.question = item.value("question", "");
        example.answer = item.value("answer", "");
        if (example.question.empty() || example.answer.empty()) {
            throw DataError("examples entries need non-empty question and answer: " + path);
        }
        examples.push_back(std::move(example));
    }
    if (examples.size() != 3) {
        throw DataError("expected exactly 3 examples, got " + std::to_string(examples.size()) + ": " +
                        path);
    }
    return examples;
}

GenerationResult generate_two_turn(Gateway& gateway, const UserQuery& question,
                                   const AssembledContext& context,
                                   const std::vector<FewShotExample>& examples) {
    return refine_turn(gateway, generate_single_turn(gateway, question, context), examples);
}

GenerationResult refine_turn(Gateway& gateway, GenerationResult draft,
                             const std::vector<FewShotExample>& examples) {
    std::string refine_prompt =
        render_template(TemplateId::refine, {{"VAL_EXAMPLES", serialize_examples(examples)}});
    draft.transcript.push_back({Role::user, refine_prompt});
    std::string final_text = gateway.complete(ModelTier::deep, draft.transcript);
    draft.transcript.push_back({Role::model, final_text});
    draft.text = std::move(final_text);
    return draft;
}

GenerationResult generate_single_turn(Gateway& gateway, const UserQuery& question,
                                      const AssembledContext& context) {
    std::string prompt = render_template(
        TemplateId::draft, {{"USER_QUESTION", question.text}, {"WEB_CONTENT", context.text}});

    GenerationResult result;
    result.transcript.push_back({Role::user, prompt});
    std::string draft = gateway.complete(ModelTier::deep, result.transcript);
    result.transcript.push_back({Role::model, draft});
    result.text = std::move(draft);
    return result;
}

GenerationResult generate_baseline(Gateway& gateway, const UserQuery& question, BaselineMode mode) {
    std::string prompt;
    if (mode == BaselineMode::raw_query) {
        prompt = render_template(TemplateId::baseline_q, {{"USER_QUESTION", question.text}});
    } else if (mode == BaselineMode::prompt_only) {
        prompt = render_draft_without_web(question.text);
    } else {
        throw Error("generate_baseline requires a baseline mode");
    }

    GenerationResult result;
    result.transcript.push_back({Role::user, prompt});
    std::string answer = gateway.complete(ModelTier::deep, result.transcript);
    result.transcript.push_back({Role::model, answer});
    result.text = std::move(answer);
    return result;
}

}  // namespace hifi
