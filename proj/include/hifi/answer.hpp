#pragma once

#include <map>
#include <string>
#include <vector>

#include "hifi/config.hpp"
#include "hifi/llm.hpp"
#include "hifi/types.hpp"

namespace hifi {

// Numbered source blocks plus the block-number -> URL map the citation
// verifier consumes. Deterministic for a given input.
struct AssembledContext {
    std::string text;
    std::map<int, std::string> index_to_url;
};

// One block per site with at least one kept section: "[N] TITLE / URL /
// PREVIEW" then each kept section as "## HEADING_PATH" + content. Sites with
// zero kept sections are omitted and the numbering stays gapless.
AssembledContext assemble_web_content(const std::vector<SiteContext>& sites);

struct GenerationResult {
    std::string text;                   // final answer
    std::vector<ChatMessage> transcript;  // full conversation, user/model alternating
};

// "Question: ...\nAnswer: ..." blocks separated by blank lines.
std::string serialize_examples(const std::vector<FewShotExample>& examples);

// JSON list of {question, answer}; exactly 3 entries. Throws DataError.
std::vector<FewShotExample> load_fewshot_examples(const std::string& path);

// Turn 1 drafts from the assembled context; turn 2 extends the same
// conversation with the style-refinement prompt. Transcript is exactly
// user/model/user/model. Model failures propagate.
GenerationResult generate_two_turn(Gateway& gateway, const UserQuery& question,
                                   const AssembledContext& context,
                                   const std::vector<FewShotExample>& examples);

// Extends a finished draft conversation with the refinement turn. The turn-1
// exchange stays in the request history.
GenerationResult refine_turn(Gateway& gateway, GenerationResult draft,
                             const std::vector<FewShotExample>& examples);

// Draft turn only; transcript is user/model.
GenerationResult generate_single_turn(Gateway& gateway, const UserQuery& question,
                                      const AssembledContext& context);

// raw-query: the length-limited bare prompt. prompt-only: the draft prompt
// with the whole web block removed. Single deep-tier call either way.
GenerationResult generate_baseline(Gateway& gateway, const UserQuery& question, BaselineMode mode);

}  // namespace hifi
