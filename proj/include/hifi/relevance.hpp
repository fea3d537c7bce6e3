#pragma once

#include <string>
#include <vector>

#include "hifi/llm.hpp"
#include "hifi/types.hpp"

namespace hifi {

// One line per section: "INDEX. HEADING_PATH — SNIPPET".
std::string serialize_section_previews(const PageDocument& page);

// Asks the fast tier which sections help answer the question, judging only
// heading paths and snippets. Returns unique in-range indices in the model's
// order (most useful first); out-of-range and duplicate indices are dropped.
// Falls back to all indices in document order after the retry policy.
std::vector<int> rank_sections(Gateway& gateway, const UserQuery& question, const PageDocument& page);

// Selects/reorders page sections per `indices` without altering content.
SiteContext apply_filter(const PageDocument& page, const std::vector<int>& indices);

// (before - after) / before. Throws on before < 1 or after outside [0, before].
double reduction_ratio(int before, int after);

}  // namespace hifi
