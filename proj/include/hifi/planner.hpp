#pragma once

#include <vector>

#include "hifi/llm.hpp"
#include "hifi/types.hpp"

namespace hifi {

// Turns the raw question into 1..max_queries concise search queries via the
// fast tier. Never fails: when the model output stays unparseable after the
// retry, the raw question text is the single query.
std::vector<SearchQuery> plan_queries(Gateway& gateway, const UserQuery& question, int max_queries = 2);

}  // namespace hifi
