#pragma once

#include <string>
#include <vector>

#include "hifi/answer.hpp"
#include "hifi/llm.hpp"
#include "hifi/types.hpp"

namespace hifi {

// Post-hoc attribution: asks the fast tier which numbered sources directly
// support the finished answer. Out-of-range and duplicate indices are
// dropped, order is the model's. An empty list is a valid outcome; after the
// retry policy the fallback is no citations (under-citing beats over-citing).
// Never mutates the answer.
std::vector<Citation> verify_citations(Gateway& gateway, const std::string& answer,
                                       const AssembledContext& sources);

}  // namespace hifi
