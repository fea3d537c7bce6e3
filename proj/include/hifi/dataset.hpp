#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hifi/types.hpp"

namespace hifi {

// One JSON object per line: {"id"?: string, "question": string, "answer": string}.
// Missing id becomes the 1-based line number; blank lines are skipped.
// Throws DataError naming the offending line on malformed input or a
// duplicate id.
std::vector<QAPair> load_jsonl(const std::string& path);
std::vector<QAPair> parse_jsonl(const std::string& text, const std::string& origin = "<memory>");

// Batch input: {"id"?: string, "question": string}; extra keys (such as a
// reference answer) are ignored.
std::vector<UserQuery> load_questions_jsonl(const std::string& path);

struct Prediction {
    std::string id;
    std::string answer;
    std::vector<std::string> citations;
};

// Predictions JSONL: {"id": string, "answer": string, "citations": [string]?}.
std::vector<Prediction> load_predictions_jsonl(const std::string& path);
std::string predictions_to_jsonl(const std::vector<Prediction>& predictions);

struct ExternalScore {
    std::string id;
    double score = 0.0;
};

// External scores JSONL: {"id": string, "score": number}.
std::vector<ExternalScore> load_external_scores_jsonl(const std::string& path);

}  // namespace hifi
