#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hifi {

// Lowercases and splits into maximal runs of ASCII alphanumerics; everything
// else separates. No stemming, no stopword removal.
std::vector<std::string> tokenize(std::string_view text);

// Longest common subsequence length, O(|a|*|b|) time, O(min) memory.
std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// ROUGE-L F1: P = LCS/|cand|, R = LCS/|ref| (0 on empty denominators),
// F1 = 2PR/(P+R) or 0 when P+R = 0.
double rouge_l_f1(std::string_view candidate, std::string_view reference);

}  // namespace hifi
