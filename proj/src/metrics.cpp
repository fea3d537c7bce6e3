#include "hifi/metrics.hpp"

#include <algorithm>
#include <cctype>

namespace hifi {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const auto& shorter = a.size() <= b.size() ? a : b;
    const auto& longer = a.size() <= b.size() ? b : a;
    if (shorter.empty()) return 0;

    std::vector<std::size_t> prev(shorter.size() + 1, 0);
    std::vector<std::size_t> curr(shorter.size() + 1, 0);
    for (std::size_t i = 1; i <= longer.size(); ++i) {
        for (std::size_t j = 1; j <= shorter.size(); ++j) {
            if (longer[i - 1] == shorter[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[shorter.size()];
}

double rouge_l_f1(std::string_view candidate, std::string_view reference) {
    auto cand = tokenize(candidate);
    auto ref = tokenize(reference);
    auto lcs = static_cast<double>(lcs_length(cand, ref));
    double precision = cand.empty() ? 0.0 : lcs / static_cast<double>(cand.size());
    double recall = ref.empty() ? 0.0 : lcs / static_cast<double>(ref.size());
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

}  // namespace hifi
