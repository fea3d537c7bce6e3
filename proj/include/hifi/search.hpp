#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hifi/llm.hpp"
#include "hifi/stats.hpp"
#include "hifi/types.hpp"

namespace hifi {

// Web-search provider contract: up to n hits in engine order, rank 1-based,
// source_query set to the issuing query. Zero hits is a valid result.
class SearchClient {
public:
    virtual ~SearchClient() = default;
    virtual std::vector<SearchHit> search(const SearchQuery& query, int n) = 0;
};

// Fixture-backed client; fixtures are JSON arrays of {url, title, preview}
// in one file per query, named by the query text's hash.
class ReplaySearchClient : public SearchClient {
public:
    ReplaySearchClient(std::filesystem::path dir, std::shared_ptr<CallStats> stats = nullptr);
    std::vector<SearchHit> search(const SearchQuery& query, int n) override;

    static std::filesystem::path fixture_path(const std::filesystem::path& dir,
                                              const std::string& query_text);

private:
    std::filesystem::path dir_;
    std::shared_ptr<CallStats> stats_;
};

// Store-through client: existing fixtures answer directly, misses hit the
// live client and are persisted.
class RecordSearchClient : public SearchClient {
public:
    RecordSearchClient(std::shared_ptr<SearchClient> live, std::filesystem::path dir,
                       std::shared_ptr<CallStats> stats = nullptr);
    std::vector<SearchHit> search(const SearchQuery& query, int n) override;

private:
    std::shared_ptr<SearchClient> live_;
    std::filesystem::path dir_;
    std::shared_ptr<CallStats> stats_;
    std::mutex write_mu_;
};

// Adds `searches` accounting around any inner client (the fixture-backed
// clients already count).
class CountingSearchClient : public SearchClient {
public:
    CountingSearchClient(std::shared_ptr<SearchClient> inner, std::shared_ptr<CallStats> stats)
        : inner_(std::move(inner)), stats_(std::move(stats)) {}

    std::vector<SearchHit> search(const SearchQuery& query, int n) override {
        if (stats_) stats_->searches.fetch_add(1);
        return inner_->search(query, n);
    }

private:
    std::shared_ptr<SearchClient> inner_;
    std::shared_ptr<CallStats> stats_;
};

// Concatenates per-query hit lists in query order and drops later duplicates
// by normalized URL, preserving first-seen order.
std::vector<SearchHit> merge_dedupe(const std::vector<std::vector<SearchHit>>& hit_lists);

// One line per candidate: "N. URL — TITLE — PREVIEW".
std::string serialize_search_results(const std::vector<SearchHit>& hits);

// Pre-fetch LLM filter: keeps the input hits whose normalized URL appears in
// the model's returned list, in the model's order. Hallucinated URLs are
// dropped with a warning. Fails open (all hits) after the retry policy.
std::vector<SearchHit> filter_urls(Gateway& gateway, const UserQuery& question,
                                   const std::vector<SearchHit>& hits);

}  // namespace hifi
