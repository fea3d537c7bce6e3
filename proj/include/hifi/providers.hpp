#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "hifi/fetch.hpp"
#include "hifi/live_clients.hpp"
#include "hifi/llm.hpp"
#include "hifi/search.hpp"
#include "hifi/stats.hpp"

namespace hifi {

enum class RunMode { live, record, replay };

const char* to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

struct ProviderPaths {
    std::filesystem::path fixtures_dir = "fixtures";   // holds llm/, search/, pages/
    std::filesystem::path cache_dir = ".hifi-cache";   // live-mode page cache
};

// Everything the pipeline talks to. A fresh CallStats rides along so callers
// can assert interaction counts per run.
struct Providers {
    std::shared_ptr<Gateway> gateway;
    std::shared_ptr<SearchClient> search;
    std::shared_ptr<PageSource> pages;
    std::shared_ptr<CallStats> stats;
};

struct LiveEndpoints {
    LlmEndpointConfig llm;
    SearchEndpointConfig search;
    ScrapeEndpointConfig scrape;
    RedditClientConfig reddit;
};

// Reads HIFI_LLM_*, HIFI_SEARCH_*, HIFI_SCRAPE_*, HIFI_REDDIT_* variables.
LiveEndpoints endpoints_from_env();

// replay: fixture-backed clients everywhere; any network attempt throws.
// record: live clients behind the fixture stores (existing fixtures answer
//         without network); pages cache into the fixture corpus.
// live:   live clients; pages cache into paths.cache_dir.
Providers make_providers(RunMode mode, const ProviderPaths& paths, const LiveEndpoints& endpoints);
Providers make_providers(RunMode mode, const ProviderPaths& paths);

}  // namespace hifi
