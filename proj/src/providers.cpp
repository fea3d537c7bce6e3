#include "hifi/providers.hpp"

#include <cstdlib>

#include "hifi/errors.hpp"
#include "hifi/http.hpp"

namespace hifi {

namespace {

std::string env_or(const char* name, const std::string& fallback = "") {
    const char* value = std::getenv(name);
    return value ? value : fallback;
}

}  // namespace

const char* to_string(RunMode mode) {
    switch (mode) {
        case RunMode::live: return "live";
        case RunMode::record: return "record";
        case RunMode::replay: return "replay";
    }
    return "replay";
}

RunMode run_mode_from_string(const std::string& name) {
    if (name == "live") return RunMode::live;
    if (name == "record") return RunMode::record;
    if (name == "replay") return RunMode::replay;
    throw ConfigError("unknown mode \"" + name + "\" (expected live, record, replay)");
}

LiveEndpoints endpoints_from_env() {
    LiveEndpoints endpoints;
    endpoints.llm.endpoint = env_or("HIFI_LLM_ENDPOINT");
    endpoints.llm.api_key = env_or("HIFI_LLM_API_KEY");
    endpoints.llm.fast_model = env_or("HIFI_LLM_FAST_MODEL", "fast");
    endpoints.llm.deep_model = env_or("HIFI_LLM_DEEP_MODEL", "deep");
    endpoints.search.endpoint = env_or("HIFI_SEARCH_ENDPOINT");
    endpoints.search.api_key = env_or("HIFI_SEARCH_API_KEY");
    endpoints.scrape.endpoint = env_or("HIFI_SCRAPE_ENDPOINT");
    endpoints.scrape.api_key = env_or("HIFI_SCRAPE_API_KEY");
    endpoints.reddit.client_id = env_or("HIFI_REDDIT_CLIENT_ID");
    endpoints.reddit.client_secret = env_or("HIFI_REDDIT_SECRET");
    return endpoints;
}

Providers make_providers(RunMode mode, const ProviderPaths& paths, const LiveEndpoints& endpoints) {
    Providers p;
    p.stats = std::make_shared<CallStats>();

    auto llm_store = std::make_shared<FixtureStore>(paths.fixtures_dir / "llm");
    auto page_fixtures = std::make_shared<PageStore>(paths.fixtures_dir / "pages");
    auto search_dir = paths.fixtures_dir / "search";

    if (mode == RunMode::replay) {
        p.gateway = std::make_shared<Gateway>(std::make_shared<ReplayLlmClient>(llm_store), p.stats);
        p.search = std::make_shared<ReplaySearchClient>(search_dir, p.stats);
        p.pages = make_replay_page_source(page_fixtures, p.stats);
        return p;
    }

    if (endpoints.llm.endpoint.empty()) {
        throw ConfigError(std::string("HIFI_LLM_ENDPOINT is required in ") + to_string(mode) + " mode");
    }

    std::shared_ptr<HttpClient> http = make_httplib_client(20, p.stats);
    auto live_llm = std::shared_ptr<LlmClient>(make_http_llm_client(endpoints.llm, http));
    auto live_search = std::shared_ptr<SearchClient>(make_http_search_client(endpoints.search, http));
    auto web_fetcher = std::shared_ptr<RawFetcher>(make_scrape_fetcher(endpoints.scrape, http));
    auto reddit_fetcher = std::shared_ptr<RawFetcher>(make_reddit_fetcher(endpoints.reddit, http));

    if (mode == RunMode::record) {
        p.gateway = std::make_shared<Gateway>(std::make_shared<RecordLlmClient>(live_llm, llm_store),
                                              p.stats);
        p.search = std::make_shared<RecordSearchClient>(live_search, search_dir, p.stats);
        p.pages = make_caching_page_source(page_fixtures, web_fetcher, reddit_fetcher, p.stats);
        return p;
    }

    p.gateway = std::make_shared<Gateway>(live_llm, p.stats);
    p.search = std::make_shared<CountingSearchClient>(live_search, p.stats);
    p.pages = make_caching_page_source(std::make_shared<PageStore>(paths.cache_dir), web_fetcher,
                                       reddit_fetcher, p.stats);
    return p;
}

Providers make_providers(RunMode mode, const ProviderPaths& paths) {
    return make_providers(mode, paths, endpoints_from_env());
}

}  // namespace hifi
