#pragma once

#include <memory>
#include <string>

#include "hifi/fetch.hpp"
#include "hifi/http.hpp"
#include "hifi/llm.hpp"
#include "hifi/search.hpp"

namespace hifi {

struct LlmEndpointConfig {
    std::string endpoint;    // OpenAI-compatible chat-completions URL
    std::string api_key;
    std::string fast_model;
    std::string deep_model;
};

// POSTs {model, messages, temperature: 0} and reads choices[0].message.content.
// Transport failures retry twice with backoff; persistent failures surface as
// NetworkError, empty or malformed payloads as ModelError.
std::unique_ptr<LlmClient> make_http_llm_client(LlmEndpointConfig config,
                                                std::shared_ptr<HttpClient> http);

struct SearchEndpointConfig {
    std::string endpoint;  // POST {"q", "num"} with an X-API-KEY header
    std::string api_key;
};

// Accepts {organic|results: [{link|url, title, snippet|preview}]} response
// shapes. Quota statuses (402/429) surface as QuotaError.
std::unique_ptr<SearchClient> make_http_search_client(SearchEndpointConfig config,
                                                      std::shared_ptr<HttpClient> http);

struct ScrapeEndpointConfig {
    std::string endpoint;  // GET {endpoint}?api_key=...&url=... returning raw HTML
    std::string api_key;   // empty: fetch the page URL directly
};

std::unique_ptr<RawFetcher> make_scrape_fetcher(ScrapeEndpointConfig config,
                                                std::shared_ptr<HttpClient> http);

struct RedditClientConfig {
    std::string client_id;      // with client_secret: OAuth client-credentials
    std::string client_secret;  // both empty: the public .json endpoint
    std::string user_agent = "hifi-rag/0.1";
};

std::unique_ptr<RawFetcher> make_reddit_fetcher(RedditClientConfig config,
                                                std::shared_ptr<HttpClient> http);

}  // namespace hifi
