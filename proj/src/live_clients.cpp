#include "hifi/live_clients.hpp"

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/http.hpp"
#include "hifi/urls.hpp"

namespace hifi {

using nlohmann::json;

namespace {

constexpr int kMaxRetries = 2;
constexpr int kBackoffMs = 250;

class HttpLlmClient : public LlmClient {
public:
    HttpLlmClient(LlmEndpointConfig config, std::shared_ptr<HttpClient> http)
        : config_(std::move(config)), http_(std::move(http)) {}

    std::string complete(ModelTier tier, const std::vector<ChatMessage>& messages) override {
        json body_messages = json::array();
        for (const auto& m : messages) {
            body_messages.push_back({{"role", m.role == Role::user ? "user" : "assistant"},
                                     {"content", m.text}});
        }
        json body = {
            {"model", tier == ModelTier::fast ? config_.fast_model : config_.deep_model},
            {"messages", body_messages},
            {"temperature", 0},
        };
        HttpHeaders headers = {{"Authorization", "Bearer " + config_.api_key}};

        auto response = with_retries(kMaxRetries, kBackoffMs, [&] {
            auto r = http_->post(config_.endpoint, headers, "application/json", body.dump());
            if (r.status >= 500) throw NetworkError("model endpoint returned " + std::to_string(r.status));
            return r;
        });
        if (response.status != 200) {
            throw ModelError("model endpoint returned " + std::to_string(response.status) + ": " +
                             response.body.substr(0, 200));
        }

        json doc = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded()) throw ModelError("model endpoint returned non-JSON payload");
        try {
            return doc.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception&) {
            throw ModelError("model payload missing choices[0].message.content");
        }
    }

private:
    LlmEndpointConfig config_;
    std::shared_ptr<HttpClient> http_;
};

class HttpSearchClient : public SearchClient {
public:
    HttpSearchClient(SearchEndpointConfig config, std::shared_ptr<HttpClient> http)
        : config_(std::move(config)), http_(std::move(http)) {}

    std::vector<SearchHit> search(const SearchQuery& query, int n) override {
        json body = {{"q", query.text}, {"num", n}};
        HttpHeaders headers = {{"X-API-KEY", config_.api_key}};

        auto response = with_retries(kMaxRetries, kBackoffMs, [&] {
            auto r = http_->post(config_.endpoint, headers, "application/json", body.dump());
            if (r.status >= 500) throw NetworkError("search endpoint returned " + std::to_string(r.status));
            return r;
        });
        if (response.status == 402 || response.status == 429) {
            throw QuotaError("search quota exceeded (" + std::to_string(response.status) + ")");
        }
        if (response.status != 200) {
            throw NetworkError("search endpoint returned " + std::to_string(response.status));
        }

        json doc = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded()) throw NetworkError("search endpoint returned non-JSON payload");

        const json* items = nullptr;
        for (const char* key : {"organic", "results", "items"}) {
            if (doc.contains(key) && doc.at(key).is_array()) {
                items = &doc.at(key);
                break;
            }
        }
        std::vector<SearchHit> hits;
        if (!items) return hits;
        for (const auto& item : *items) {
            if (static_cast<int>(hits.size()) >= n) break;
            SearchHit hit;
            hit.url = item.value("link", item.value("url", ""));
            hit.title = item.value("title", "");
            hit.preview = item.value("snippet", item.value("preview", ""));
            hit.source_query = query.text;
            hit.rank = static_cast<int>(hits.size()) + 1;
            if (hit.url.empty()) continue;
            hits.push_back(std::move(hit));
        }
        return hits;
    }

private:
    SearchEndpointConfig config_;
    std::shared_ptr<HttpClient> http_;
};

class ScrapeFetcher : public RawFetcher {
public:
    ScrapeFetcher(ScrapeEndpointConfig config, std::shared_ptr<HttpClient> http)
        : config_(std::move(config)), http_(std::move(http)) {}

    std::string fetch(const std::string& url) override {
        std::string target = url;
        if (!config_.endpoint.empty() && !config_.api_key.empty()) {
            target = config_.endpoint + "?api_key=" + url_encode(config_.api_key) +
                     "&url=" + url_encode(url);
        }
        auto response = with_retries(kMaxRetries, kBackoffMs, [&] {
            auto r = http_->get(target, {{"User-Agent", "hifi-rag/0.1"}});
            if (r.status >= 500) throw NetworkError("scrape returned " + std::to_string(r.status));
            return r;
        });
        if (response.status != 200) {
            throw FetchError("fetch of " + url + " returned HTTP " + std::to_string(response.status));
        }
        return response.body;
    }

private:
    ScrapeEndpointConfig config_;
    std::shared_ptr<HttpClient> http_;
};

class RedditFetcher : public RawFetcher {
public:
    RedditFetcher(RedditClientConfig config, std::shared_ptr<HttpClient> http)
        : config_(std::move(config)), http_(std::move(http)) {}

    std::string fetch(const std::string& url) override {
        HttpHeaders headers = {{"User-Agent", config_.user_agent}};
        std::string target = json_endpoint(url);
        if (!config_.client_id.empty() && !config_.client_secret.empty()) {
            headers["Authorization"] = "Bearer " + bearer_token();
        }
        auto response = with_retries(kMaxRetries, kBackoffMs, [&] {
            auto r = http_->get(target, headers);
            if (r.status >= 500) throw NetworkError("reddit returned " + std::to_string(r.status));
            return r;
        });
        if (response.status == 404) throw ThreadDeletedError("thread not found: " + url);
        if (response.status != 200) {
            throw FetchError("fetch of " + url + " returned HTTP " + std::to_string(response.status));
        }
        return response.body;
    }

private:
    std::string json_endpoint(const std::string& url) const {
        auto parts = parse_url(url);
        std::string path = parts ? parts->path : "";
        while (!path.empty() && path.back() == '/') path.pop_back();
        std::string host = "https://www.reddit.com";
        if (!config_.client_id.empty() && !config_.client_secret.empty()) {
            host = "https://oauth.reddit.com";
        }
        return host + path + ".json";
    }

    std::string bearer_token() {
        std::lock_guard<std::mutex> lock(token_mu_);
        if (!token_.empty()) return token_;
        // Client-credentials grant; the token lives for the process.
        std::string auth = config_.client_id + ":" + config_.client_secret;
        HttpHeaders headers = {
            {"User-Agent", config_.user_agent},
            {"Authorization", "Basic " + base64(auth)},
        };
        auto response = http_->post("https://www.reddit.com/api/v1/access_token", headers,
                                    "application/x-www-form-urlencoded",
                                    "grant_type=client_credentials");
        if (response.status != 200) {
            throw NetworkError("reddit token request returned " + std::to_string(response.status));
        }
        json doc = json::parse(response.body, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded() || !doc.contains("access_token")) {
            throw NetworkError("reddit token response unrecognized");
        }
        token_ = doc.at("access_token").get<std::string>();
        return token_;
    }

    static std::string base64(std::string_view in) {
        static const char* alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
        std::string out;
        out.reserve((in.size() + 2) / 3 * 4);
        std::size_t i = 0;
        while (i + 3 <= in.size()) {
            unsigned v = (static_cast<unsigned char>(in[i]) << 16) |
                         (static_cast<unsigned char>(in[i + 1]) << 8) |
                         static_cast<unsigned char>(in[i + 2]);
            out.push_back(alphabet[(v >> 18) & 63]);
            out.push_back(alphabet[(v >> 12) & 63]);
            out.push_back(alphabet[(v >> 6) & 63]);
            out.push_back(alphabet[v & 63]);
            i += 3;
        }
        if (i + 1 == in.size()) {
            unsigned v = static_cast<unsigned char>(in[i]) << 16;
            out.push_back(alphabet[(v >> 18) & 63]);
            out.push_back(alphabet[(v >> 12) & 63]);
            out += "==";
        } else if (i + 2 == in.size()) {
            unsigned v = (static_cast<unsigned char>(in[i]) << 16) |
                         (static_cast<unsigned char>(in[i + 1]) << 8);
            out.push_back(alphabet[(v >> 18) & 63]);
            out.push_back(alphabet[(v >> 12) & 63]);
            out.push_back(alphabet[(v >> 6) & 63]);
            out.push_back('=');
        }
        return out;
    }

    RedditClientConfig config_;
    std::shared_ptr<HttpClient> http_;
    std::mutex token_mu_;
    std::string token_;
};

}  // namespace

std::unique_ptr<LlmClient> make_http_llm_client(LlmEndpointConfig config,
                                                std::shared_ptr<HttpClient> http) {
    return std::make_unique<HttpLlmClient>(std::move(config), std::move(http));
}

std::unique_ptr<SearchClient> make_http_search_client(SearchEndpointConfig config,
                                                      std::shared_ptr<HttpClient> http) {
    return std::make_unique<HttpSearchClient>(std::move(config), std::move(http));
}

std::unique_ptr<RawFetcher> make_scrape_fetcher(ScrapeEndpointConfig config,
                                                std::shared_ptr<HttpClient> http) {
    return std::make_unique<ScrapeFetcher>(std::move(config), std::move(http));
}

std::unique_ptr<RawFetcher> make_reddit_fetcher(RedditClientConfig config,
                                                std::shared_ptr<HttpClient> http) {
    return std::make_unique<RedditFetcher>(std::move(config), std::move(http));
}

}  // namespace hifi
