#include "hifi/http.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>

#include "hifi/errors.hpp"
#include "hifi/urls.hpp"

namespace hifi {

namespace {

class HttplibClient : public HttpClient {
public:
    HttplibClient(int timeout_seconds, std::shared_ptr<CallStats> stats)
        : timeout_seconds_(timeout_seconds), stats_(std::move(stats)) {}

    Response get(const std::string& url, const HttpHeaders& headers) override {
        return request(url, headers, nullptr, "");
    }

    Response post(const std::string& url, const HttpHeaders& headers,
                  const std::string& content_type, const std::string& body) override {
        return request(url, headers, &body, content_type);
    }

private:
    Response request(const std::string& url, const HttpHeaders& headers, const std::string* body,
                     const std::string& content_type) {
        auto parts = parse_url(url);
        if (!parts) throw NetworkError("malformed URL: " + url);

        std::string base = parts->scheme + "://" + parts->host;
        if (!parts->port.empty()) base += ":" + parts->port;
        std::string target = parts->path.empty() ? "/" : parts->path;
        if (!parts->query.empty()) target += "?" + parts->query;

        if (stats_) stats_->network_requests.fetch_add(1);

        httplib::Client client(base);
        client.set_connection_timeout(timeout_seconds_, 0);
        client.set_read_timeout(timeout_seconds_, 0);
        client.set_follow_location(true);

        httplib::Headers hl_headers;
        for (const auto& [k, v] : headers) hl_headers.emplace(k, v);

        httplib::Result result = body ? client.Post(target, hl_headers, *body, content_type)
                                      : client.Get(target, hl_headers);
        if (!result) {
            throw NetworkError("request to " + url + " failed: " + httplib::to_string(result.error()));
        }
        return {result->status, result->body};
    }

    int timeout_seconds_;
    std::shared_ptr<CallStats> stats_;
};

class ForbiddenClient : public HttpClient {
public:
    explicit ForbiddenClient(std::shared_ptr<CallStats> stats) : stats_(std::move(stats)) {}

    Response get(const std::string& url, const HttpHeaders&) override { return fail(url); }
    Response post(const std::string& url, const HttpHeaders&, const std::string&,
                  const std::string&) override {
        return fail(url);
    }

private:
    Response fail(const std::string& url) {
        if (stats_) stats_->network_requests.fetch_add(1);
        throw NetworkError("network access is disabled in replay mode (attempted: " + url + ")");
    }

    std::shared_ptr<CallStats> stats_;
};

}  // namespace

std::unique_ptr<HttpClient> make_httplib_client(int timeout_seconds, std::shared_ptr<CallStats> stats) {
    return std::make_unique<HttplibClient>(timeout_seconds, std::move(stats));
}

std::unique_ptr<HttpClient> make_forbidden_client(std::shared_ptr<CallStats> stats) {
    return std::make_unique<ForbiddenClient>(std::move(stats));
}

HttpClient::Response with_retries(int max_retries, int backoff_ms,
                                  const std::function<HttpClient::Response()>& attempt) {
    int backoff = backoff_ms;
    for (int tries = 0;; ++tries) {
        try {
            return attempt();
        } catch (const NetworkError&) {
            if (tries >= max_retries) throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
    }
}

}  // namespace hifi
