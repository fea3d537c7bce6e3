#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "hifi/stats.hpp"

namespace hifi {

using HttpHeaders = std::map<std::string, std::string>;

// Transport seam: live clients go through this, replay providers never hold
// one, and tests can inject a client that fails loudly on any use.
class HttpClient {
public:
    struct Response {
        int status = 0;
        std::string body;
    };

    virtual ~HttpClient() = default;

    // Throw NetworkError on transport failure; HTTP error statuses come back
    // as Response for the caller to interpret.
    virtual Response get(const std::string& url, const HttpHeaders& headers) = 0;
    virtual Response post(const std::string& url, const HttpHeaders& headers,
                          const std::string& content_type, const std::string& body) = 0;
};

// cpp-httplib-backed client with a fixed timeout. Counts requests in `stats`
// when provided.
std::unique_ptr<HttpClient> make_httplib_client(int timeout_seconds = 20,
                                                std::shared_ptr<CallStats> stats = nullptr);

// Client that throws on any request; injected where zero network activity is
// a hard requirement (replay mode).
std::unique_ptr<HttpClient> make_forbidden_client(std::shared_ptr<CallStats> stats = nullptr);

// Runs `attempt` up to 1 + max_retries times, backing off between tries.
// Retries NetworkError only.
HttpClient::Response with_retries(int max_retries, int backoff_ms,
                                  const std::function<HttpClient::Response()>& attempt);

}  // namespace hifi
