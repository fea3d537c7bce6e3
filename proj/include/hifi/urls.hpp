#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hifi {

struct UrlParts {
    std::string scheme;
    std::string host;
    std::string port;      // empty when absent
    std::string path;      // empty or starts with '/'
    std::string query;     // without '?'
    std::string fragment;  // without '#'
};

std::optional<UrlParts> parse_url(std::string_view url);

bool is_absolute_http(std::string_view url);

// Dedupe key: lowercased scheme and host, fragment removed, trailing slash
// removed. Path, query, and port are otherwise preserved as-is.
std::string normalize_url(std::string_view url);

// True for reddit.com / redd.it and their subdomains.
bool is_reddit_url(std::string_view url);

std::string url_encode(std::string_view s);

}  // namespace hifi
