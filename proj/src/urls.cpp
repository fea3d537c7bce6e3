#include "hifi/urls.hpp"

#include <cctype>

#include "hifi/strings.hpp"

namespace hifi {

std::optional<UrlParts> parse_url(std::string_view url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) return std::nullopt;

    UrlParts parts;
    parts.scheme = std::string(url.substr(0, scheme_end));
    for (char c : parts.scheme) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            return std::nullopt;
        }
    }

    std::string_view rest = url.substr(scheme_end + 3);
    auto authority_end = rest.find_first_of("/?#");
    std::string_view authority = rest.substr(0, authority_end);
    if (authority.empty()) return std::nullopt;

    auto colon = authority.rfind(':');
    if (colon != std::string_view::npos && authority.find(']', colon) == std::string_view::npos) {
        parts.host = std::string(authority.substr(0, colon));
        parts.port = std::string(authority.substr(colon + 1));
    } else {
        parts.host = std::string(authority);
    }
    if (parts.host.empty()) return std::nullopt;

    if (authority_end == std::string_view::npos) return parts;
    rest = rest.substr(authority_end);

    auto hash = rest.find('#');
    if (hash != std::string_view::npos) {
        parts.fragment = std::string(rest.substr(hash + 1));
        rest = rest.substr(0, hash);
    }
    auto qmark = rest.find('?');
    if (qmark != std::string_view::npos) {
        parts.query = std::string(rest.substr(qmark + 1));
        rest = rest.substr(0, qmark);
    }
    parts.path = std::string(rest);
    return parts;
}

bool is_absolute_http(std::string_view url) {
    auto parts = parse_url(url);
    if (!parts) return false;
    std::string scheme = to_lower_ascii(parts->scheme);
    return scheme == "http" || scheme == "https";
}

std::string normalize_url(std::string_view url) {
    auto parts = parse_url(url);
    if (!parts) return std::string(url);

    std::string path = parts->path;
    while (path.size() > 1 && path.back() == '/') path.pop_back();
    if (path == "/") path.clear();

    std::string out = to_lower_ascii(parts->scheme) + "://" + to_lower_ascii(parts->host);
    if (!parts->port.empty()) out += ":" + parts->port;
    out += path;
    if (!parts->query.empty()) out += "?" + parts->query;
    return out;
}

bool is_reddit_url(std::string_view url) {
    auto parts = parse_url(url);
    if (!parts) return false;
    std::string host = to_lower_ascii(parts->host);
    for (std::string_view domain : {"reddit.com", "redd.it"}) {
        if (host == domain) return true;
        if (host.size() > domain.size() && host.ends_with(domain) &&
            host[host.size() - domain.size() - 1] == '.') {
            return true;
        }
    }
    return false;
}

std::string url_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size() * 3);
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

}  // namespace hifi
