#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hifi {

struct UserQuery {
    std::string id;
    std::string text;
};

// One keyword string destined for the search engine.
struct SearchQuery {
    std::string text;

    friend bool operator==(const SearchQuery&, const SearchQuery&) = default;
};

struct SearchHit {
    std::string url;
    std::string title;
    std::string preview;
    std::string source_query;
    int rank = 1;  // 1-based position within its result list

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// One header-grouped chunk of a parsed page. heading_level 0 marks the
// synthetic preamble (text before the first h1-h4) and the reddit submission.
struct Section {
    int index = 0;
    std::vector<std::string> heading_path;
    int heading_level = 0;
    std::string content;
    std::string snippet;

    friend bool operator==(const Section&, const Section&) = default;
};

enum class PageKind { web, reddit };

struct PageDocument {
    std::string url;
    std::string title;
    std::string preview;
    std::vector<Section> sections;
    PageKind kind = PageKind::web;
};

struct RedditComment {
    std::string id;
    int score = 0;
    std::string author;
    std::string body;
    std::int64_t created_at = 0;  // epoch seconds
    std::vector<RedditComment> replies;
};

struct RedditThread {
    std::string url;
    std::string title;
    std::string selftext;
    std::vector<RedditComment> comments;
};

// A page after section filtering; kept_sections are in model-ranked order,
// most useful first.
struct SiteContext {
    std::string title;
    std::string url;
    std::string preview;
    std::vector<Section> kept_sections;
};

struct FewShotExample {
    std::string question;
    std::string answer;
};

struct Citation {
    int source_index = 0;  // the [N] block number from the assembled context
    std::string url;

    friend bool operator==(const Citation&, const Citation&) = default;
};

struct FinalAnswer {
    std::string query_id;
    std::string text;
    std::vector<Citation> citations;
    std::string config_name;
};

struct QAPair {
    std::string id;
    std::string question;
    std::string answer;
};

// Joined display form of a heading path; "(preamble)" when the path is empty.
std::string heading_path_display(const Section& section);

}  // namespace hifi
