#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hifi/errors.hpp"
#include "hifi/reddit.hpp"
#include "hifi/strings.hpp"

using namespace hifi;

namespace {

std::string fixture_thread() {
    auto path = std::filesystem::path(HIFI_REPO_ROOT) / "tests" / "data" / "reddit_thread.json";
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int leading_spaces(const std::string& line) {
    int n = 0;
    while (n < static_cast<int>(line.size()) && line[static_cast<std::size_t>(n)] == ' ') ++n;
    return n;
}

int score_of(const std::string& line) {
    auto open = line.find('[');
    auto close = line.find(']', open);
    REQUIRE(open != std::string::npos);
    REQUIRE(close != std::string::npos);
    return std::stoi(line.substr(open + 1, close - open - 1));
}

}  // namespace

TEST_CASE("k/m1/m2 truncation on the 7x4x3 fixture thread") {
    RedditThread thread =
        parse_reddit_thread(fixture_thread(), "https://www.reddit.com/r/eli5/comments/abc/tides/");
    REQUIRE(thread.comments.size() == 7);

    PageDocument doc = reconstruct_reddit_tree(thread, 5, 3, 2);
    CHECK(doc.kind == PageKind::reddit);
    CHECK(doc.title == "How do tides work?");

    // Section 0 is the submission; exactly 5 comment sections follow.
    REQUIRE(doc.sections.size() == 6);
    CHECK(doc.sections[0].heading_level == 0);
    CHECK(doc.sections[0].content ==
          "How do tides work?\n\nLooking for a simple explanation of tidal forces.");

    for (std::size_t c = 1; c < doc.sections.size(); ++c) {
        const Section& section = doc.sections[c];
        CHECK(section.index == static_cast<int>(c));
        CHECK(section.heading_path ==
              std::vector<std::string>{"How do tides work?", "comment " + std::to_string(c)});

        auto lines = split_lines(section.content);
        // 1 top-level + 3 replies, each with 2 sub-replies.
        REQUIRE(lines.size() == 10);
        CHECK(leading_spaces(lines[0]) == 0);

        int replies = 0;
        int subreplies = 0;
        int last_reply_score = 1 << 20;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            int depth = leading_spaces(lines[i]);
            CHECK((depth == 2 || depth == 4));  // never deeper than two layers
            if (depth == 2) {
                ++replies;
                CHECK(score_of(lines[i]) <= last_reply_score);  // non-increasing siblings
                last_reply_score = score_of(lines[i]);
            } else {
                ++subreplies;
            }
        }
        CHECK(replies == 3);
        CHECK(subreplies == 6);
    }

    // Top-level scores arrive sorted 9..5; the score-4 and score-3 comments
    // are gone.
    std::vector<int> top_scores;
    for (std::size_t c = 1; c < doc.sections.size(); ++c) {
        top_scores.push_back(score_of(split_lines(doc.sections[c].content)[0]));
    }
    CHECK(top_scores == std::vector<int>{9, 8, 7, 6, 5});
}

TEST_CASE("score ties break by earlier created_at") {
    RedditThread thread =
        parse_reddit_thread(fixture_thread(), "https://www.reddit.com/r/eli5/comments/abc/tides/");
    PageDocument doc = reconstruct_reddit_tree(thread, 5, 3, 2);
    // Replies tie at score 4; the one created at t=1700000100 (mid_x1) wins
    // the first slot.
    auto lines = split_lines(doc.sections[1].content);
    CHECK(lines[1].find("mid_") != std::string::npos);
    CHECK(lines[1].find("1:") != std::string::npos);   // author mid_i1, earlier timestamp
    CHECK(lines[4].find("0:") != std::string::npos);   // author mid_i0, later timestamp
}

TEST_CASE("fewer comments than the budget keeps what exists") {
    std::string raw = R"({"title": "Small", "selftext": "", "comments": [
        {"id": "a", "score": 2, "author": "x", "body": "first", "created_utc": 1, "replies": ""},
        {"id": "b", "score": 7, "author": "y", "body": "second", "created_utc": 2, "replies": ""}
    ]})";
    RedditThread thread = parse_reddit_thread(raw, "https://reddit.com/r/x/comments/1/small/");
    PageDocument doc = reconstruct_reddit_tree(thread, 5, 3, 2);
    REQUIRE(doc.sections.size() == 3);
    CHECK(doc.sections[0].content == "Small");  // empty selftext: title only
    CHECK(score_of(split_lines(doc.sections[1].content)[0]) == 7);
    CHECK(score_of(split_lines(doc.sections[2].content)[0]) == 2);
}

TEST_CASE("parses the two-listing endpoint shape and skips 'more' stubs") {
    std::string raw = R"([
      {"kind": "Listing", "data": {"children": [
        {"kind": "t3", "data": {"title": "Endpoint shape", "selftext": "Body text."}}]}},
      {"kind": "Listing", "data": {"children": [
        {"kind": "t1", "data": {"id": "c1", "score": 3, "author": "a", "body": "hello",
                                 "created_utc": 5, "replies": ""}},
        {"kind": "more", "data": {"count": 12}}]}}
    ])";
    RedditThread thread = parse_reddit_thread(raw, "https://www.reddit.com/r/x/comments/2/shape/");
    CHECK(thread.title == "Endpoint shape");
    CHECK(thread.selftext == "Body text.");
    REQUIRE(thread.comments.size() == 1);
    CHECK(thread.comments[0].body == "hello");
}

TEST_CASE("deleted and malformed threads raise the right errors") {
    CHECK_THROWS_AS(parse_reddit_thread(R"([{"kind":"Listing","data":{"children":[]}}])",
                                        "https://reddit.com/x"),
                    ThreadDeletedError);
    CHECK_THROWS_AS(parse_reddit_thread(R"({"title": "", "comments": []})", "https://reddit.com/x"),
                    ThreadDeletedError);
    CHECK_THROWS_AS(parse_reddit_thread("not json at all", "https://reddit.com/x"), ParseError);
    CHECK_THROWS_AS(parse_reddit_thread("{}", "https://reddit.com/x"), ParseError);
}

TEST_CASE("comment bodies render single-line with scores and authors") {
    std::string raw = R"({"title": "Render", "selftext": "Self.", "comments": [
        {"id": "a", "score": 10, "author": "alice", "body": "line one\nline two",
         "created_utc": 1, "replies": {"kind": "Listing", "data": {"children": [
            {"kind": "t1", "data": {"id": "b", "score": 4, "author": "bob",
                                     "body": "a reply", "created_utc": 2, "replies": ""}}]}}}
    ]})";
    RedditThread thread = parse_reddit_thread(raw, "https://reddit.com/r/x/comments/3/render/");
    PageDocument doc = reconstruct_reddit_tree(thread, 5, 3, 2);
    auto lines = split_lines(doc.sections[1].content);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "[10] alice: line one line two");
    CHECK(lines[1] == "  [4] bob: a reply");
    CHECK(doc.preview == "Render\n" + doc.sections[0].snippet);
}
