#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/search.hpp"
#include "hifi/urls.hpp"
#include "support/stub_world.hpp"

using namespace hifi;
using hifi::testing::ScriptedLlmClient;
using hifi::testing::TempDir;
using nlohmann::json;

namespace {

SearchHit hit(const std::string& url) {
    SearchHit h;
    h.url = url;
    h.title = "title of " + url;
    h.preview = "preview of " + url;
    h.source_query = "q";
    h.rank = 1;
    return h;
}

void write_search_fixture(const std::filesystem::path& dir, const std::string& query,
                          const json& hits) {
    std::filesystem::create_directories(dir);
    std::ofstream out(ReplaySearchClient::fixture_path(dir, query));
    out << hits.dump();
}

}  // namespace

TEST_CASE("url normalization rules") {
    CHECK(normalize_url("HTTPS://Example.COM/Path/") == "https://example.com/Path");
    CHECK(normalize_url("https://example.com/") == "https://example.com");
    CHECK(normalize_url("https://example.com/a#frag") == "https://example.com/a");
    CHECK(normalize_url("https://example.com/a?b=1#frag") == "https://example.com/a?b=1");
    CHECK(normalize_url("https://example.com:8080/x") == "https://example.com:8080/x");
    // Path case is preserved; only scheme/host fold.
    CHECK(normalize_url("http://A.B/C") != normalize_url("http://a.b/c"));
}

TEST_CASE("reddit hosts route by suffix") {
    CHECK(is_reddit_url("https://www.reddit.com/r/x/comments/1/t/"));
    CHECK(is_reddit_url("https://old.reddit.com/r/x"));
    CHECK(is_reddit_url("https://redd.it/abc"));
    CHECK_FALSE(is_reddit_url("https://notreddit.com/r/x"));
    CHECK_FALSE(is_reddit_url("https://reddit.com.evil.example/x"));
    CHECK_FALSE(is_reddit_url("not a url"));
}

TEST_CASE("merge_dedupe keeps first-seen order") {
    auto a = hit("https://a.example/1");
    auto b = hit("https://b.example/2");
    auto c = hit("https://c.example/3");
    CHECK(merge_dedupe({{a, b}, {b, c}}) == std::vector<SearchHit>{a, b, c});
    CHECK(merge_dedupe({{}, {a}}) == std::vector<SearchHit>{a});
    CHECK(merge_dedupe({}) == std::vector<SearchHit>{});

    // Trailing slash and case differences collapse to one entry.
    auto slash = hit("https://a.example/1/");
    auto upper = hit("HTTPS://A.EXAMPLE/1");
    CHECK(merge_dedupe({{a}, {slash, upper}}) == std::vector<SearchHit>{a});
}

TEST_CASE("merge_dedupe output is pairwise distinct under random inputs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 9);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::vector<SearchHit>> lists(2);
        for (auto& list : lists) {
            int n = pick(rng);
            for (int i = 0; i < n; ++i) {
                list.push_back(hit("https://site" + std::to_string(pick(rng)) + ".example/p" +
                                   std::to_string(pick(rng) % 3)));
            }
        }
        auto merged = merge_dedupe(lists);
        std::set<std::string> seen;
        for (const auto& h : merged) CHECK(seen.insert(normalize_url(h.url)).second);
    }
}

TEST_CASE("replay search serves fixtures with ranks assigned") {
    TempDir dir("search");
    write_search_fixture(dir.path(), "cats", json::array({
        {{"url", "https://a.example/1"}, {"title", "t1"}, {"preview", "p1"}},
        {{"url", "https://b.example/2"}, {"title", "t2"}, {"preview", "p2"}},
        {{"url", "https://c.example/3"}, {"title", "t3"}, {"preview", "p3"}},
    }));

    auto stats = std::make_shared<CallStats>();
    ReplaySearchClient client(dir.path(), stats);
    auto hits = client.search({"cats"}, 10);
    REQUIRE(hits.size() == 3);
    CHECK(hits[0].rank == 1);
    CHECK(hits[2].rank == 3);
    CHECK(hits[0].source_query == "cats");
    CHECK(stats->searches.load() == 1);

    // n truncates.
    CHECK(client.search({"cats"}, 2).size() == 2);

    // Zero hits is a valid fixture, a missing one is not.
    write_search_fixture(dir.path(), "nothing", json::array());
    CHECK(client.search({"nothing"}, 5).empty());
    CHECK_THROWS_AS(client.search({"unrecorded"}, 5), ReplayMissError);
}

TEST_CASE("record search writes a fixture then replays it") {
    TempDir dir("record-search");

    struct OneShot : SearchClient {
        int calls = 0;
        std::vector<SearchHit> search(const SearchQuery& query, int n) override {
            ++calls;
            std::vector<SearchHit> hits = {hit("https://live.example/only")};
            hits[0].source_query = query.text;
            (void)n;
            return hits;
        }
    };
    auto live = std::make_shared<OneShot>();

    RecordSearchClient record(live, dir.path());
    auto first = record.search({"once"}, 5);
    auto second = record.search({"once"}, 5);
    CHECK(live->calls == 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].url == second[0].url);
}

TEST_CASE("filter_urls keeps the model's subset in model order") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"(["https://c.example/3", "https://a.example/1"])");
    Gateway gateway(client);

    std::vector<SearchHit> hits = {hit("https://a.example/1"), hit("https://b.example/2"),
                                   hit("https://c.example/3")};
    auto kept = filter_urls(gateway, {"id", "question?"}, hits);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].url == "https://c.example/3");
    CHECK(kept[1].url == "https://a.example/1");

    // The prompt embeds the numbered candidate lines.
    const std::string& prompt = client->calls[0].messages[0].text;
    CHECK(prompt.find("1. https://a.example/1 \xE2\x80\x94 title of https://a.example/1") !=
          std::string::npos);
    CHECK(prompt.find("\"question?\"") != std::string::npos);
}

TEST_CASE("filter_urls drops hallucinated URLs and duplicates") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"(["https://nowhere.example/fake", "https://b.example/2",
                        "https://b.example/2/", 17])");
    Gateway gateway(client);

    std::vector<SearchHit> hits = {hit("https://a.example/1"), hit("https://b.example/2")};
    auto kept = filter_urls(gateway, {"id", "q"}, hits);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].url == "https://b.example/2");
}

TEST_CASE("filter_urls fails open after the retry policy") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("no list here");
    client->enqueue("still no list");
    Gateway gateway(client);

    std::vector<SearchHit> hits = {hit("https://a.example/1"), hit("https://b.example/2")};
    CHECK(filter_urls(gateway, {"id", "q"}, hits) == hits);
}

TEST_CASE("filter_urls on empty input makes no model call") {
    auto client = std::make_shared<ScriptedLlmClient>();
    Gateway gateway(client);
    CHECK(filter_urls(gateway, {"id", "q"}, {}).empty());
    CHECK(client->calls.empty());
}

TEST_CASE("filter_urls output is always a subset, under fuzzed model replies") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int round = 0; round < 60; ++round) {
        std::vector<SearchHit> hits;
        int n = 1 + pick(rng);
        for (int i = 0; i < n; ++i) hits.push_back(hit("https://h" + std::to_string(i) + ".example/p"));

        json reply = json::array();
        int m = pick(rng) + 1;
        for (int i = 0; i < m; ++i) {
            int kind = pick(rng);
            if (kind < 3) reply.push_back(hits[static_cast<std::size_t>(pick(rng) % n)].url);
            else if (kind == 4) reply.push_back("https://halluc" + std::to_string(i) + ".example/");
            else reply.push_back(i);  // junk element
        }

        auto client = std::make_shared<ScriptedLlmClient>();
        client->enqueue(reply.dump());
        Gateway gateway(client);
        auto kept = filter_urls(gateway, {"id", "q"}, hits);

        CHECK(kept.size() <= hits.size());
        std::set<std::string> input_urls;
        for (const auto& h : hits) input_urls.insert(h.url);
        std::set<std::string> seen;
        for (const auto& h : kept) {
            CHECK(input_urls.count(h.url) == 1);
            CHECK(seen.insert(h.url).second);  // no duplicates
        }
    }
}
