#include <doctest.h>

#include "hifi/planner.hpp"
#include "support/stub_world.hpp"

using namespace hifi;
using hifi::testing::ScriptedLlmClient;

TEST_CASE("plans 1-2 trimmed queries from the model array") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"(["how a camera works explained for 5 year old", "ELI5 how a camera works"])");
    Gateway gateway(client);

    auto queries = plan_queries(gateway, {"q1", "Explain like I am five, how a camera works."});
    REQUIRE(queries.size() == 2);
    CHECK(queries[0].text == "how a camera works explained for 5 year old");
    CHECK(queries[1].text == "ELI5 how a camera works");

    const std::string& prompt = client->calls[0].messages[0].text;
    CHECK(prompt.starts_with("Create an effective and concise Google search query for this question: \n"
                             "Explain like I am five, how a camera works."));
}

TEST_CASE("truncates to max_queries") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"(["a", "b", "c"])");
    Gateway gateway(client);
    auto queries = plan_queries(gateway, {"q", "anything"}, 2);
    REQUIRE(queries.size() == 2);
    CHECK(queries[0].text == "a");
    CHECK(queries[1].text == "b");
}

TEST_CASE("dedupes, trims, and drops empties preserving order") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"(["  spaced  ", "", "spaced", "next"])");
    Gateway gateway(client);
    auto queries = plan_queries(gateway, {"q", "anything"}, 3);
    REQUIRE(queries.size() == 2);
    CHECK(queries[0].text == "spaced");
    CHECK(queries[1].text == "next");
}

TEST_CASE("non-string elements are skipped") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue(R"([42, "real query"])");
    Gateway gateway(client);
    auto queries = plan_queries(gateway, {"q", "anything"});
    REQUIRE(queries.size() == 1);
    CHECK(queries[0].text == "real query");
}

TEST_CASE("falls back to the raw question after two unparseable replies") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("nonsense");
    client->enqueue("more nonsense");
    Gateway gateway(client);
    auto queries = plan_queries(gateway, {"q", "  the raw question  "});
    REQUIRE(queries.size() == 1);
    CHECK(queries[0].text == "the raw question");
    CHECK(client->calls.size() == 2);
}

TEST_CASE("an empty array also falls back to the raw question") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("[]");
    Gateway gateway(client);
    auto queries = plan_queries(gateway, {"q", "raw"});
    REQUIRE(queries.size() == 1);
    CHECK(queries[0].text == "raw");
}
