#include <doctest.h>

#include "hifi/citations.hpp"
#include "hifi/errors.hpp"
#include "support/stub_world.hpp"

using namespace hifi;
using hifi::testing::ScriptedLlmClient;

namespace {

AssembledContext six_sources() {
    AssembledContext ctx;
    ctx.text = "[1] a\n[2] b\n[3] c\n[4] d\n[5] e\n[6] f\n";
    for (int i = 1; i <= 6; ++i) {
        ctx.index_to_url.emplace(i, "https://s" + std::to_string(i) + ".example/");
    }
    return ctx;
}

}  // namespace

TEST_CASE("keeps supporting sources in model order") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("[1, 4, 6]");
    Gateway gateway(client);

    auto citations = verify_citations(gateway, "the answer", six_sources());
    REQUIRE(citations.size() == 3);
    CHECK(citations[0] == Citation{1, "https://s1.example/"});
    CHECK(citations[1] == Citation{4, "https://s4.example/"});
    CHECK(citations[2] == Citation{6, "https://s6.example/"});

    const std::string& prompt = client->calls[0].messages[0].text;
    CHECK(prompt.find("ANSWER: the answer") != std::string::npos);
    CHECK(prompt.find("SOURCES:\n[1] a") != std::string::npos);
    CHECK(client->calls[0].tier == ModelTier::fast);
}

TEST_CASE("an empty array is a valid no-citations outcome") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("[]");
    Gateway gateway(client);
    CHECK(verify_citations(gateway, "answer", six_sources()).empty());
}

TEST_CASE("duplicates and out-of-range indices are dropped") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("[2, 2, 99]");
    Gateway gateway(client);

    AssembledContext ctx;
    ctx.text = "[1] a\n[2] b\n[3] c\n";
    for (int i = 1; i <= 3; ++i) ctx.index_to_url.emplace(i, "https://s" + std::to_string(i) + ".example/");

    auto citations = verify_citations(gateway, "answer", ctx);
    REQUIRE(citations.size() == 1);
    CHECK(citations[0].source_index == 2);
}

TEST_CASE("falls back to zero citations after the retry policy") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("no array");
    client->enqueue("still no array");
    Gateway gateway(client);
    CHECK(verify_citations(gateway, "answer", six_sources()).empty());
    CHECK(client->calls.size() == 2);
}

TEST_CASE("the answer text is never mutated") {
    auto client = std::make_shared<ScriptedLlmClient>();
    client->enqueue("[1]");
    Gateway gateway(client);
    std::string answer = "original answer bytes";
    std::string before = answer;
    verify_citations(gateway, answer, six_sources());
    CHECK(answer == before);
}

TEST_CASE("empty answers violate the precondition") {
    auto client = std::make_shared<ScriptedLlmClient>();
    Gateway gateway(client);
    CHECK_THROWS_AS(verify_citations(gateway, "", six_sources()), Error);
}
