#include <doctest.h>

#include <set>

#include "hifi/config.hpp"
#include "hifi/errors.hpp"

using namespace hifi;

TEST_CASE("defaults validate") {
    PipelineConfig cfg;
    CHECK_NOTHROW(validate_config(cfg));
    CHECK(cfg.results_per_query == 10);
    CHECK(cfg.max_queries == 2);
    CHECK(cfg.fetch_parallelism == 8);
    CHECK(cfg.snippet_chars == 200);
    CHECK(cfg.reddit_k == 5);
    CHECK(cfg.reddit_m1 == 3);
    CHECK(cfg.reddit_m2 == 2);
}

TEST_CASE("baseline modes disable search") {
    PipelineConfig cfg;
    cfg.baseline_mode = BaselineMode::raw_query;
    cfg.search_enabled = true;
    CHECK_THROWS_WITH_AS(validate_config(cfg), doctest::Contains("baseline modes disable search"),
                         ConfigError);
}

TEST_CASE("filters require search") {
    PipelineConfig cfg;
    cfg.search_enabled = false;
    cfg.rephrase_enabled = false;
    cfg.two_turn_enabled = false;
    cfg.url_filter_enabled = false;
    cfg.chunk_filter_enabled = true;
    CHECK_THROWS_WITH_AS(validate_config(cfg), doctest::Contains("chunk_filter_enabled"), ConfigError);

    cfg.chunk_filter_enabled = false;
    cfg.url_filter_enabled = true;
    CHECK_THROWS_WITH_AS(validate_config(cfg), doctest::Contains("url_filter_enabled"), ConfigError);
}

TEST_CASE("two-turn conflicts with baseline modes") {
    PipelineConfig cfg;
    cfg.search_enabled = false;
    cfg.url_filter_enabled = false;
    cfg.chunk_filter_enabled = false;
    cfg.baseline_mode = BaselineMode::prompt_only;
    cfg.two_turn_enabled = true;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("counts must be positive") {
    PipelineConfig cfg;
    cfg.results_per_query = 0;
    CHECK_THROWS_WITH_AS(validate_config(cfg), doctest::Contains("results_per_query"), ConfigError);
}

TEST_CASE("named configs match their table rows") {
    PipelineConfig final_cfg = named_config("final");
    CHECK(final_cfg.search_enabled);
    CHECK(final_cfg.url_filter_enabled);
    CHECK(final_cfg.chunk_filter_enabled);
    CHECK(final_cfg.rephrase_enabled);
    CHECK(final_cfg.two_turn_enabled);
    CHECK(final_cfg.baseline_mode == BaselineMode::none);

    PipelineConfig baseline_q = named_config("baseline-q");
    CHECK(baseline_q.baseline_mode == BaselineMode::raw_query);
    CHECK_FALSE(baseline_q.search_enabled);
    CHECK_FALSE(baseline_q.rephrase_enabled);
    CHECK_FALSE(baseline_q.url_filter_enabled);
    CHECK_FALSE(baseline_q.chunk_filter_enabled);
    CHECK_FALSE(baseline_q.two_turn_enabled);

    PipelineConfig url_only = named_config("rag-url-filter");
    CHECK(url_only.search_enabled);
    CHECK(url_only.url_filter_enabled);
    CHECK_FALSE(url_only.chunk_filter_enabled);
    CHECK_FALSE(url_only.rephrase_enabled);
    CHECK_FALSE(url_only.two_turn_enabled);

    CHECK_THROWS_AS(named_config("bogus"), ConfigError);
}

TEST_CASE("every named config validates and the seven are pairwise distinct") {
    std::set<std::string> flag_vectors;
    for (const auto& name : named_config_names()) {
        PipelineConfig cfg = named_config(name);
        CHECK_NOTHROW(validate_config(cfg));
        std::string flags;
        flags += cfg.search_enabled ? '1' : '0';
        flags += cfg.rephrase_enabled ? '1' : '0';
        flags += cfg.url_filter_enabled ? '1' : '0';
        flags += cfg.chunk_filter_enabled ? '1' : '0';
        flags += cfg.two_turn_enabled ? '1' : '0';
        flags += to_string(cfg.baseline_mode);
        flag_vectors.insert(flags);
    }
    CHECK(named_config_names().size() == 7);
    CHECK(flag_vectors.size() == 7);
}

TEST_CASE("config JSON round-trip and unknown keys") {
    PipelineConfig cfg = named_config("rag-filters");
    cfg.results_per_query = 4;
    PipelineConfig loaded = config_from_json_text(config_to_json_text(cfg));
    CHECK(loaded == cfg);

    CHECK_THROWS_WITH_AS(config_from_json_text(R"({"search_enable": true})"),
                         doctest::Contains("unknown config key"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text("not json"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"baseline_mode": "sideways"})"), ConfigError);
}

TEST_CASE("json values layer over a base config") {
    PipelineConfig base = named_config("final");
    PipelineConfig overlaid = config_from_json_text(R"({"results_per_query": 3})", base);
    CHECK(overlaid.results_per_query == 3);
    CHECK(overlaid.two_turn_enabled);
}
