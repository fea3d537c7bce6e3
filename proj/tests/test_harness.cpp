#include <doctest.h>

#include "hifi/errors.hpp"
#include "hifi/harness.hpp"
#include "support/stub_world.hpp"

using namespace hifi;
using hifi::testing::make_stub_providers;
using hifi::testing::StubWorld;

namespace {

std::vector<QAPair> references() {
    return {
        {"a", "question a", "the quick brown fox"},
        {"b", "question b", "jumps over the lazy dog"},
        {"c", "question c", "reference text three"},
        {"d", "question d", "reference text four"},
    };
}

}  // namespace

TEST_CASE("evaluate: perfect and disjoint predictions") {
    std::vector<Prediction> predictions = {
        {"a", "the quick brown fox", {}},
        {"b", "entirely different words", {}},
    };
    EvalReport report = evaluate(predictions, references());
    CHECK(report.sample_count == 2);
    REQUIRE(report.per_sample.size() == 2);
    CHECK(report.per_sample[0].rouge_l_f1 == doctest::Approx(1.0));
    CHECK(report.per_sample[1].rouge_l_f1 == doctest::Approx(0.0));
    CHECK(report.mean_rouge_l == doctest::Approx(0.5));
    CHECK_FALSE(report.mean_external.has_value());
}

TEST_CASE("evaluate joins external scores over the covered subset") {
    std::vector<Prediction> predictions = {
        {"a", "the quick brown fox", {}},
        {"b", "jumps over the lazy dog", {}},
        {"c", "reference text three", {}},
        {"d", "reference text four", {}},
    };
    std::vector<ExternalScore> external = {{"a", 0.9}, {"c", 0.7}};
    EvalReport report = evaluate(predictions, references(), &external);
    CHECK(report.external_coverage == 2);
    REQUIRE(report.mean_external.has_value());
    CHECK(*report.mean_external == doctest::Approx(0.8));
    CHECK(report.mean_rouge_l == doctest::Approx(1.0));
    CHECK(report.per_sample[0].external.has_value());
    CHECK_FALSE(report.per_sample[1].external.has_value());
}

TEST_CASE("evaluate is permutation-invariant and sorts by id") {
    std::vector<Prediction> forward = {{"a", "x", {}}, {"b", "y", {}}, {"c", "z", {}}, {"d", "w", {}}};
    std::vector<Prediction> shuffled = {{"d", "w", {}}, {"b", "y", {}}, {"a", "x", {}}, {"c", "z", {}}};
    EvalReport r1 = evaluate(forward, references());
    EvalReport r2 = evaluate(shuffled, references());
    REQUIRE(r1.per_sample.size() == r2.per_sample.size());
    for (std::size_t i = 0; i < r1.per_sample.size(); ++i) {
        CHECK(r1.per_sample[i].id == r2.per_sample[i].id);
        CHECK(r1.per_sample[i].rouge_l_f1 == doctest::Approx(r2.per_sample[i].rouge_l_f1));
    }
    CHECK(r1.per_sample[0].id == "a");
    CHECK(r1.per_sample[3].id == "d");
}

TEST_CASE("evaluate rejects unmatched and duplicate prediction ids") {
    CHECK_THROWS_WITH_AS(evaluate({{"zz", "text", {}}}, references()),
                         doctest::Contains("no reference"), DataError);
    CHECK_THROWS_WITH_AS(evaluate({{"a", "x", {}}, {"a", "y", {}}}, references()),
                         doctest::Contains("duplicate prediction id"), DataError);
}

TEST_CASE("report table renders one row per report with the external column") {
    EvalReport with;
    with.config_name = "rag";
    with.sample_count = 4;
    with.mean_rouge_l = 0.25;
    with.mean_external = 0.5;
    EvalReport without;
    without.config_name = "baseline-q";
    without.sample_count = 4;
    without.mean_rouge_l = 0.125;

    std::string table = report_table({with, without});
    CHECK(table.find("System Configuration") != std::string::npos);
    CHECK(table.find("ROUGE-L (F1)") != std::string::npos);
    CHECK(table.find("External (F1)") != std::string::npos);
    CHECK(table.find("rag") != std::string::npos);
    CHECK(table.find("0.2500") != std::string::npos);
    CHECK(table.find("0.5000") != std::string::npos);
    CHECK(table.find("baseline-q") != std::string::npos);
    // The external column falls back to "-" for reports without scores.
    CHECK(table.substr(table.find("baseline-q")).find(" -") != std::string::npos);
}

TEST_CASE("run_ablation emits one row per config in order with isolated stats") {
    auto world = std::make_shared<StubWorld>();
    std::vector<QAPair> dataset = {
        {"1", "How does a microwave heat food?", "Microwaves agitate water molecules."},
        {"2", "Why do cats purr?", "Cats purr through rapid muscle twitches."},
        {"3", "How do tides work?", "Gravity from the moon pulls the oceans."},
    };

    PipelineOptions options;
    options.examples = {{"Q1?", "A1."}, {"Q2?", "A2."}, {"Q3?", "A3."}};

    auto rows = run_ablation(dataset, {"baseline-q", "rag", "final"}, 2,
                             [&] { return make_stub_providers(world); }, options, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].config_name == "baseline-q");
    CHECK(rows[1].config_name == "rag");
    CHECK(rows[2].config_name == "final");
    for (const auto& row : rows) {
        CHECK(row.report.sample_count == 2);  // limit applied
        CHECK(row.failure_count == 0);
        CHECK(row.predictions.size() == 2);
    }
    CHECK(rows[0].interactions.deep_calls == 2);  // one per sample
    CHECK(rows[0].interactions.searches == 0);
    CHECK(rows[1].interactions.searches == 2);    // raw question per sample
    CHECK(rows[2].interactions.deep_calls == 4);  // two turns per sample
    CHECK(rows[2].interactions.fast_calls > rows[1].interactions.fast_calls);
}

TEST_CASE("run_ablation records pipeline failures as zero-scoring samples") {
    auto world = std::make_shared<StubWorld>();
    std::vector<QAPair> dataset = {
        {"ok", "How do tides work?", "Gravity from the moon pulls the oceans."},
        {"bad", "   ", "unanswerable"},
    };
    auto rows = run_ablation(dataset, {"baseline-q"}, std::nullopt,
                             [&] { return make_stub_providers(world); }, {}, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].failure_count == 1);
    CHECK(rows[0].report.sample_count == 2);
    // The failed sample contributes a zero.
    bool found_zero = false;
    for (const auto& sample : rows[0].report.per_sample) {
        if (sample.id == "bad") found_zero = sample.rouge_l_f1 == 0.0;
    }
    CHECK(found_zero);
}
