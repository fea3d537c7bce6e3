// Regenerates the bundled replay fixtures by running every config preset
// over the sample dataset against the deterministic offline stand-ins, in
// record mode. Output is stable across runs, so the corpus can be committed.

#include <iostream>

#include <CLI11.hpp>

#include "hifi/answer.hpp"
#include "hifi/config.hpp"
#include "hifi/dataset.hpp"
#include "hifi/harness.hpp"
#include "support/stub_world.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hifi-fixturegen - regenerate the bundled replay fixture corpus"};
    std::string dataset_path = "fixtures/dataset_val5.jsonl";
    std::string fixtures_dir = "fixtures";
    std::string examples_path = "data/fewshot_examples.json";
    app.add_option("--dataset", dataset_path, "Sample QA JSONL");
    app.add_option("--fixtures", fixtures_dir, "Fixture directory to populate");
    app.add_option("--examples", examples_path, "Few-shot examples JSON");
    CLI11_PARSE(app, argc, argv);

    try {
        auto dataset = hifi::load_jsonl(dataset_path);
        auto world = std::make_shared<hifi::testing::StubWorld>();

        hifi::PipelineOptions options;
        options.examples = hifi::load_fewshot_examples(examples_path);

        auto rows = hifi::run_ablation(
            dataset, hifi::named_config_names(), std::nullopt,
            [&] { return hifi::testing::make_record_providers(world, fixtures_dir); }, options,
            /*parallelism=*/1);

        std::cout << "config, fast_calls, deep_calls, searches, page_fetches, reddit_fetches\n";
        for (const auto& row : rows) {
            if (row.failure_count > 0) {
                std::cerr << "config " << row.config_name << " had " << row.failure_count
                          << " failures\n";
                return 2;
            }
            std::cout << row.config_name << ", " << row.interactions.fast_calls << ", "
                      << row.interactions.deep_calls << ", " << row.interactions.searches << ", "
                      << row.interactions.page_fetches << ", " << row.interactions.reddit_fetches
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "fixturegen failed: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
