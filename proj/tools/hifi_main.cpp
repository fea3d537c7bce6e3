#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hifi/answer.hpp"
#include "hifi/config.hpp"
#include "hifi/dataset.hpp"
#include "hifi/errors.hpp"
#include "hifi/harness.hpp"
#include "hifi/pipeline.hpp"
#include "hifi/trace.hpp"

namespace {

using namespace hifi;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRuntimeError = 2;

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value ? value : fallback;
}

struct GlobalOptions {
    std::string mode = env_or("HIFI_MODE", "replay");
    std::string fixtures_dir = env_or("HIFI_FIXTURES_DIR", "fixtures");
    std::string cache_dir = env_or("HIFI_CACHE_DIR", ".hifi-cache");
    std::string trace_dir = env_or("HIFI_TRACE_DIR", "traces");
    std::string examples_file = env_or("HIFI_EXAMPLES_FILE", "data/fewshot_examples.json");
    int parallelism = 4;
    int timeout_seconds = 120;
};

struct ConfigSelection {
    std::string name;  // named preset
    std::string file;  // JSON config file
    std::optional<int> results_per_query;
    std::optional<int> max_queries;
    std::optional<int> fetch_parallelism;
    std::optional<int> snippet_chars;
};

void add_config_flags(CLI::App* cmd, ConfigSelection& selection) {
    cmd->add_option("--config", selection.name, "Named config preset");
    cmd->add_option("--config-file", selection.file, "JSON config file (fields mirror the preset schema)");
    cmd->add_option("--results-per-query", selection.results_per_query, "Search hits per query");
    cmd->add_option("--max-queries", selection.max_queries, "Planned queries per question (1-2)");
    cmd->add_option("--fetch-parallelism", selection.fetch_parallelism, "Concurrent page fetches");
    cmd->add_option("--snippet-chars", selection.snippet_chars, "Snippet length for section previews");
}

std::pair<PipelineConfig, std::string> resolve_config(const ConfigSelection& selection) {
    PipelineConfig config;
    std::string name = "final";
    if (!selection.name.empty() && !selection.file.empty()) {
        throw ConfigError("--config and --config-file are mutually exclusive");
    }
    if (!selection.name.empty()) {
        config = named_config(selection.name);
        name = selection.name;
    } else if (!selection.file.empty()) {
        config = config_from_json_file(selection.file);
        name = std::filesystem::path(selection.file).stem().string();
    } else {
        config = named_config("final");
    }
    if (selection.results_per_query) config.results_per_query = *selection.results_per_query;
    if (selection.max_queries) config.max_queries = *selection.max_queries;
    if (selection.fetch_parallelism) config.fetch_parallelism = *selection.fetch_parallelism;
    if (selection.snippet_chars) config.snippet_chars = *selection.snippet_chars;
    return {validate_config(config), name};
}

PipelineOptions resolve_options(const GlobalOptions& global, const PipelineConfig& config) {
    PipelineOptions options;
    options.question_timeout = std::chrono::seconds(global.timeout_seconds);
    std::string examples_path =
        config.examples_path.empty() ? global.examples_file : config.examples_path;
    if (config.two_turn_enabled) {
        options.examples = load_fewshot_examples(examples_path);
    } else if (std::filesystem::exists(examples_path)) {
        options.examples = load_fewshot_examples(examples_path);
    }
    return options;
}

Providers build_providers(const GlobalOptions& global) {
    ProviderPaths paths;
    paths.fixtures_dir = global.fixtures_dir;
    paths.cache_dir = global.cache_dir;
    return make_providers(run_mode_from_string(global.mode), paths);
}

std::string sanitize_id(const std::string& id) {
    std::string out;
    for (char c : id) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    }
    return out.empty() ? "question" : out;
}

std::filesystem::path write_trace(const GlobalOptions& global, const RunTrace& trace) {
    std::filesystem::create_directories(global.trace_dir);
    auto path = std::filesystem::path(global.trace_dir) / (sanitize_id(trace.query_id) + ".json");
    write_trace_file(trace, path.string());
    return path;
}

int run_ask(const GlobalOptions& global, const ConfigSelection& selection, const std::string& question,
            const std::string& id, const std::string& output_format) {
    auto [config, name] = resolve_config(selection);
    Pipeline pipeline(build_providers(global), config, name, resolve_options(global, config));

    PipelineResult result = pipeline.run({id, question});
    auto trace_path = write_trace(global, result.trace);
    if (result.failed) {
        std::cerr << "error: " << result.error << "\n";
        return kExitRuntimeError;
    }

    if (output_format == "json") {
        json citations = json::array();
        for (const auto& citation : result.answer.citations) citations.push_back(citation.url);
        json doc = {{"id", result.answer.query_id},
                    {"answer", result.answer.text},
                    {"citations", citations},
                    {"trace_path", trace_path.string()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << result.answer.text << "\n";
        if (!result.answer.citations.empty()) {
            std::cout << "\nSources:\n";
            for (const auto& citation : result.answer.citations) {
                std::cout << "  [" << citation.source_index << "] " << citation.url << "\n";
            }
        }
    }
    return kExitOk;
}

int run_batch_cmd(const GlobalOptions& global, const ConfigSelection& selection,
                  const std::string& input_path, const std::string& output_path) {
    auto [config, name] = resolve_config(selection);
    Pipeline pipeline(build_providers(global), config, name, resolve_options(global, config));

    auto questions = load_questions_jsonl(input_path);
    auto results = run_batch(pipeline, questions, global.parallelism);

    std::vector<Prediction> predictions;
    int failures = 0;
    for (const auto& result : results) {
        Prediction p;
        p.id = result.answer.query_id;
        p.answer = result.answer.text;
        for (const auto& citation : result.answer.citations) p.citations.push_back(citation.url);
        predictions.push_back(std::move(p));
        failures += result.failed ? 1 : 0;
        write_trace(global, result.trace);
    }

    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write predictions file: " + output_path);
    out << predictions_to_jsonl(predictions);
    std::cerr << "wrote " << predictions.size() << " predictions to " << output_path << " ("
              << failures << " failures)\n";
    return failures == 0 ? kExitOk : kExitRuntimeError;
}

int run_eval(const std::string& predictions_path, const std::string& references_path,
             const std::string& external_path, const std::string& report_path) {
    auto predictions = load_predictions_jsonl(predictions_path);
    auto references = load_jsonl(references_path);
    std::optional<std::vector<ExternalScore>> external;
    if (!external_path.empty()) external = load_external_scores_jsonl(external_path);

    EvalReport report = evaluate(predictions, references, external ? &*external : nullptr,
                                 std::filesystem::path(predictions_path).stem().string());
    std::cout << report_table({report});
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write report file: " + report_path);
        out << report_to_json_text(report) << "\n";
    }
    return kExitOk;
}

int run_ablate(const GlobalOptions& global, const std::string& dataset_path,
               std::vector<std::string> config_names, std::optional<int> limit,
               const std::string& report_path) {
    auto dataset = load_jsonl(dataset_path);
    if (config_names.empty()) config_names = named_config_names();

    PipelineConfig probe;  // examples load once; two-turn presets need them
    probe.two_turn_enabled = true;
    PipelineOptions options = resolve_options(global, probe);

    auto rows = run_ablation(dataset, config_names, limit,
                             [&] { return build_providers(global); }, options, global.parallelism);

    std::vector<EvalReport> reports;
    for (const auto& row : rows) reports.push_back(row.report);
    std::cout << report_table(reports);
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write report file: " + report_path);
        out << ablation_to_json_text(rows) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hifi - hierarchical-filtering retrieval-augmented QA pipeline"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--mode", global.mode, "live, record, or replay")->envname("HIFI_MODE");
    app.add_option("--fixtures", global.fixtures_dir, "Fixture store directory");
    app.add_option("--cache-dir", global.cache_dir, "Live-mode page cache directory");
    app.add_option("--trace-dir", global.trace_dir, "Directory for per-question trace files");
    app.add_option("--examples", global.examples_file, "Few-shot examples JSON file");
    app.add_option("--parallelism", global.parallelism, "Concurrent questions in batch/ablate");
    app.add_option("--timeout", global.timeout_seconds, "Per-question timeout in seconds");

    auto* ask = app.add_subcommand("ask", "Answer a single question");
    std::string question;
    std::string question_id = "cli";
    std::string output_format = "text";
    ask->add_option("question", question, "The question text")->required();
    ask->add_option("--id", question_id, "Question id used for the trace file");
    ask->add_option("--output", output_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ConfigSelection ask_config;
    add_config_flags(ask, ask_config);

    auto* batch = app.add_subcommand("batch", "Answer a JSONL file of questions");
    std::string batch_input;
    std::string batch_output;
    batch->add_option("--input", batch_input, "Questions JSONL")->required();
    batch->add_option("--output", batch_output, "Predictions JSONL")->required();
    ConfigSelection batch_config;
    add_config_flags(batch, batch_config);

    auto* eval = app.add_subcommand("eval", "Score predictions against references");
    std::string eval_predictions;
    std::string eval_references;
    std::string eval_external;
    std::string eval_report;
    eval->add_option("--predictions", eval_predictions, "Predictions JSONL")->required();
    eval->add_option("--references", eval_references, "Reference QA JSONL")->required();
    eval->add_option("--external-scores", eval_external, "External per-sample scores JSONL");
    eval->add_option("--report", eval_report, "Write the JSON report here");

    auto* ablate = app.add_subcommand("ablate", "Run the config ablation matrix");
    std::string ablate_dataset;
    std::string ablate_configs;
    std::optional<int> ablate_limit;
    std::string ablate_report;
    ablate->add_option("--dataset", ablate_dataset, "Reference QA JSONL")->required();
    ablate->add_option("--configs", ablate_configs, "Comma-separated preset names (default: all)");
    ablate->add_option("--limit", ablate_limit, "Evaluate only the first N samples");
    ablate->add_option("--report", ablate_report, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*ask) return run_ask(global, ask_config, question, question_id, output_format);
        if (*batch) return run_batch_cmd(global, batch_config, batch_input, batch_output);
        if (*eval) return run_eval(eval_predictions, eval_references, eval_external, eval_report);
        if (*ablate) {
            std::vector<std::string> names;
            if (!ablate_configs.empty()) {
                std::size_t start = 0;
                while (start <= ablate_configs.size()) {
                    auto comma = ablate_configs.find(',', start);
                    std::string name = ablate_configs.substr(
                        start, comma == std::string::npos ? std::string::npos : comma - start);
                    if (!name.empty()) names.push_back(name);
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            return run_ablate(global, ablate_dataset, names, ablate_limit, ablate_report);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DataError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitInputError;
}
