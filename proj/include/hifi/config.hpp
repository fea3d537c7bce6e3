#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hifi {

enum class BaselineMode { none, raw_query, prompt_only };

std::string to_string(BaselineMode mode);
BaselineMode baseline_mode_from_string(const std::string& name);

// Stage toggles and tuning knobs for one pipeline run. Flag dependencies are
// enforced by validate_config, not by construction.
struct PipelineConfig {
    bool search_enabled = true;
    bool rephrase_enabled = true;
    bool url_filter_enabled = true;
    bool chunk_filter_enabled = true;
    bool two_turn_enabled = true;
    BaselineMode baseline_mode = BaselineMode::none;
    int results_per_query = 10;
    int max_queries = 2;
    int fetch_parallelism = 8;
    int snippet_chars = 200;
    int reddit_k = 5;
    int reddit_m1 = 3;
    int reddit_m2 = 2;
    std::string examples_path;  // few-shot examples file; empty uses the bundled set

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

// Returns the config unchanged when every invariant holds; throws ConfigError
// naming the first violated rule otherwise.
PipelineConfig validate_config(const PipelineConfig& config);

// The seven ablation presets, in results-table row order.
const std::vector<std::string>& named_config_names();

// Throws ConfigError on an unknown name.
PipelineConfig named_config(const std::string& name);

// Reads a JSON object whose keys match the PipelineConfig field names.
// Unknown keys are rejected. Values not present keep `base` values, so CLI
// overrides can be layered on top.
PipelineConfig config_from_json_file(const std::string& path, PipelineConfig base = {});
PipelineConfig config_from_json_text(const std::string& text, PipelineConfig base = {});

std::string config_to_json_text(const PipelineConfig& config);

}  // namespace hifi
