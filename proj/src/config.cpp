#include "hifi/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"

namespace hifi {

using nlohmann::json;

std::string to_string(BaselineMode mode) {
    switch (mode) {
        case BaselineMode::none: return "none";
        case BaselineMode::raw_query: return "raw-query";
        case BaselineMode::prompt_only: return "prompt-only";
    }
    return "none";
}

BaselineMode baseline_mode_from_string(const std::string& name) {
    if (name == "none") return BaselineMode::none;
    if (name == "raw-query") return BaselineMode::raw_query;
    if (name == "prompt-only") return BaselineMode::prompt_only;
    throw ConfigError("unknown baseline_mode \"" + name + "\" (expected none, raw-query, prompt-only)");
}

PipelineConfig validate_config(const PipelineConfig& config) {
    auto positive = [](int value, const char* field) {
        if (value < 1) {
            throw ConfigError(std::string(field) + " must be a positive integer, got " + std::to_string(value));
        }
    };
    positive(config.results_per_query, "results_per_query");
    positive(config.max_queries, "max_queries");
    positive(config.fetch_parallelism, "fetch_parallelism");
    positive(config.snippet_chars, "snippet_chars");
    positive(config.reddit_k, "reddit_k");
    positive(config.reddit_m1, "reddit_m1");
    positive(config.reddit_m2, "reddit_m2");

    if (config.baseline_mode != BaselineMode::none && config.search_enabled) {
        throw ConfigError("baseline modes disable search (baseline_mode=" + to_string(config.baseline_mode) +
                          " requires search_enabled=false)");
    }
    if (config.chunk_filter_enabled && !config.search_enabled) {
        throw ConfigError("chunk_filter_enabled requires search_enabled");
    }
    if (config.url_filter_enabled && !config.search_enabled) {
        throw ConfigError("url_filter_enabled requires search_enabled");
    }
    if (config.two_turn_enabled && config.baseline_mode != BaselineMode::none) {
        throw ConfigError("two_turn_enabled requires baseline_mode=none");
    }
    return config;
}

const std::vector<std::string>& named_config_names() {
    static const std::vector<std::string> names = {
        "baseline-q",  "baseline-prompt",     "rag",   "rag-url-filter",
        "rag-filters", "rag-filters-rephrase", "final",
    };
    return names;
}

PipelineConfig named_config(const std::string& name) {
    PipelineConfig cfg;
    cfg.search_enabled = false;
    cfg.rephrase_enabled = false;
    cfg.url_filter_enabled = false;
    cfg.chunk_filter_enabled = false;
    cfg.two_turn_enabled = false;

    if (name == "baseline-q") {
        cfg.baseline_mode = BaselineMode::raw_query;
    } else if (name == "baseline-prompt") {
        cfg.baseline_mode = BaselineMode::prompt_only;
    } else if (name == "rag") {
        cfg.search_enabled = true;
    } else if (name == "rag-url-filter") {
        cfg.search_enabled = true;
        cfg.url_filter_enabled = true;
    } else if (name == "rag-filters") {
        cfg.search_enabled = true;
        cfg.url_filter_enabled = true;
        cfg.chunk_filter_enabled = true;
    } else if (name == "rag-filters-rephrase") {
        cfg.search_enabled = true;
        cfg.url_filter_enabled = true;
        cfg.chunk_filter_enabled = true;
        cfg.rephrase_enabled = true;
    } else if (name == "final") {
        cfg.search_enabled = true;
        cfg.url_filter_enabled = true;
        cfg.chunk_filter_enabled = true;
        cfg.rephrase_enabled = true;
        cfg.two_turn_enabled = true;
    } else {
        throw ConfigError("unknown config name \"" + name + "\"");
    }
    return validate_config(cfg);
}

namespace {

PipelineConfig apply_json(const json& doc, PipelineConfig cfg) {
    if (!doc.is_object()) throw ConfigError("config JSON must be an object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "search_enabled") cfg.search_enabled = value.get<bool>();
            else if (key == "rephrase_enabled") cfg.rephrase_enabled = value.get<bool>();
            else if (key == "url_filter_enabled") cfg.url_filter_enabled = value.get<bool>();
            else if (key == "chunk_filter_enabled") cfg.chunk_filter_enabled = value.get<bool>();
            else if (key == "two_turn_enabled") cfg.two_turn_enabled = value.get<bool>();
            else if (key == "baseline_mode") cfg.baseline_mode = baseline_mode_from_string(value.get<std::string>());
            else if (key == "results_per_query") cfg.results_per_query = value.get<int>();
            else if (key == "max_queries") cfg.max_queries = value.get<int>();
            else if (key == "fetch_parallelism") cfg.fetch_parallelism = value.get<int>();
            else if (key == "snippet_chars") cfg.snippet_chars = value.get<int>();
            else if (key == "reddit_k") cfg.reddit_k = value.get<int>();
            else if (key == "reddit_m1") cfg.reddit_m1 = value.get<int>();
            else if (key == "reddit_m2") cfg.reddit_m2 = value.get<int>();
            else if (key == "examples_path") cfg.examples_path = value.get<std::string>();
            else throw ConfigError("unknown config key \"" + key + "\"");
        } catch (const json::exception& e) {
            throw ConfigError("config key \"" + key + "\": " + e.what());
        }
    }
    return cfg;
}

}  // namespace

PipelineConfig config_from_json_text(const std::string& text, PipelineConfig base) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config JSON parse error: ") + e.what());
    }
    return apply_json(doc, std::move(base));
}

PipelineConfig config_from_json_file(const std::string& path, PipelineConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str(), std::move(base));
}

std::string config_to_json_text(const PipelineConfig& c) {
    json doc = {
        {"search_enabled", c.search_enabled},
        {"rephrase_enabled", c.rephrase_enabled},
        {"url_filter_enabled", c.url_filter_enabled},
        {"chunk_filter_enabled", c.chunk_filter_enabled},
        {"two_turn_enabled", c.two_turn_enabled},
        {"baseline_mode", to_string(c.baseline_mode)},
        {"results_per_query", c.results_per_query},
        {"max_queries", c.max_queries},
        {"fetch_parallelism", c.fetch_parallelism},
        {"snippet_chars", c.snippet_chars},
        {"reddit_k", c.reddit_k},
        {"reddit_m1", c.reddit_m1},
        {"reddit_m2", c.reddit_m2},
        {"examples_path", c.examples_path},
    };
    return doc.dump(2);
}

}  // namespace hifi
