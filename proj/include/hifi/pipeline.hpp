#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hifi/config.hpp"
#include "hifi/providers.hpp"
#include "hifi/trace.hpp"
#include "hifi/types.hpp"

namespace hifi {

struct PipelineOptions {
    std::vector<FewShotExample> examples;  // required (3 entries) for two-turn configs
    std::chrono::milliseconds question_timeout{120000};
};

struct PipelineResult {
    FinalAnswer answer;
    RunTrace trace;
    bool failed = false;
    std::string error;  // populated when failed
};

// Wires all stages per the config. Stage order: query planning, search +
// merge, URL filter, fetch + parse (web or reddit by hostname), section
// filter, generation (two-turn / single-turn / baseline), citation
// verification. Filter stages fail open per their module contracts;
// search and generation errors abort the question with an error record.
class Pipeline {
public:
    Pipeline(Providers providers, PipelineConfig config, std::string config_name,
             PipelineOptions options = {});

    // Never throws; failures come back as a structured record.
    PipelineResult run(const UserQuery& question) const;

    const PipelineConfig& config() const { return config_; }
    const std::string& config_name() const { return config_name_; }
    CallStats* stats() const { return providers_.stats.get(); }

private:
    PipelineResult run_or_throw(const UserQuery& question) const;

    Providers providers_;
    PipelineConfig config_;
    std::string config_name_;
    PipelineOptions options_;
};

// Runs independent questions on a bounded worker pool; results line up with
// the input order.
std::vector<PipelineResult> run_batch(const Pipeline& pipeline,
                                      const std::vector<UserQuery>& questions, int parallelism = 4);

}  // namespace hifi
