#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hifi/dataset.hpp"
#include "hifi/pipeline.hpp"
#include "hifi/stats.hpp"
#include "hifi/types.hpp"

namespace hifi {

struct SampleScore {
    std::string id;
    double rouge_l_f1 = 0.0;
    std::optional<double> external;
};

struct EvalReport {
    std::string config_name;
    std::vector<SampleScore> per_sample;  // sorted by id
    double mean_rouge_l = 0.0;
    std::optional<double> mean_external;  // over the covered subset
    int external_coverage = 0;            // samples with an external score
    int sample_count = 0;
};

// Scores every prediction against its reference by id and joins optional
// external scores. Throws DataError on an unmatched or duplicate prediction
// id. Output ordering is by id, independent of input order.
EvalReport evaluate(const std::vector<Prediction>& predictions,
                    const std::vector<QAPair>& references,
                    const std::vector<ExternalScore>* external_scores = nullptr,
                    std::string config_name = "");

std::string report_to_json_text(const EvalReport& report);

// Aligned plain-text table: one row per report with ROUGE-L and the external
// column ("-" where absent).
std::string report_table(const std::vector<EvalReport>& reports);

struct AblationRow {
    std::string config_name;
    EvalReport report;
    CallStats::Snapshot interactions;
    int failure_count = 0;
    std::vector<Prediction> predictions;
};

using ProvidersFactory = std::function<Providers()>;

// Runs the pipeline over the first sample_limit pairs for each named config
// (fresh providers per config so interaction counts are isolated), scores
// each run, and never aborts the matrix: failed samples score 0 and are
// counted in failure_count.
std::vector<AblationRow> run_ablation(const std::vector<QAPair>& dataset,
                                      const std::vector<std::string>& config_names,
                                      std::optional<int> sample_limit,
                                      const ProvidersFactory& factory,
                                      const PipelineOptions& options, int parallelism = 4);

std::string ablation_to_json_text(const std::vector<AblationRow>& rows);

}  // namespace hifi
