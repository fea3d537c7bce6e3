#include "hifi/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hifi/config.hpp"
#include "hifi/errors.hpp"
#include "hifi/log.hpp"
#include "hifi/metrics.hpp"

namespace hifi {

using nlohmann::json;

EvalReport evaluate(const std::vector<Prediction>& predictions,
                    const std::vector<QAPair>& references,
                    const std::vector<ExternalScore>* external_scores, std::string config_name) {
    std::map<std::string, const QAPair*> by_id;
    for (const auto& ref : references) by_id.emplace(ref.id, &ref);

    std::map<std::string, double> external;
    if (external_scores) {
        for (const auto& score : *external_scores) {
            if (!external.emplace(score.id, score.score).second) {
                throw DataError("duplicate external score id \"" + score.id + "\"");
            }
        }
    }

    EvalReport report;
    report.config_name = std::move(config_name);
    std::set<std::string> seen;
    for (const auto& prediction : predictions) {
        if (!seen.insert(prediction.id).second) {
            throw DataError("duplicate prediction id \"" + prediction.id + "\"");
        }
        auto it = by_id.find(prediction.id);
        if (it == by_id.end()) {
            throw DataError("prediction id \"" + prediction.id + "\" has no reference");
        }
        SampleScore sample;
        sample.id = prediction.id;
        sample.rouge_l_f1 = rouge_l_f1(prediction.answer, it->second->answer);
        if (auto ext = external.find(prediction.id); ext != external.end()) {
            sample.external = ext->second;
        }
        report.per_sample.push_back(std::move(sample));
    }
    std::sort(report.per_sample.begin(), report.per_sample.end(),
              [](const SampleScore& a, const SampleScore& b) { return a.id < b.id; });

    report.sample_count = static_cast<int>(report.per_sample.size());
    double rouge_sum = 0.0;
    double external_sum = 0.0;
    for (const auto& sample : report.per_sample) {
        rouge_sum += sample.rouge_l_f1;
        if (sample.external) {
            external_sum += *sample.external;
            ++report.external_coverage;
        }
    }
    if (report.sample_count > 0) report.mean_rouge_l = rouge_sum / report.sample_count;
    if (report.external_coverage > 0) report.mean_external = external_sum / report.external_coverage;
    return report;
}

std::string report_to_json_text(const EvalReport& report) {
    json samples = json::array();
    for (const auto& sample : report.per_sample) {
        json entry = {{"id", sample.id}, {"rouge_l_f1", sample.rouge_l_f1}};
        if (sample.external) entry["external_score"] = *sample.external;
        samples.push_back(std::move(entry));
    }
    json doc = {
        {"config_name", report.config_name},
        {"sample_count", report.sample_count},
        {"mean_rouge_l", report.mean_rouge_l},
        {"external_coverage", report.external_coverage},
        {"per_sample", samples},
    };
    if (report.mean_external) doc["mean_external"] = *report.mean_external;
    return doc.dump(2);
}

std::string report_table(const std::vector<EvalReport>& reports) {
    std::size_t name_width = std::string("System Configuration").size();
    for (const auto& report : reports) {
        name_width = std::max(name_width, report.config_name.size());
    }

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width + 2)) << "System Configuration"
        << std::right << std::setw(8) << "Samples" << std::setw(14) << "ROUGE-L (F1)"
        << std::setw(15) << "External (F1)" << "\n";
    out << std::string(name_width + 2 + 8 + 14 + 15, '-') << "\n";
    for (const auto& report : reports) {
        out << std::left << std::setw(static_cast<int>(name_width + 2)) << report.config_name
            << std::right << std::setw(8) << report.sample_count << std::setw(14) << std::fixed
            << std::setprecision(4) << report.mean_rouge_l;
        if (report.mean_external) {
            out << std::setw(15) << std::fixed << std::setprecision(4) << *report.mean_external;
        } else {
            out << std::setw(15) << "-";
        }
        out << "\n";
    }
    return out.str();
}

std::vector<AblationRow> run_ablation(const std::vector<QAPair>& dataset,
                                      const std::vector<std::string>& config_names,
                                      std::optional<int> sample_limit,
                                      const ProvidersFactory& factory,
                                      const PipelineOptions& options, int parallelism) {
    std::size_t take = dataset.size();
    if (sample_limit && *sample_limit >= 0) {
        take = std::min(take, static_cast<std::size_t>(*sample_limit));
    }
    std::vector<QAPair> subset(dataset.begin(), dataset.begin() + static_cast<std::ptrdiff_t>(take));

    std::vector<UserQuery> questions;
    questions.reserve(subset.size());
    for (const auto& pair : subset) questions.push_back({pair.id, pair.question});

    std::vector<AblationRow> rows;
    for (const auto& name : config_names) {
        Providers providers = factory();
        CallStats* stats = providers.stats.get();
        Pipeline pipeline(std::move(providers), named_config(name), name, options);

        AblationRow row;
        row.config_name = name;
        auto results = run_batch(pipeline, questions, parallelism);
        for (const auto& result : results) {
            Prediction prediction;
            prediction.id = result.answer.query_id;
            prediction.answer = result.answer.text;
            for (const auto& citation : result.answer.citations) {
                prediction.citations.push_back(citation.url);
            }
            if (result.failed) ++row.failure_count;
            row.predictions.push_back(std::move(prediction));
        }
        row.report = evaluate(row.predictions, subset, nullptr, name);
        if (stats) row.interactions = stats->snapshot();
        rows.push_back(std::move(row));
        log::info("ablation config " + name + " done (" + std::to_string(subset.size()) + " samples)");
    }
    return rows;
}

std::string ablation_to_json_text(const std::vector<AblationRow>& rows) {
    json doc = json::array();
    for (const auto& row : rows) {
        json samples = json::array();
        for (const auto& sample : row.report.per_sample) {
            json entry = {{"id", sample.id}, {"rouge_l_f1", sample.rouge_l_f1}};
            if (sample.external) entry["external_score"] = *sample.external;
            samples.push_back(std::move(entry));
        }
        json entry = {
            {"config_name", row.config_name},
            {"sample_count", row.report.sample_count},
            {"mean_rouge_l", row.report.mean_rouge_l},
            {"failures", row.failure_count},
            {"interactions",
             {{"fast_calls", row.interactions.fast_calls},
              {"deep_calls", row.interactions.deep_calls},
              {"searches", row.interactions.searches},
              {"page_fetches", row.interactions.page_fetches},
              {"reddit_fetches", row.interactions.reddit_fetches},
              {"network_requests", row.interactions.network_requests}}},
            {"per_sample", samples},
        };
        if (row.report.mean_external) entry["mean_external"] = *row.report.mean_external;
        doc.push_back(std::move(entry));
    }
    return doc.dump(2);
}

}  // namespace hifi
