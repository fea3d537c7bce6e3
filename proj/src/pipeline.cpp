#include "hifi/pipeline.hpp"

#include <algorithm>

#include "hifi/answer.hpp"
#include "hifi/citations.hpp"
#include "hifi/errors.hpp"
#include "hifi/html_parser.hpp"
#include "hifi/log.hpp"
#include "hifi/parallel.hpp"
#include "hifi/planner.hpp"
#include "hifi/reddit.hpp"
#include "hifi/relevance.hpp"
#include "hifi/strings.hpp"
#include "hifi/urls.hpp"

namespace hifi {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;

    void check(const char* stage) const {
        if (Clock::now() > at) {
            throw Error(std::string("question timed out before ") + stage);
        }
    }
};

void record_transcript(RunTrace& trace, const std::vector<ChatMessage>& transcript) {
    for (const auto& m : transcript) trace.transcript.push_back({to_string(m.role), m.text});
}

}  // namespace

Pipeline::Pipeline(Providers providers, PipelineConfig config, std::string config_name,
                   PipelineOptions options)
    : providers_(std::move(providers)), config_(validate_config(config)),
      config_name_(std::move(config_name)), options_(std::move(options)) {
    if (config_.two_turn_enabled && options_.examples.size() != 3) {
        throw ConfigError("two-turn generation needs exactly 3 few-shot examples, got " +
                          std::to_string(options_.examples.size()));
    }
}

PipelineResult Pipeline::run(const UserQuery& question) const {
    auto start = Clock::now();
    try {
        PipelineResult result = run_or_throw(question);
        result.trace.wall_time =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return result;
    } catch (const std::exception& e) {
        log::error("question \"" + question.id + "\" failed: " + e.what());
        PipelineResult result;
        result.failed = true;
        result.error = e.what();
        result.answer.query_id = question.id;
        result.answer.config_name = config_name_;
        result.trace.query_id = question.id;
        result.trace.config_name = config_name_;
        result.trace.wall_time =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return result;
    }
}

PipelineResult Pipeline::run_or_throw(const UserQuery& question) const {
    if (trim(question.text).empty()) throw Error("question text is empty");

    PipelineResult result;
    RunTrace& trace = result.trace;
    trace.query_id = question.id;
    trace.config_name = config_name_;
    result.answer.query_id = question.id;
    result.answer.config_name = config_name_;

    Gateway& gateway = *providers_.gateway;
    Deadline deadline{Clock::now() + options_.question_timeout};

    // Baseline modes bypass retrieval entirely.
    if (config_.baseline_mode != BaselineMode::none) {
        auto generation = generate_baseline(gateway, question, config_.baseline_mode);
        record_transcript(trace, generation.transcript);
        trace.answer = generation.text;
        result.answer.text = generation.text;
        return result;
    }

    std::vector<SiteContext> sites;
    if (config_.search_enabled) {
        // Stage 1: query planning.
        std::vector<SearchQuery> queries;
        if (config_.rephrase_enabled) {
            queries = plan_queries(gateway, question, config_.max_queries);
        } else {
            queries.push_back({trim(question.text)});
        }
        for (const auto& q : queries) trace.planned_queries.push_back(q.text);
        deadline.check("search");

        // Stage 2: search + merge. Search errors surface and fail the question.
        std::vector<std::vector<SearchHit>> hit_lists;
        for (const auto& q : queries) {
            hit_lists.push_back(providers_.search->search(q, config_.results_per_query));
        }
        std::vector<SearchHit> hits = merge_dedupe(hit_lists);
        trace.urls_before_filter = static_cast<int>(hits.size());
        deadline.check("url filtering");

        // Stage 3: pre-fetch URL filter (fails open).
        if (config_.url_filter_enabled && !hits.empty()) {
            hits = filter_urls(gateway, question, hits);
        }
        trace.urls_after_filter = static_cast<int>(hits.size());
        deadline.check("fetch");

        // Stage 4: fetch + parse, bounded fan-out. Failed pages are skipped.
        std::vector<std::optional<PageDocument>> pages(hits.size());
        parallel_for(hits.size(), config_.fetch_parallelism, [&](std::size_t i) {
            const SearchHit& hit = hits[i];
            try {
                if (is_reddit_url(hit.url)) {
                    std::string raw = providers_.pages->fetch_reddit_thread(hit.url);
                    RedditThread thread = parse_reddit_thread(raw, hit.url);
                    pages[i] = reconstruct_reddit_tree(thread, config_.reddit_k, config_.reddit_m1,
                                                       config_.reddit_m2, config_.snippet_chars);
                } else {
                    std::string html = providers_.pages->fetch_page(hit.url);
                    pages[i] = parse_hierarchical(html, hit.url, config_.snippet_chars);
                }
            } catch (const Error& e) {
                log::warn("skipping " + hit.url + ": " + e.what());
            }
        });
        std::vector<PageDocument> parsed;
        for (auto& page : pages) {
            if (page) parsed.push_back(std::move(*page));
        }
        for (const auto& page : parsed) {
            trace.sections_before_filter += static_cast<int>(page.sections.size());
        }
        deadline.check("section filtering");

        // Stage 5: per-page section filter (fails open per page).
        if (config_.chunk_filter_enabled) {
            std::vector<std::vector<int>> kept_indices(parsed.size());
            parallel_for(parsed.size(), config_.fetch_parallelism, [&](std::size_t i) {
                kept_indices[i] = rank_sections(gateway, question, parsed[i]);
            });
            bool any_kept = std::any_of(kept_indices.begin(), kept_indices.end(),
                                        [](const auto& v) { return !v.empty(); });
            for (std::size_t i = 0; i < parsed.size(); ++i) {
                if (!any_kept && !parsed[i].sections.empty()) {
                    // Every page came back empty: keep each page's first
                    // section so generation still sees retrieved context.
                    sites.push_back(apply_filter(parsed[i], {parsed[i].sections.front().index}));
                } else if (!kept_indices[i].empty()) {
                    sites.push_back(apply_filter(parsed[i], kept_indices[i]));
                }
            }
        } else {
            for (const auto& page : parsed) {
                std::vector<int> all;
                all.reserve(page.sections.size());
                for (const auto& section : page.sections) all.push_back(section.index);
                sites.push_back(apply_filter(page, all));
            }
        }
        for (const auto& site : sites) {
            trace.sections_after_filter += static_cast<int>(site.kept_sections.size());
        }
        deadline.check("generation");
    }

    // Stage 6: generation. With no usable context (search disabled by a
    // custom config, zero hits, or every page dropped) the draft falls back
    // to the question-only prompt.
    AssembledContext context = assemble_web_content(sites);
    GenerationResult generation;
    if (context.index_to_url.empty()) {
        generation = generate_baseline(gateway, question, BaselineMode::prompt_only);
        if (config_.two_turn_enabled) {
            generation = refine_turn(gateway, std::move(generation), options_.examples);
        }
    } else if (config_.two_turn_enabled) {
        generation = generate_two_turn(gateway, question, context, options_.examples);
    } else {
        generation = generate_single_turn(gateway, question, context);
    }
    record_transcript(trace, generation.transcript);
    trace.answer = generation.text;
    result.answer.text = generation.text;
    deadline.check("citation verification");

    // Stage 7: post-hoc citations, only when numbered sources exist.
    if (!context.index_to_url.empty() && !result.answer.text.empty()) {
        result.answer.citations = verify_citations(gateway, result.answer.text, context);
        for (const auto& citation : result.answer.citations) {
            trace.citations.push_back(citation.url);
        }
    }
    return result;
}

std::vector<PipelineResult> run_batch(const Pipeline& pipeline,
                                      const std::vector<UserQuery>& questions, int parallelism) {
    std::vector<PipelineResult> results(questions.size());
    parallel_for(questions.size(), parallelism,
                 [&](std::size_t i) { results[i] = pipeline.run(questions[i]); });
    return results;
}

}  // namespace hifi
