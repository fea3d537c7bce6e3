#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hifi/answer.hpp"
#include "hifi/config.hpp"
#include "hifi/errors.hpp"
#include "hifi/html_parser.hpp"
#include "hifi/json_extract.hpp"
#include "hifi/metrics.hpp"
#include "hifi/pipeline.hpp"
#include "hifi/reddit.hpp"
#include "hifi/templates.hpp"
#include "hifi/urls.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// nlohmann::json -> native python objects.
py::object json_to_py(const json& value) {
    switch (value.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(value.get<bool>());
        case json::value_t::number_integer: return py::int_(value.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(value.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(value.get<double>());
        case json::value_t::string: return py::str(value.get<std::string>());
        case json::value_t::array: {
            py::list list;
            for (const auto& item : value) list.append(json_to_py(item));
            return list;
        }
        case json::value_t::object: {
            py::dict dict;
            for (const auto& [key, item] : value.items()) dict[py::str(key)] = json_to_py(item);
            return dict;
        }
        default: return py::none();
    }
}

py::dict section_to_py(const hifi::Section& section) {
    py::dict out;
    out["index"] = section.index;
    out["heading_path"] = section.heading_path;
    out["heading_level"] = section.heading_level;
    out["content"] = section.content;
    out["snippet"] = section.snippet;
    return out;
}

py::dict page_to_py(const hifi::PageDocument& page) {
    py::dict out;
    out["url"] = page.url;
    out["title"] = page.title;
    out["preview"] = page.preview;
    out["kind"] = page.kind == hifi::PageKind::web ? "web" : "reddit";
    py::list sections;
    for (const auto& section : page.sections) sections.append(section_to_py(section));
    out["sections"] = sections;
    return out;
}

py::dict config_to_py(const hifi::PipelineConfig& config) {
    return py::dict(
        py::arg("search_enabled") = config.search_enabled,
        py::arg("rephrase_enabled") = config.rephrase_enabled,
        py::arg("url_filter_enabled") = config.url_filter_enabled,
        py::arg("chunk_filter_enabled") = config.chunk_filter_enabled,
        py::arg("two_turn_enabled") = config.two_turn_enabled,
        py::arg("baseline_mode") = hifi::to_string(config.baseline_mode),
        py::arg("results_per_query") = config.results_per_query,
        py::arg("max_queries") = config.max_queries,
        py::arg("fetch_parallelism") = config.fetch_parallelism,
        py::arg("snippet_chars") = config.snippet_chars,
        py::arg("reddit_k") = config.reddit_k, py::arg("reddit_m1") = config.reddit_m1,
        py::arg("reddit_m2") = config.reddit_m2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hierarchical-filtering retrieval-augmented QA pipeline (C++ core)";

    py::register_exception<hifi::Error>(m, "HifiError");

    m.def("tokenize", [](const std::string& text) { return hifi::tokenize(text); },
          py::arg("text"), "Lowercased alphanumeric-run tokens.");
    m.def("lcs_length",
          [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return hifi::lcs_length(a, b);
          },
          py::arg("a"), py::arg("b"));
    m.def("rouge_l_f1",
          [](const std::string& candidate, const std::string& reference) {
              return hifi::rouge_l_f1(candidate, reference);
          },
          py::arg("candidate"), py::arg("reference"), "ROUGE-L F1 between two texts.");

    m.def("extract_json_array",
          [](const std::string& text) { return json_to_py(hifi::extract_json_array(text)); },
          py::arg("text"), "First valid JSON array embedded in model output.");

    m.def("render_template",
          [](const std::string& id, const std::map<std::string, std::string>& bindings) {
              return hifi::render_template(hifi::template_id_from_string(id), bindings);
          },
          py::arg("template_id"), py::arg("bindings"),
          "Render one of: query-plan, url-filter, chunk-filter, draft, refine, citation, baseline-q.");

    m.def("parse_page",
          [](const std::string& html, const std::string& url, int snippet_chars) {
              return page_to_py(hifi::parse_hierarchical(html, url, snippet_chars));
          },
          py::arg("html"), py::arg("url"), py::arg("snippet_chars") = 200,
          "Parse HTML into header-grouped hierarchical sections.");

    m.def("parse_reddit_page",
          [](const std::string& thread_json, const std::string& url, int k, int m1, int m2,
             int snippet_chars) {
              return page_to_py(hifi::reconstruct_reddit_tree(
                  hifi::parse_reddit_thread(thread_json, url), k, m1, m2, snippet_chars));
          },
          py::arg("thread_json"), py::arg("url"), py::arg("k") = 5, py::arg("m1") = 3,
          py::arg("m2") = 2, py::arg("snippet_chars") = 200,
          "Reconstruct a reddit thread into a truncated section document.");

    m.def("normalize_url", [](const std::string& url) { return hifi::normalize_url(url); },
          py::arg("url"));

    m.def("named_config",
          [](const std::string& name) { return config_to_py(hifi::named_config(name)); },
          py::arg("name"), "One of the seven ablation presets.");
    m.def("named_config_names", [] { return hifi::named_config_names(); });

    m.def("ask",
          [](const std::string& question, const std::string& config_name,
             const std::string& fixtures_dir, const std::string& examples_file,
             const std::string& mode, const std::string& question_id) {
              hifi::ProviderPaths paths;
              paths.fixtures_dir = fixtures_dir;
              hifi::PipelineOptions options;
              if (!examples_file.empty()) {
                  options.examples = hifi::load_fewshot_examples(examples_file);
              }
              hifi::Pipeline pipeline(
                  hifi::make_providers(hifi::run_mode_from_string(mode), paths),
                  hifi::named_config(config_name), config_name, options);
              auto result = pipeline.run({question_id, question});
              if (result.failed) throw hifi::Error(result.error);

              py::dict out;
              out["id"] = result.answer.query_id;
              out["answer"] = result.answer.text;
              py::list citations;
              for (const auto& citation : result.answer.citations) citations.append(citation.url);
              out["citations"] = citations;
              out["planned_queries"] = result.trace.planned_queries;
              out["urls_before_filter"] = result.trace.urls_before_filter;
              out["urls_after_filter"] = result.trace.urls_after_filter;
              out["sections_before_filter"] = result.trace.sections_before_filter;
              out["sections_after_filter"] = result.trace.sections_after_filter;
              return out;
          },
          py::arg("question"), py::arg("config_name") = "final", py::arg("fixtures_dir") = "fixtures",
          py::arg("examples_file") = "", py::arg("mode") = "replay", py::arg("question_id") = "py",
          "Run the pipeline for one question (replay mode by default).");
}
