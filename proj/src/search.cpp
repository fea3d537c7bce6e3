#include "hifi/search.hpp"

#include <fstream>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"
#include "hifi/hashing.hpp"
#include "hifi/log.hpp"
#include "hifi/templates.hpp"
#include "hifi/urls.hpp"

namespace hifi {

using nlohmann::json;

ReplaySearchClient::ReplaySearchClient(std::filesystem::path dir, std::shared_ptr<CallStats> stats)
    : dir_(std::move(dir)), stats_(std::move(stats)) {}

std::filesystem::path ReplaySearchClient::fixture_path(const std::filesystem::path& dir,
                                                       const std::string& query_text) {
    return dir / (sha256_hex(query_text) + ".json");
}

std::vector<SearchHit> ReplaySearchClient::search(const SearchQuery& query, int n) {
    if (stats_) stats_->searches.fetch_add(1);
    auto path = fixture_path(dir_, query.text);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ReplayMissError("no search fixture for query \"" + query.text + "\" (" + path.string() + ")");
    }
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_array()) {
        throw Error("corrupt search fixture: " + path.string());
    }
    std::vector<SearchHit> hits;
    for (const auto& item : doc) {
        if (static_cast<int>(hits.size()) >= n) break;
        SearchHit hit;
        hit.url = item.value("url", "");
        hit.title = item.value("title", "");
        hit.preview = item.value("preview", "");
        hit.source_query = query.text;
        hit.rank = static_cast<int>(hits.size()) + 1;
        if (hit.url.empty()) continue;
        hits.push_back(std::move(hit));
    }
    return hits;
}

RecordSearchClient::RecordSearchClient(std::shared_ptr<SearchClient> live, std::filesystem::path dir,
                                       std::shared_ptr<CallStats> stats)
    : live_(std::move(live)), dir_(std::move(dir)), stats_(std::move(stats)) {}

std::vector<SearchHit> RecordSearchClient::search(const SearchQuery& query, int n) {
    auto path = ReplaySearchClient::fixture_path(dir_, query.text);
    if (std::filesystem::exists(path)) {
        return ReplaySearchClient(dir_, stats_).search(query, n);
    }
    if (stats_) stats_->searches.fetch_add(1);
    auto hits = live_->search(query, n);

    std::lock_guard<std::mutex> lock(write_mu_);
    if (!std::filesystem::exists(path)) {
        std::filesystem::create_directories(dir_);
        json doc = json::array();
        for (const auto& hit : hits) {
            doc.push_back({{"url", hit.url}, {"title", hit.title}, {"preview", hit.preview}});
        }
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write search fixture: " + path.string());
        out << doc.dump(2) << "\n";
    }
    return hits;
}

std::vector<SearchHit> merge_dedupe(const std::vector<std::vector<SearchHit>>& hit_lists) {
    std::vector<SearchHit> merged;
    std::set<std::string> seen;
    for (const auto& list : hit_lists) {
        for (const auto& hit : list) {
            if (seen.insert(normalize_url(hit.url)).second) merged.push_back(hit);
        }
    }
    return merged;
}

std::string serialize_search_results(const std::vector<SearchHit>& hits) {
    std::string out;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i) out += "\n";
        out += std::to_string(i + 1) + ". " + hits[i].url + " \xE2\x80\x94 " + hits[i].title +
               " \xE2\x80\x94 " + hits[i].preview;
    }
    return out;
}

std::vector<SearchHit> filter_urls(Gateway& gateway, const UserQuery& question,
                                   const std::vector<SearchHit>& hits) {
    if (hits.empty()) return {};

    std::string prompt = render_template(TemplateId::url_filter,
                                         {{"USER_QUESTION", question.text},
                                          {"SEARCH_RESULT", serialize_search_results(hits)}});
    auto array = gateway.complete_json_array(ModelTier::fast, {{Role::user, prompt}});
    if (!array) {
        log::warn("url filter unavailable for \"" + question.id + "\"; keeping all " +
                  std::to_string(hits.size()) + " hits");
        return hits;
    }

    std::unordered_map<std::string, std::size_t> by_url;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        by_url.emplace(normalize_url(hits[i].url), i);
    }

    std::vector<SearchHit> kept;
    std::set<std::string> already;
    for (const auto& element : *array) {
        if (!element.is_string()) {
            log::warn("url filter returned a non-string element; ignoring it");
            continue;
        }
        std::string normalized = normalize_url(element.get<std::string>());
        auto it = by_url.find(normalized);
        if (it == by_url.end()) {
            log::warn("url filter returned a URL outside the candidate set: " +
                      element.get<std::string>());
            continue;
        }
        if (already.insert(normalized).second) kept.push_back(hits[it->second]);
    }
    return kept;
}

}  // namespace hifi
