#include "hifi/trace.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "hifi/errors.hpp"

namespace hifi {

using nlohmann::json;

std::string trace_to_json_text(const RunTrace& t) {
    json transcript = json::array();
    for (const auto& m : t.transcript) {
        transcript.push_back({{"role", m.role}, {"text", m.text}});
    }
    json doc = {
        {"query_id", t.query_id},
        {"config_name", t.config_name},
        {"planned_queries", t.planned_queries},
        {"urls_before_filter", t.urls_before_filter},
        {"urls_after_filter", t.urls_after_filter},
        {"sections_before_filter", t.sections_before_filter},
        {"sections_after_filter", t.sections_after_filter},
        {"transcript", transcript},
        {"answer", t.answer},
        {"citations", t.citations},
        {"wall_time_ms", t.wall_time.count()},
    };
    return doc.dump(2);
}

RunTrace trace_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("trace JSON parse error: ") + e.what());
    }
    RunTrace t;
    t.query_id = doc.value("query_id", "");
    t.config_name = doc.value("config_name", "");
    t.planned_queries = doc.value("planned_queries", std::vector<std::string>{});
    t.urls_before_filter = doc.value("urls_before_filter", 0);
    t.urls_after_filter = doc.value("urls_after_filter", 0);
    t.sections_before_filter = doc.value("sections_before_filter", 0);
    t.sections_after_filter = doc.value("sections_after_filter", 0);
    for (const auto& m : doc.value("transcript", json::array())) {
        t.transcript.push_back({m.value("role", ""), m.value("text", "")});
    }
    t.answer = doc.value("answer", "");
    t.citations = doc.value("citations", std::vector<std::string>{});
    t.wall_time = std::chrono::milliseconds(doc.value("wall_time_ms", std::int64_t{0}));
    return t;
}

void write_trace_file(const RunTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write trace file: " + path);
    out << trace_to_json_text(trace) << "\n";
}

}  // namespace hifi
