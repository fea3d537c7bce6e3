#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace hifi {

struct TraceMessage {
    std::string role;  // "user" or "model"
    std::string text;

    friend bool operator==(const TraceMessage&, const TraceMessage&) = default;
};

// Per-question record of what the pipeline did: planned queries, URL and
// section reduction counts, the generation transcript, and the outcome.
struct RunTrace {
    std::string query_id;
    std::string config_name;
    std::vector<std::string> planned_queries;
    int urls_before_filter = 0;
    int urls_after_filter = 0;
    int sections_before_filter = 0;
    int sections_after_filter = 0;
    std::vector<TraceMessage> transcript;
    std::string answer;
    std::vector<std::string> citations;
    std::chrono::milliseconds wall_time{0};
};

// Serialization used for trace files. wall_time_ms is a top-level key so
// consumers can drop it when comparing runs.
std::string trace_to_json_text(const RunTrace& trace);
RunTrace trace_from_json_text(const std::string& text);

void write_trace_file(const RunTrace& trace, const std::string& path);

}  // namespace hifi
