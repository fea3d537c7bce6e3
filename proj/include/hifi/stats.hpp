#pragma once

#include <atomic>

namespace hifi {

// External-interaction counters, incremented by the instrumented clients.
// One instance per pipeline run (or per ablation config).
struct CallStats {
    std::atomic<int> fast_calls{0};
    std::atomic<int> deep_calls{0};
    std::atomic<int> searches{0};
    std::atomic<int> page_fetches{0};
    std::atomic<int> reddit_fetches{0};
    std::atomic<int> network_requests{0};

    struct Snapshot {
        int fast_calls = 0;
        int deep_calls = 0;
        int searches = 0;
        int page_fetches = 0;
        int reddit_fetches = 0;
        int network_requests = 0;

        friend bool operator==(const Snapshot&, const Snapshot&) = default;
    };

    Snapshot snapshot() const {
        return {fast_calls.load(),    deep_calls.load(),     searches.load(),
                page_fetches.load(),  reddit_fetches.load(), network_requests.load()};
    }

    void reset() {
        fast_calls = 0;
        deep_calls = 0;
        searches = 0;
        page_fetches = 0;
        reddit_fetches = 0;
        network_requests = 0;
    }
};

}  // namespace hifi
