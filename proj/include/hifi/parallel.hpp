#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hifi {

// Runs fn(0..count-1) on at most `parallelism` worker threads. The first
// exception is rethrown on the calling thread after all workers join; callers
// that need per-item isolation catch inside fn.
template <typename Fn>
void parallel_for(std::size_t count, int parallelism, Fn&& fn) {
    if (count == 0) return;
    std::size_t workers = static_cast<std::size_t>(parallelism < 1 ? 1 : parallelism);
    if (workers > count) workers = count;

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hifi
