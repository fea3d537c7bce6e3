#include "hifi/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace hifi::log {

namespace {

Level initial_level() {
    const char* env = std::getenv("HIFI_LOG_LEVEL");
    if (!env) return Level::warn;
    std::string v(env);
    if (v == "debug") return Level::debug;
    if (v == "info") return Level::info;
    if (v == "warn") return Level::warn;
    if (v == "error") return Level::error;
    return Level::warn;
}

std::atomic<Level>& level_ref() {
    static std::atomic<Level> current{initial_level()};
    return current;
}

const char* tag(Level level) {
    switch (level) {
        case Level::debug: return "debug";
        case Level::info: return "info";
        case Level::warn: return "warn";
        case Level::error: return "error";
    }
    return "?";
}

}  // namespace

void set_level(Level level) { level_ref().store(level); }

Level level() { return level_ref().load(); }

void emit(Level level, const std::string& message) {
    if (level < level_ref().load()) return;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[hifi:" << tag(level) << "] " << message << "\n";
}

}  // namespace hifi::log
