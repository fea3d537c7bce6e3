#pragma once

#include <string>

namespace hifi::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

// Minimum level actually emitted; HIFI_LOG_LEVEL=debug|info|warn|error
// overrides the default (warn).
void set_level(Level level);
Level level();

void emit(Level level, const std::string& message);

inline void debug(const std::string& message) { emit(Level::debug, message); }
inline void info(const std::string& message) { emit(Level::info, message); }
inline void warn(const std::string& message) { emit(Level::warn, message); }
inline void error(const std::string& message) { emit(Level::error, message); }

}  // namespace hifi::log
