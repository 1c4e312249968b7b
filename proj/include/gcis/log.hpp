#pragma once

#include <string_view>

namespace gcis::log {

enum class Level { off = 0, info = 1, debug = 2 };

// Read once from GCIS_LOG ("off", "info", "debug" or 0-2); defaults to off.
Level threshold();
void write(Level level, std::string_view message);

inline void info(std::string_view m) { write(Level::info, m); }
inline void debug(std::string_view m) { write(Level::debug, m); }

}  // namespace gcis::log
