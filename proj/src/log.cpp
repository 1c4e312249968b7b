#include "gcis/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace gcis::log {

Level threshold() {
  static const Level level = [] {
    const char* env = std::getenv("GCIS_LOG");
    if (env == nullptr) return Level::off;
    const std::string v(env);
    if (v == "debug" || v == "2") return Level::debug;
    if (v == "info" || v == "1") return Level::info;
    return Level::off;
  }();
  return level;
}

void write(Level level, std::string_view message) {
  if (level == Level::off || static_cast<int>(level) > static_cast<int>(threshold())) return;
  std::clog << "[gcis] " << message << '\n';
}

}  // namespace gcis::log
