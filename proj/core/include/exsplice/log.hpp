#pragma once

#include <string_view>

namespace exsplice::logging {

enum class Level { debug, info, warn, error };

// Emits "LEVEL\tstage\tmessage" on standard error.
void log(Level level, std::string_view stage, std::string_view message);

inline void info(std::string_view stage, std::string_view message) {
  log(Level::info, stage, message);
}
inline void warn(std::string_view stage, std::string_view message) {
  log(Level::warn, stage, message);
}
inline void error(std::string_view stage, std::string_view message) {
  log(Level::error, stage, message);
}

}  // namespace exsplice::logging
