#include "exsplice/log.hpp"

#include <cstdio>
#include <mutex>
#include <string>

namespace exsplice::logging {

namespace {
const char* level_name(Level l) {
  switch (l) {
    case Level::debug: return "DEBUG";
    case Level::info: return "INFO";
    case Level::warn: return "WARN";
    case Level::error: return "ERROR";
  }
  return "INFO";
}
std::mutex g_mutex;
}  // namespace

void log(Level level, std::string_view stage, std::string_view message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "%s\t%.*s\t%.*s\n", level_name(level), static_cast<int>(stage.size()),
               stage.data(), static_cast<int>(message.size()), message.data());
}

}  // namespace exsplice::logging
