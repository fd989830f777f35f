#include "listingforge/log.hpp"

#include <atomic>
#include <mutex>

#include "listingforge/errors.hpp"

namespace lf::log {

namespace {
std::atomic<Level> g_threshold{Level::info};
std::mutex g_mutex;

const char* level_name(Level lvl) {
  switch (lvl) {
    case Level::debug: return "debug";
    case Level::info: return "info";
    case Level::warn: return "warn";
    case Level::error: return "error";
  }
  return "?";
}
}  // namespace

Level threshold() { return g_threshold.load(); }

void set_threshold(Level lvl) { g_threshold.store(lvl); }

Level parse_level(const std::string& name) {
  if (name == "debug") return Level::debug;
  if (name == "info") return Level::info;
  if (name == "warn") return Level::warn;
  if (name == "error") return Level::error;
  throw ConfigError("unknown log level: " + name);
}

void write(Level lvl, const char* fmt, ...) {
  if (lvl < g_threshold.load()) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "[%s] ", level_name(lvl));
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

}  // namespace lf::log
