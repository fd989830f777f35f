#pragma once

#include <cstdarg>
#include <cstdio>
#include <string>

namespace lf::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

Level threshold();
void set_threshold(Level lvl);
Level parse_level(const std::string& name);  // throws ConfigError on unknown name

void write(Level lvl, const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 2, 3)))
#endif
    ;

#define LF_DEBUG(...) ::lf::log::write(::lf::log::Level::debug, __VA_ARGS__)
#define LF_INFO(...) ::lf::log::write(::lf::log::Level::info, __VA_ARGS__)
#define LF_WARN(...) ::lf::log::write(::lf::log::Level::warn, __VA_ARGS__)
#define LF_ERROR(...) ::lf::log::write(::lf::log::Level::error, __VA_ARGS__)

}  // namespace lf::log
