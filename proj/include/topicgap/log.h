// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_LOG_H_
#define TOPICGAP_LOG_H_

#include <spdlog/spdlog.h>

namespace topicgap {

// All library warnings go through the "topicgap" logger so callers (and
// tests) can redirect or capture them.
std::shared_ptr<spdlog::logger> logger();

template <typename... Args>
void Warn(fmt::format_string<Args...> format, Args&&... args) {
  logger()->warn(format, std::forward<Args>(args)...);
}

template <typename... Args>
void Info(fmt::format_string<Args...> format, Args&&... args) {
  logger()->info(format, std::forward<Args>(args)...);
}

}  // namespace topicgap

#endif  // TOPICGAP_LOG_H_
