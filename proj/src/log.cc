// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/log.h"

#include <spdlog/sinks/stdout_color_sinks.h>

namespace topicgap {

std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto existing = spdlog::get("topicgap");
    if (existing) return existing;
    auto created = spdlog::stderr_color_mt("topicgap");
    created->set_pattern("[%l] %v");
    return created;
  }();
  return instance;
}

}  // namespace topicgap
