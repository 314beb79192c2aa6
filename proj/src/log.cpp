// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace liftsampler {

LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("LIFTSAMPLER_LOG");
    const std::string v = env ? env : "";
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

void log(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(log_threshold())) return;
  static std::mutex mu;
  static constexpr const char* kTags[] = {"error", "info", "debug"};
  std::lock_guard lock(mu);
  std::cerr << "[liftsampler " << kTags[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace liftsampler
