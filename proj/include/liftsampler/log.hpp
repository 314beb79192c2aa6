// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <string_view>

namespace liftsampler {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

/// Threshold read once from LIFTSAMPLER_LOG (error|info|debug, default error).
LogLevel log_threshold();

/// Writes one line to stderr when `level` passes the threshold.
void log(LogLevel level, std::string_view message);

}  // namespace liftsampler
