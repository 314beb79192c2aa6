// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <ostream>
#include <string>

#include "liftsampler/sampler.hpp"

namespace liftsampler {

/// Header `step,x1..xd,lift1[,lift2]`, one row per kept sample, values
/// printed with %.17g so files round-trip exactly.
void write_csv(const Trace& trace, std::ostream& out);
void write_csv(const Trace& trace, const std::string& path);

}  // namespace liftsampler
