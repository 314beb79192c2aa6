// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftsampler/instances.hpp"
#include "liftsampler/rgo.hpp"

namespace liftsampler {

struct VerifyOptions {
  std::int64_t draws = 100'000;
  std::int64_t chain_samples = 100'000;
  std::uint64_t seed = 1;
  int seeds = 3;
};

/// One comparison. `value` passes when value > threshold for p-values and
/// value <= threshold for z-scores; `pass` holds the verdict.
struct VerifyRow {
  std::string label;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string instance;
  std::vector<VerifyRow> rows;

  bool all_pass() const;
};

/// RGO draws vs the naive truncated Gaussian at a fixed input (KS per lifted
/// coordinate, passing on at least 2 of the seeds) and chain moments vs
/// quadrature (within 3 SE). Throws ConfigError for unknown names and
/// UnsupportedError when d > 2.
VerifyReport verify_instance(const std::string& name, const VerifyOptions& options = {});
VerifyReport verify_instance(const InstanceSpec& spec, const VerifyOptions& options = {});

/// Fixed RGO inputs used by verification.
RgoInputConstrained verify_input(const SingleLiftedTarget& target, double eta);
RgoInputComposite verify_input(const DoubleLiftedTarget& target, double eta);

}  // namespace liftsampler
