// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftsampler/lifting.hpp"
#include "liftsampler/rgo.hpp"

namespace liftsampler {

struct SamplerConfig {
  double eta = 1.0;
  double a = 1.0;
  double b = 1.0;
  std::int64_t iterations = 1;
  std::int64_t burn_in = 0;
  std::uint64_t seed = 0;
  std::int64_t proposal_budget = 1'000'000;
  Envelope envelope = Envelope::Certified;
  bool store_lifted = true;

  /// η = 1/d², a = b = d, burn-in max(10 d², 1000).
  static SamplerConfig defaults(Index d);
  void validate() const;
};

/// Current lifted iterate plus running oracle/proposal totals.
struct ChainState {
  Vector point;
  std::int64_t step = 0;
  RgoStats totals;
  RgoStats last;
};

struct StepStats {
  std::int64_t proposals = 0;
  std::int64_t cp_separation_calls = 0;
  std::int64_t cp_subgradient_calls = 0;
};

/// Kept samples (x-coordinates and lift coordinates) for steps
/// burn_in+1 .. iterations, plus per-step statistics for every step.
struct Trace {
  Index dimension = 0;
  Index lift_count = 0;
  SamplerConfig config;
  std::vector<std::int64_t> steps;
  std::vector<Vector> samples;
  std::vector<Vector> lifts;
  std::vector<StepStats> step_stats;
  RgoStats totals;
  double wall_ms = 0.0;
  /// Empty when the run completed; otherwise the message of the error that
  /// stopped it (samples collected so far are kept).
  std::string error;

  bool complete() const { return error.empty(); }
  double mean_proposals() const;
};

/// Seed for chain `index` derived from a base seed through splitmix64.
std::uint64_t chain_seed(std::uint64_t base, std::uint64_t index);

ChainState init_constrained(const SingleLiftedTarget& target, const Vector& x0, Rng& rng);
ChainState init_composite(const DoubleLiftedTarget& target, const Vector& x0, Rng& rng);

/// Gaussian step then RGO step.
ChainState step_constrained(const ChainState& state, const SamplerConfig& config,
                            const SingleLiftedTarget& target, Rng& rng);
ChainState step_composite(const ChainState& state, const SamplerConfig& config,
                          const DoubleLiftedTarget& target, Rng& rng);

/// Runs one chain with rng seeded from config.seed. The lifted target is
/// built with the config's scales. x0 defaults to the origin.
Trace run_constrained(const SamplerConfig& config, const ConstrainedTarget& target,
                      std::optional<Vector> x0 = std::nullopt);
Trace run_composite(const SamplerConfig& config, const CompositeTarget& target,
                    std::optional<Vector> x0 = std::nullopt);

}  // namespace liftsampler
