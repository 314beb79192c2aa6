// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace liftsampler {

SamplerConfig SamplerConfig::defaults(Index d) {
  const double dd = static_cast<double>(d);
  SamplerConfig c;
  c.eta = 1.0 / (dd * dd);
  c.a = dd;
  c.b = dd;
  c.burn_in = std::max<std::int64_t>(10 * d * d, 1000);
  c.iterations = c.burn_in + 1000;
  return c;
}

void SamplerConfig::validate() const {
  if (!(eta > 0.0)) throw PreconditionError("eta must be positive");
  if (!(a > 0.0) || !(b > 0.0)) throw PreconditionError("lifting scales must be positive");
  if (iterations <= 0) throw PreconditionError("iterations must be positive");
  if (burn_in < 0 || burn_in >= iterations) {
    throw PreconditionError("burn_in must lie in [0, iterations)");
  }
  if (proposal_budget <= 0) throw PreconditionError("proposal budget must be positive");
}

double Trace::mean_proposals() const {
  if (step_stats.empty()) return 0.0;
  return static_cast<double>(totals.proposals) / static_cast<double>(step_stats.size());
}

std::uint64_t chain_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + index + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

Vector gaussian_step(const Vector& center, double eta, Rng& rng) {
  std::normal_distribution<double> normal;
  const double sd = std::sqrt(eta);
  Vector out = center;
  for (Index i = 0; i < out.size(); ++i) out[i] += sd * normal(rng);
  return out;
}

RgoOptions options_from(const SamplerConfig& config) {
  RgoOptions o;
  o.proposal_budget = config.proposal_budget;
  o.envelope = config.envelope;
  return o;
}

void record(const SamplerConfig& config, const ChainState& state, Index d, Trace& trace) {
  trace.step_stats.push_back(
      {state.last.proposals, state.last.cp_separation_calls, state.last.cp_subgradient_calls});
  if (state.step <= config.burn_in) return;
  trace.steps.push_back(state.step);
  trace.samples.push_back(drop_lift(state.point, d));
  if (config.store_lifted) trace.lifts.push_back(state.point.tail(state.point.size() - d));
}

template <typename Target, typename Init, typename Step>
Trace run_chain(const SamplerConfig& config, const Target& target, const Vector& x0, Init init,
                Step step) {
  const auto start = std::chrono::steady_clock::now();
  const Index d = target.dimension();
  Trace trace;
  trace.dimension = d;
  trace.lift_count = target.lifted_dimension() - d;
  trace.config = config;
  const auto kept = static_cast<std::size_t>(config.iterations - config.burn_in);
  trace.samples.reserve(kept);
  trace.steps.reserve(kept);
  if (config.store_lifted) trace.lifts.reserve(kept);
  trace.step_stats.reserve(static_cast<std::size_t>(config.iterations));

  Rng rng(config.seed);
  ChainState state = init(target, x0, rng);
  try {
    while (state.step < config.iterations) {
      state = step(state, config, target, rng);
      if (!target.contains(state.point)) {
        throw NumericError("chain produced an infeasible lifted iterate");
      }
      record(config, state, d, trace);
    }
    trace.totals = state.totals;
  } catch (const Error& e) {
    trace.error = e.what();
    for (const StepStats& s : trace.step_stats) {
      trace.totals.proposals += s.proposals;
      trace.totals.cp_separation_calls += s.cp_separation_calls;
      trace.totals.cp_subgradient_calls += s.cp_subgradient_calls;
    }
  }
  trace.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return trace;
}

}  // namespace

ChainState init_constrained(const SingleLiftedTarget& target, const Vector& x0, Rng& rng) {
  const ConstrainedTarget& base = target.base();
  if (x0.size() != target.dimension()) throw PreconditionError("x0 has wrong dimension");
  if (!base.set.contains(x0)) throw PreconditionError("x0 must lie in K");
  const double a = target.a();
  const double t0 = inverse_exp_tail(a, base.f.evaluate(x0) / a, uniform01(rng));
  return ChainState{concat(x0, t0), 0, {}, {}};
}

ChainState init_composite(const DoubleLiftedTarget& target, const Vector& x0, Rng& rng) {
  const CompositeTarget& base = target.base();
  if (x0.size() != target.dimension()) throw PreconditionError("x0 has wrong dimension");
  const double a = target.a();
  const double b = target.b();
  const double s0 = inverse_exp_tail(a, base.h.evaluate(x0) / a, uniform01(rng));
  const double t0 = inverse_exp_tail(b, (base.f.evaluate(x0) + a * s0) / b, uniform01(rng));
  return ChainState{concat(x0, s0, t0), 0, {}, {}};
}

ChainState step_constrained(const ChainState& state, const SamplerConfig& config,
                            const SingleLiftedTarget& target, Rng& rng) {
  const Index d = target.dimension();
  const Vector ys = gaussian_step(state.point, config.eta, rng);
  const RgoInputConstrained input{ys.head(d), ys[d], config.eta};
  RgoDraw draw = rgo_sample_constrained(target, input, rng, options_from(config));
  ChainState next{std::move(draw.point), state.step + 1, state.totals, draw.stats};
  next.totals += draw.stats;
  return next;
}

ChainState step_composite(const ChainState& state, const SamplerConfig& config,
                          const DoubleLiftedTarget& target, Rng& rng) {
  const RgoInputComposite input{gaussian_step(state.point, config.eta, rng), config.eta,
                                state.point};
  RgoDraw draw = rgo_sample_composite(target, input, rng, options_from(config));
  ChainState next{std::move(draw.point), state.step + 1, state.totals, draw.stats};
  next.totals += draw.stats;
  return next;
}

Trace run_constrained(const SamplerConfig& config, const ConstrainedTarget& target,
                      std::optional<Vector> x0) {
  config.validate();
  const SingleLiftedTarget lifted(target, config.a);
  return run_chain(config, lifted, x0.value_or(Vector::Zero(target.dimension)),
                   init_constrained, step_constrained);
}

Trace run_composite(const SamplerConfig& config, const CompositeTarget& target,
                    std::optional<Vector> x0) {
  config.validate();
  const DoubleLiftedTarget lifted(target, config.a, config.b);
  return run_chain(config, lifted, x0.value_or(Vector::Zero(target.dimension)), init_composite,
                   step_composite);
}

}  // namespace liftsampler
