// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/verify.hpp"

#include <cmath>
#include <cstdio>

#include "liftsampler/harness.hpp"
#include "liftsampler/sampler.hpp"

namespace liftsampler {

bool VerifyReport::all_pass() const {
  for (const VerifyRow& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

RgoInputConstrained verify_input(const SingleLiftedTarget& target, double eta) {
  return RgoInputConstrained{Vector::Zero(target.dimension()), 1.0, eta};
}

RgoInputComposite verify_input(const DoubleLiftedTarget& target, double eta) {
  const Index d = target.dimension();
  const CompositeTarget& base = target.base();
  const Vector x = Vector::Constant(d, 0.25);
  const double s = base.h.evaluate(x) / target.a() + 0.5;
  const double t = (base.f.evaluate(x) + target.a() * s) / target.b() + 0.5;
  const Vector previous = concat(x, s, t);
  const Vector yuv = previous + concat(Vector::Constant(d, 0.05), -0.1, 0.1);
  return RgoInputComposite{yuv, eta, previous};
}

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

template <typename Draw>
void ks_rows(Index width, const VerifyOptions& options, const Vector& z, double eta,
             const MemberPredicate& member, Draw draw, VerifyReport& report) {
  std::vector<int> passes(static_cast<std::size_t>(width), 0);
  std::vector<double> worst(static_cast<std::size_t>(width), 1.0);
  for (int k = 0; k < options.seeds; ++k) {
    Rng rng(chain_seed(options.seed, static_cast<std::uint64_t>(k)));
    Rng naive_rng(chain_seed(options.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(k)));
    std::vector<std::vector<double>> a(static_cast<std::size_t>(width));
    std::vector<std::vector<double>> b(static_cast<std::size_t>(width));
    for (std::int64_t n = 0; n < options.draws; ++n) {
      const Vector w = draw(rng);
      const Vector v = naive_truncated_gaussian(z, eta, member, naive_rng);
      for (Index i = 0; i < width; ++i) {
        a[static_cast<std::size_t>(i)].push_back(w[i]);
        b[static_cast<std::size_t>(i)].push_back(v[i]);
      }
    }
    for (Index i = 0; i < width; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const double p = ks_two_sample(std::move(a[u]), std::move(b[u])).p_value;
      if (p > 0.01) ++passes[u];
      worst[u] = std::min(worst[u], p);
    }
  }
  const int needed = (2 * options.seeds + 2) / 3;
  for (Index i = 0; i < width; ++i) {
    const auto u = static_cast<std::size_t>(i);
    report.rows.push_back({"rgo ks coord " + std::to_string(i + 1) + " min p (" +
                               std::to_string(passes[u]) + "/" + std::to_string(options.seeds) +
                               " seeds > 0.01)",
                           worst[u], 0.01, passes[u] >= needed});
  }
}

void moment_rows(const MomentReport& chain, const MomentReport& exact, VerifyReport& report) {
  for (Index i = 0; i < chain.mean.size(); ++i) {
    const double z = std::abs(chain.mean[i] - exact.mean[i]) / (*chain.mean_se)[i];
    report.rows.push_back({"mean x" + std::to_string(i + 1) + " z-score (ref " +
                               fmt("%.6f", exact.mean[i]) + ")",
                           z, 3.0, z <= 3.0});
  }
  const double z = std::abs(chain.l1_mean - exact.l1_mean) / *chain.l1_se;
  report.rows.push_back({"E|x|_1 z-score (ref " + fmt("%.6f", exact.l1_mean) + ")", z, 3.0,
                         z <= 3.0});
}

SamplerConfig chain_config(const InstanceSpec& spec, const VerifyOptions& options) {
  SamplerConfig c = SamplerConfig::defaults(spec.dimension);
  if (spec.eta) c.eta = *spec.eta;
  c.iterations = c.burn_in + options.chain_samples;
  c.seed = chain_seed(options.seed, 1000);
  c.store_lifted = false;
  return c;
}

}  // namespace

VerifyReport verify_instance(const std::string& name, const VerifyOptions& options) {
  return verify_instance(find_instance(name), options);
}

VerifyReport verify_instance(const InstanceSpec& spec, const VerifyOptions& options) {
  spec.validate();
  if (spec.dimension > 2) throw UnsupportedError("verify supports d <= 2 only");
  VerifyReport report;
  report.instance = spec.name;
  const Target target = build_target(spec);
  const Index d = spec.dimension;
  const double eta = spec.eta.value_or(1.0 / double(d * d));
  const SamplerConfig config = chain_config(spec, options);

  if (const auto* base = std::get_if<ConstrainedTarget>(&target)) {
    const SingleLiftedTarget lifted(*base);
    const RgoInputConstrained input = verify_input(lifted, eta);
    ks_rows(
        d + 1, options, input.z(lifted.a()), eta,
        [&](const Vector& w) { return lifted.contains(w); },
        [&](Rng& rng) { return rgo_sample_constrained(lifted, input, rng).point; }, report);
    const Trace trace = run_constrained(config, *base);
    if (!trace.complete()) throw NumericError(trace.error);
    moment_rows(sample_moments(trace.samples), quadrature_moments(spec, 1e-3), report);
  } else {
    const auto& comp = std::get<CompositeTarget>(target);
    const DoubleLiftedTarget lifted(comp);
    const RgoInputComposite input = verify_input(lifted, eta);
    ks_rows(
        d + 2, options, input.q(lifted.b()), eta,
        [&](const Vector& p) { return lifted.contains(p); },
        [&](Rng& rng) { return rgo_sample_composite(lifted, input, rng).point; }, report);
    const Trace trace = run_composite(config, comp);
    if (!trace.complete()) throw NumericError(trace.error);
    moment_rows(sample_moments(trace.samples),
                quadrature_moments(spec, d == 1 ? 1e-4 : 1e-2), report);
  }
  return report;
}

}  // namespace liftsampler
