// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/rgo.hpp"

#include <array>
#include <cmath>
#include <string>

namespace liftsampler {

RgoStats& RgoStats::operator+=(const RgoStats& other) {
  proposals += other.proposals;
  cp_separation_calls += other.cp_separation_calls;
  cp_subgradient_calls += other.cp_subgradient_calls;
  certified_gap = std::max(certified_gap, other.certified_gap);
  cp_retried = cp_retried || other.cp_retried;
  return *this;
}

namespace {

double plus(double v) { return v > 0.0 ? v : 0.0; }

template <typename Solve>
RgoCenter solve_with_retry(const RgoOptions& options, std::int64_t default_budget, Solve solve,
                           bool& retried) {
  const std::int64_t budget = options.cp_budget.value_or(default_budget);
  RgoCenter center = solve(budget);
  retried = false;
  if (center.converged) return center;
  retried = true;
  const CpCalls first = center.calls;
  center = solve(10 * budget);
  center.calls.separation += first.separation;
  center.calls.subgradient += first.subgradient;
  if (!center.converged) {
    throw NumericError("RGO: cutting-plane solve failed to certify its gap (" +
                       std::to_string(center.certified_gap) + ")");
  }
  return center;
}

// Accepts w when log U <= -Θ(w) + P(w); infeasible w has Θ = +∞ and is
// always rejected.
template <typename Potential, typename ProposalPotential>
RgoDraw rejection_loop(const ProposalSpec& spec, Rng& rng, std::int64_t budget, Potential theta,
                       ProposalPotential proposal, RgoStats stats) {
  RadialSampler radial(spec.radial_law());
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::int64_t k = 0; k < budget; ++k) {
    Vector w = sample_proposal(spec, radial, rng);
    ++stats.proposals;
    const double log_u = std::log(unif(rng));
    const double th = theta(w);
    if (!std::isfinite(th)) continue;
    if (log_u <= -th + proposal(w)) return {std::move(w), stats};
  }
  throw NumericError("RGO: proposal budget exhausted");
}

}  // namespace

double rgo_target_gap(double nominal, const RgoOptions& options) {
  if (options.envelope == Envelope::Nominal) return nominal;
  if (!(options.gap_tightening > 0.0) || options.gap_tightening > 1.0) {
    throw PreconditionError("gap tightening must lie in (0, 1]");
  }
  return nominal * options.gap_tightening;
}

// ---------------------------------------------------------------------------
// Constrained
// ---------------------------------------------------------------------------

double zeta_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                 const Vector& x) {
  const double a = target.a();
  const double excess = plus(target.base().f.evaluate(x) / a - (input.s - a * input.eta));
  return ((x - input.y).squaredNorm() + excess * excess) / (2.0 * input.eta);
}

double zeta_lift(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                 const Vector& x) {
  const double a = target.a();
  return std::max(target.base().f.evaluate(x) / a, input.s - a * input.eta);
}

RgoCenter rgo_subproblem_constrained(const SingleLiftedTarget& target,
                                     const RgoInputConstrained& input,
                                     const RgoOptions& options) {
  const ConstrainedTarget& base = target.base();
  if (!base.f.has_subgradient()) {
    throw CapabilityError("constrained RGO needs a subgradient oracle for f");
  }
  if (!(input.eta > 0.0)) throw PreconditionError("RGO step size must be positive");
  const Index d = target.dimension();
  if (input.y.size() != d) throw PreconditionError("RGO input y has wrong dimension");
  const double a = target.a();
  const double eta = input.eta;
  const double floor_t = input.s - a * eta;

  CpProblem problem;
  problem.dimension = d;
  problem.objective_value = [&](const Vector& x) { return zeta_eval(target, input, x); };
  problem.objective_subgradient = [&](const Vector& x) -> Vector {
    Vector g = (x - input.y) / eta;
    const double excess = plus(base.f.evaluate(x) / a - floor_t);
    if (excess > 0.0) g += (excess / (a * eta)) * base.f.subgradient(x);
    return g;
  };
  problem.feasible_set = [&](const Vector& x) { return base.set.separate(x); };
  problem.center = Vector::Zero(d);
  problem.enclosing_radius = base.outer_radius;
  problem.strong_convexity = 1.0 / eta;
  problem.target_gap = rgo_target_gap(1.0 / static_cast<double>(d + 1), options);
  if (base.set.contains(Vector::Zero(d))) problem.known_feasible = Vector::Zero(d);

  problem.iteration_budget = options.cp_budget;

  const CpResult cp = cp_minimize(problem);
  return RgoCenter{concat(cp.point, zeta_lift(target, input, cp.point)), cp.certified_gap,
                   cp.calls, cp.converged};
}

double theta_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                  const Vector& w) {
  if (!target.contains(w)) return kInfinity;
  const Index d = target.dimension();
  const Vector ys = concat(input.y, input.s);
  return target.a() * w[d] + (w - ys).squaredNorm() / (2.0 * input.eta);
}

double p1_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
               const Vector& w, const Vector& center) {
  const double d = static_cast<double>(target.dimension());
  const double a = target.a();
  const double eta = input.eta;
  const double lip = target.base().lipschitz;
  const Vector z = input.z(a);
  const double r = (w - center).norm();
  const double gap = (center - z).norm();
  return (r * r + gap * gap) / (2.0 * eta) -
         std::sqrt(2.0) * (lip + d) / (a * std::sqrt(eta * (d + 1.0))) * (r + gap) -
         6.0 * (lip + d) * (lip + d) / (a * a * (d + 1.0)) + a * input.s - a * a * eta / 2.0;
}

double p1_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
               const Vector& w, const Vector& center, double radius) {
  const double a = target.a();
  const double eta = input.eta;
  const Vector z = input.z(a);
  const double r = (w - center).norm();
  const double gap = (center - z).norm();
  return (r * r + gap * gap) / (2.0 * eta) - (radius / eta) * (r + gap) -
         3.0 * radius * radius / eta + a * input.s - a * a * eta / 2.0;
}

double constrained_envelope_radius(const SingleLiftedTarget& target, double eta, double gap) {
  return (1.0 + target.base().lipschitz / target.a()) * std::sqrt(2.0 * eta * gap);
}

double constrained_proposal_shift(const SingleLiftedTarget& target, double eta) {
  const double d = static_cast<double>(target.dimension());
  return std::sqrt(2.0 * eta / (d + 1.0)) * (1.0 + target.base().lipschitz / target.a());
}

RgoDraw rgo_sample_constrained(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                               Rng& rng, const RgoOptions& options) {
  const bool nominal = options.envelope == Envelope::Nominal;
  if (nominal && target.a() != static_cast<double>(target.dimension())) {
    throw PreconditionError("nominal envelope is calibrated for a = d");
  }
  CpProblem sizing;
  sizing.dimension = target.dimension();
  sizing.enclosing_radius = target.base().outer_radius;
  sizing.strong_convexity = 1.0 / input.eta;
  sizing.target_gap = rgo_target_gap(1.0 / static_cast<double>(target.dimension() + 1), options);

  RgoStats stats;
  const RgoCenter center = solve_with_retry(
      options, cp_default_budget(sizing),
      [&](std::int64_t budget) {
        RgoOptions o = options;
        o.cp_budget = budget;
        return rgo_subproblem_constrained(target, input, o);
      },
      stats.cp_retried);
  stats.cp_separation_calls = center.calls.separation;
  stats.cp_subgradient_calls = center.calls.subgradient;
  stats.certified_gap = center.certified_gap;

  if (nominal) {
    const ProposalSpec spec{center.point, constrained_proposal_shift(target, input.eta), input.eta};
    return rejection_loop(
        spec, rng, options.proposal_budget,
        [&](const Vector& w) { return theta_eval(target, input, w); },
        [&](const Vector& w) { return p1_eval(target, input, w, center.point); }, stats);
  }
  const double radius = constrained_envelope_radius(target, input.eta, center.certified_gap);
  const ProposalSpec spec{center.point, radius, input.eta};
  return rejection_loop(
      spec, rng, options.proposal_budget,
      [&](const Vector& w) { return theta_eval(target, input, w); },
      [&](const Vector& w) { return p1_eval(target, input, w, center.point, radius); }, stats);
}

// ---------------------------------------------------------------------------
// Composite
// ---------------------------------------------------------------------------

double composite_delta(Index d, double eta) {
  return std::sqrt(2.0 * eta / static_cast<double>(d + 2));
}

RgoCenter rgo_subproblem_composite(const DoubleLiftedTarget& target,
                                   const RgoInputComposite& input, const RgoOptions& options) {
  const Index d = target.dimension();
  const Index n = d + 2;
  if (!(input.eta > 0.0)) throw PreconditionError("RGO step size must be positive");
  if (input.yuv.size() != n || input.previous.size() != n) {
    throw PreconditionError("composite RGO input has wrong dimension");
  }
  if (!target.contains(input.previous)) {
    throw PreconditionError("composite RGO needs a feasible previous point");
  }
  const Vector q = input.q(target.b());
  const double r_loc = (input.previous - q).norm();
  if (r_loc == 0.0) return RgoCenter{input.previous, 0.0, {}, true};

  const double eta = input.eta;
  const CompositeLiftSeparator lifted = target.separator(options.separation_tol);
  const std::array<SeparationOracle, 2> parts = {
      SeparationOracle([&lifted](const Vector& p) { return lifted(p); }),
      SeparationOracle([&q, r_loc](const Vector& p) { return separate_ball(q, 2.0 * r_loc, p); }),
  };

  CpProblem problem;
  problem.dimension = n;
  problem.objective_value = [&](const Vector& p) { return (p - q).squaredNorm() / (2.0 * eta); };
  problem.objective_subgradient = [&](const Vector& p) -> Vector { return (p - q) / eta; };
  problem.feasible_set = [&parts](const Vector& p) { return separate_intersection(parts, p); };
  problem.center = q;
  problem.enclosing_radius = 2.0 * r_loc;
  problem.strong_convexity = 1.0 / eta;
  problem.target_gap = rgo_target_gap(1.0 / static_cast<double>(d + 2), options);
  problem.known_feasible = input.previous;
  problem.iteration_budget = options.cp_budget;

  const CpResult cp = cp_minimize(problem);
  return RgoCenter{cp.point, cp.certified_gap, cp.calls, cp.converged};
}

double theta_tilde_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                        const Vector& p) {
  if (!target.contains(p)) return kInfinity;
  const Index d = target.dimension();
  return target.b() * p[d + 1] + (p - input.yuv).squaredNorm() / (2.0 * input.eta);
}

double composite_envelope_radius(double eta, double gap) { return std::sqrt(2.0 * eta * gap); }

double ptilde1_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                    const Vector& p, const Vector& center) {
  return ptilde1_eval(target, input, p, center, composite_delta(target.dimension(), input.eta));
}

double ptilde1_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                    const Vector& p, const Vector& center, double delta) {
  const Index d = target.dimension();
  const double eta = input.eta;
  const double b = target.b();
  const Vector q = input.q(b);
  const double r = (p - center).norm();
  const double gap = (center - q).norm();
  const double v = input.yuv[d + 1];
  return (r * r + gap * gap) / (2.0 * eta) - (delta / eta) * (r + gap) + b * v -
         b * b * eta / 2.0 - delta * delta / eta;
}

RgoDraw rgo_sample_composite(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                             Rng& rng, const RgoOptions& options) {
  const Index d = target.dimension();
  CpProblem sizing;
  sizing.dimension = d + 2;
  sizing.enclosing_radius = std::max(2.0 * input.local_radius(target.b()), 1e-300);
  sizing.strong_convexity = 1.0 / input.eta;
  sizing.target_gap = rgo_target_gap(1.0 / static_cast<double>(d + 2), options);

  RgoStats stats;
  const RgoCenter center = solve_with_retry(
      options, cp_default_budget(sizing),
      [&](std::int64_t budget) {
        RgoOptions o = options;
        o.cp_budget = budget;
        return rgo_subproblem_composite(target, input, o);
      },
      stats.cp_retried);
  stats.cp_separation_calls = center.calls.separation;
  stats.cp_subgradient_calls = center.calls.subgradient;
  stats.certified_gap = center.certified_gap;

  const double delta = options.envelope == Envelope::Nominal
                           ? composite_delta(d, input.eta)
                           : composite_envelope_radius(input.eta, center.certified_gap);
  const ProposalSpec spec{center.point, delta, input.eta};
  return rejection_loop(
      spec, rng, options.proposal_budget,
      [&](const Vector& p) { return theta_tilde_eval(target, input, p); },
      [&](const Vector& p) { return ptilde1_eval(target, input, p, center.point, delta); },
      stats);
}

}  // namespace liftsampler
