// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>

#include "liftsampler/cutting_plane.hpp"
#include "liftsampler/lifting.hpp"
#include "liftsampler/proposal.hpp"

namespace liftsampler {

// Restricted Gaussian oracles. Given the Gaussian-step output, each oracle
// draws exactly from N(center, η I) restricted to the lifted set by
// rejection from a shifted-radial proposal centred at an approximate
// projection found with the cutting-plane solver.

struct RgoStats {
  std::int64_t proposals = 0;
  std::int64_t cp_separation_calls = 0;
  std::int64_t cp_subgradient_calls = 0;
  double certified_gap = 0.0;
  bool cp_retried = false;

  RgoStats& operator+=(const RgoStats& other);
};

/// Nominal: envelope radius from the nominal gap 1/(d+1) (resp. 1/(d+2)).
/// Certified: cutting plane run to `gap_tightening` times that gap, radius
/// taken from the gap it actually certifies.
enum class Envelope { Nominal, Certified };

struct RgoOptions {
  std::int64_t proposal_budget = 1'000'000;
  Envelope envelope = Envelope::Certified;
  double gap_tightening = 1e-4;
  /// Tolerance of the epigraph projections used inside separation oracles.
  double separation_tol = 1e-12;
  /// Overrides the cutting-plane iteration budget when set.
  std::optional<std::int64_t> cp_budget;
};

/// Approximate projection returned by an RGO subproblem.
struct RgoCenter {
  Vector point;
  double certified_gap = 0.0;
  CpCalls calls;
  bool converged = false;
};

struct RgoDraw {
  Vector point;
  RgoStats stats;
};

/// Cutting-plane target gap for a nominal gap under the chosen envelope.
double rgo_target_gap(double nominal, const RgoOptions& options);

// ---------------------------------------------------------------------------
// Constrained (single lifting): target N(z, η I)|_Q with z = (y, s - a η).
// ---------------------------------------------------------------------------

struct RgoInputConstrained {
  Vector y;
  double s = 0.0;
  double eta = 1.0;

  /// z = (y, s - a η).
  Vector z(double a) const { return concat(y, s - a * eta); }
};

/// ζ(x) = ||x - y||²/(2η) + [f(x)/a - (s - aη)]₊² / (2η).
double zeta_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                 const Vector& x);

/// t(x) = max{f(x)/a, s - aη}, the optimal lift for a given x.
double zeta_lift(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                 const Vector& x);

/// Minimizes ζ over K to gap 1/(d+1) and lifts the result. A converged
/// result lies within (1 + L/a) sqrt(2η/(d+1)) of proj_Q(z).
RgoCenter rgo_subproblem_constrained(const SingleLiftedTarget& target,
                                     const RgoInputConstrained& input,
                                     const RgoOptions& options = {});

/// Θ(w) = I_Q(w) + a t + ||w - (y, s)||² / (2η).
double theta_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                  const Vector& w);

/// Proposal potential centred at `center` (the approximate projection):
/// [||w-w̃||² + ||w̃-z||²]/(2η) - √2 (L+d)/(a sqrt(η(d+1))) (||w-w̃|| + ||w̃-z||)
///   - 6 (L+d)² / (a² (d+1)) + a s - a² η / 2.
double p1_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
               const Vector& w, const Vector& center);

/// Same shape with a general radius κ bounding ||w̃ - proj_Q(z)||:
/// [||w-w̃||² + ||w̃-z||²]/(2η) - (κ/η)(||w-w̃|| + ||w̃-z||) - 3κ²/η + a s - a²η/2.
/// Equals the form above when a = d and κ = sqrt(2η/(d+1)) (1 + L/a).
double p1_eval(const SingleLiftedTarget& target, const RgoInputConstrained& input,
               const Vector& w, const Vector& center, double radius);

/// Radial shift of the constrained proposal: sqrt(2η/(d+1)) (1 + L/a).
double constrained_proposal_shift(const SingleLiftedTarget& target, double eta);

/// (1 + L/a) sqrt(2η gap).
double constrained_envelope_radius(const SingleLiftedTarget& target, double eta, double gap);

/// The nominal envelope requires a = d.
RgoDraw rgo_sample_constrained(const SingleLiftedTarget& target, const RgoInputConstrained& input,
                               Rng& rng, const RgoOptions& options = {});

// ---------------------------------------------------------------------------
// Composite (double lifting): target N(q, η I)|_Q̃ with q = (y, u, v - b η).
// ---------------------------------------------------------------------------

struct RgoInputComposite {
  Vector yuv;       // (y, u, v) in R^{d+2}
  double eta = 1.0;
  Vector previous;  // previous RGO output, a point of Q̃

  Vector q(double b) const {
    Vector out = yuv;
    out[out.size() - 1] -= b * eta;
    return out;
  }
  double local_radius(double b) const { return (previous - q(b)).norm(); }
};

/// sqrt(2η/(d+2)).
double composite_delta(Index d, double eta);

/// Minimizes ||p - q||²/(2η) over Q̃ ∩ B(q, 2 r_loc) to gap 1/(d+2). When
/// r_loc = 0 the previous point is returned unchanged.
RgoCenter rgo_subproblem_composite(const DoubleLiftedTarget& target,
                                   const RgoInputComposite& input,
                                   const RgoOptions& options = {});

/// Θ̃(p) = I_Q̃(p) + b t + ||p - (y, u, v)||² / (2η).
double theta_tilde_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                        const Vector& p);

/// [||p-p̃||² + ||p̃-q||²]/(2η) - (δ/η)(||p-p̃|| + ||p̃-q||) + b v - b²η/2 - δ²/η.
double ptilde1_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                    const Vector& p, const Vector& center);
/// Same with δ given explicitly.
double ptilde1_eval(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                    const Vector& p, const Vector& center, double delta);

/// sqrt(2η gap).
double composite_envelope_radius(double eta, double gap);

RgoDraw rgo_sample_composite(const DoubleLiftedTarget& target, const RgoInputComposite& input,
                             Rng& rng, const RgoOptions& options = {});

}  // namespace liftsampler
