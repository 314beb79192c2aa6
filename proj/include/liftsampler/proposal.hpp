// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "liftsampler/types.hpp"

namespace liftsampler {

/// Radial density ∝ r^power · exp(-(r - shift)² / (2 step)) on (0, ∞).
struct RadialLaw {
  double power = 0.0;
  double shift = 0.0;
  double step = 1.0;

  void validate() const;
  double log_density(double r) const;
  double log_density_derivative(double r) const;
  /// -power / r² - 1 / step; negative everywhere on (0, ∞).
  double log_density_second_derivative(double r) const;
  /// (shift + sqrt(shift² + 4 power step)) / 2.
  double mode() const;
};

/// Λ(w) ∝ exp(-(||w - center|| - radial_shift)² / (2 step)) on R^n.
struct ProposalSpec {
  Vector center;
  double radial_shift = 0.0;
  double step = 1.0;

  Index dimension() const { return center.size(); }
  RadialLaw radial_law() const;
  void validate() const;
};

/// Adaptive rejection sampler (tangent upper hull, chord squeeze) for one
/// RadialLaw. Keeps its hull between draws, so reuse it for repeated draws
/// from the same law. Not thread-safe.
class RadialSampler {
 public:
  explicit RadialSampler(RadialLaw law);

  double sample(Rng& rng);
  const RadialLaw& law() const { return law_; }
  std::size_t hull_size() const { return points_.size(); }

  static constexpr std::size_t kMaxPoints = 64;
  static constexpr int kMaxTrials = 100000;

 private:
  struct Abscissa {
    double x;
    double h;
    double dh;
  };
  struct Piece {
    double lo;
    double hi;
    double log_mass;
  };

  void insert(double x);
  void rebuild();
  double envelope(std::size_t piece, double x) const;
  double squeeze(double x) const;

  RadialLaw law_;
  std::vector<Abscissa> points_;
  std::vector<Piece> pieces_;
  std::vector<double> cumulative_;
};

/// Uniform direction on S^{n-1} by normalizing a standard Gaussian vector.
Vector sample_unit_sphere(Index n, Rng& rng);

/// One exact draw from `law` (builds a fresh hull).
double ars_sample(const RadialLaw& law, Rng& rng);

/// w = center + r θ, θ uniform on the sphere, r from the radial law with
/// power n - 1.
Vector sample_proposal(const ProposalSpec& spec, Rng& rng);
Vector sample_proposal(const ProposalSpec& spec, RadialSampler& radial, Rng& rng);

/// Inverse CDF of the tail law ∝ e^{-rate t} 1{t >= lower}: lower - ln(1-u)/rate.
double inverse_exp_tail(double rate, double lower, double u);

}  // namespace liftsampler
