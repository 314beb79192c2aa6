// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "liftsampler/lifting.hpp"

namespace liftsampler {

using MemberPredicate = std::function<bool(const Vector&)>;

/// Exact draw from N(z, η I) restricted to `member` by plain resampling.
/// `tries`, when given, receives the number of Gaussian draws used.
Vector naive_truncated_gaussian(const Vector& z, double eta, const MemberPredicate& member,
                                Rng& rng, std::int64_t max_tries = 10'000'000,
                                std::int64_t* tries = nullptr);

struct MomentReport {
  std::int64_t count = 0;
  Vector mean;
  Vector variance;
  double l1_mean = 0.0;
  /// Standard errors; set for sample estimates only.
  std::optional<Vector> mean_se;
  std::optional<Vector> variance_se;
  std::optional<double> l1_se;
};

/// Sample moments with batch-means standard errors (about sqrt(N) batches),
/// so autocorrelated chain output is handled.
MomentReport sample_moments(const std::vector<Vector>& samples);

/// Composite Simpson moments of ν on [-w, w]^d (w defaults to the outer
/// radius). The step is shrunk to divide 1/4. Exact boundaries only when K
/// is that box. d <= 2.
MomentReport quadrature_moments(const ConstrainedTarget& target, double step,
                                std::optional<double> half_width = std::nullopt);
/// Composite Simpson moments of ν̃ on [-half_width, half_width]^d. d <= 2.
MomentReport quadrature_moments(const CompositeTarget& target, double step,
                                double half_width = 10.0);

struct InstanceSpec;
/// Moments for a registry-style instance with the set boundary resolved
/// exactly: box via the grid above, 2D ball in polar coordinates.
MomentReport quadrature_moments(const InstanceSpec& spec, double step);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Q_KS(λ) = 2 Σ_{j>=1} (-1)^{j-1} exp(-2 j² λ²).
double kolmogorov_survival(double lambda);

}  // namespace liftsampler
