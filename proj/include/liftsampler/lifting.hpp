// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <limits>
#include <optional>

#include "liftsampler/oracle.hpp"

namespace liftsampler {

/// ν ∝ exp(-f) 1_K with B(0) ⊆ K ⊆ R·B(0) and f L-Lipschitz on K.
struct ConstrainedTarget {
  FunctionOracle f;
  SetOracle set;
  Index dimension = 0;
  double lipschitz = 0.0;
  double outer_radius = 0.0;

  void validate() const;
};

/// π ∝ exp(-a t) on Q = {(x, t) : x ∈ K, f(x) <= a t}. The x-marginal of π is ν.
class SingleLiftedTarget {
 public:
  /// Scale defaults to a = d.
  explicit SingleLiftedTarget(ConstrainedTarget base, std::optional<double> a = std::nullopt);

  const ConstrainedTarget& base() const { return base_; }
  double a() const { return a_; }
  Index dimension() const { return base_.dimension; }
  Index lifted_dimension() const { return base_.dimension + 1; }

  bool contains(const Vector& w) const;
  double potential(const Vector& w) const;
  ConstrainedLiftSeparator separator(EpigraphAccess access = EpigraphAccess::Auto,
                                     double tol = 1e-12) const;

 private:
  ConstrainedTarget base_;
  double a_;
};

/// ν̃ ∝ exp(-f - h) on R^d, f and h reached through different oracles.
struct CompositeTarget {
  FunctionOracle f;
  FunctionOracle h;
  Index dimension = 0;
  double lipschitz_f = 0.0;
  double lipschitz_h = 0.0;
  CompositeCase oracle_case = CompositeCase::SubgradProx;

  void validate() const;
};

/// π̃ ∝ exp(-b t) on Q̃ = {(x, s, t) : h(x) <= a s, f(x) + a s <= b t}.
class DoubleLiftedTarget {
 public:
  /// Scales default to a = b = d.
  explicit DoubleLiftedTarget(CompositeTarget base, std::optional<double> a = std::nullopt,
                              std::optional<double> b = std::nullopt);

  const CompositeTarget& base() const { return base_; }
  double a() const { return a_; }
  double b() const { return b_; }
  Index dimension() const { return base_.dimension; }
  Index lifted_dimension() const { return base_.dimension + 2; }

  bool contains(const Vector& p) const;
  double potential(const Vector& p) const;
  CompositeLiftSeparator separator(double tol = 1e-12) const;

 private:
  CompositeTarget base_;
  double a_;
  double b_;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool q_member(const SingleLiftedTarget& target, const Vector& w);
bool qtilde_member(const DoubleLiftedTarget& target, const Vector& p);
double lifted_potential(const SingleLiftedTarget& target, const Vector& w);
double lifted_potential(const DoubleLiftedTarget& target, const Vector& p);

/// First d coordinates of a lifted point.
Vector drop_lift(const Vector& lifted, Index d);

}  // namespace liftsampler
