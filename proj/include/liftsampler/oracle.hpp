// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <optional>
#include <span>

#include "liftsampler/types.hpp"

namespace liftsampler {

enum class Verdict { Inside, Separated };

/// Outcome of a separation query. A separator g at query x satisfies
/// <g, x> > <g, y> for every y in the set; it is returned unnormalized.
class SeparationResult {
 public:
  static SeparationResult inside() { return SeparationResult{}; }
  static SeparationResult separated(Vector g);

  Verdict verdict() const { return separator_ ? Verdict::Separated : Verdict::Inside; }
  bool is_inside() const { return !separator_.has_value(); }
  const Vector& separator() const;

 private:
  SeparationResult() = default;
  std::optional<Vector> separator_;
};

using SeparationOracle = std::function<SeparationResult(const Vector&)>;
using ProjectionOracle = std::function<Vector(const Vector&)>;
using ProximalMap = std::function<Vector(const Vector&, double)>;

/// Access to a closed convex function. `subgradient` and `proximal` are
/// optional capabilities; an empty std::function means "not offered".
struct FunctionOracle {
  Index dimension = 0;
  std::function<double(const Vector&)> evaluate;
  std::function<Vector(const Vector&)> subgradient;
  ProximalMap proximal;
  double lipschitz = 0.0;  // metadata only

  bool has_subgradient() const { return static_cast<bool>(subgradient); }
  bool has_proximal() const { return static_cast<bool>(proximal); }

  /// c * f for c > 0, keeping whichever capabilities f has.
  FunctionOracle scaled(double c) const;
};

/// Access to a closed convex set. Membership falls back to separation when
/// not given explicitly. `inner_radius`/`outer_radius` describe the
/// B(0, inner) ⊆ K ⊆ B(0, outer) sandwich.
struct SetOracle {
  Index dimension = 0;
  std::function<bool(const Vector&)> membership;
  SeparationOracle separation;
  ProjectionOracle projection;
  double inner_radius = 0.0;
  double outer_radius = 0.0;

  bool contains(const Vector& x) const;
  SeparationResult separate(const Vector& x) const;
  bool has_projection() const { return static_cast<bool>(projection); }
};

// ---------------------------------------------------------------------------
// Oracle compositions
// ---------------------------------------------------------------------------

/// Separation for epi(f) at (x̂, t̂) from one function value and one
/// subgradient: Inside iff f(x̂) <= t̂, otherwise (g, -1) with g ∈ ∂f(x̂).
SeparationResult separate_epigraph_subgrad(const FunctionOracle& f, const Vector& query);

struct EpigraphBisection {
  static constexpr int kMaxDoublings = 200;
  static constexpr int kMaxBisections = 200;
};

/// Euclidean projection onto epi(f) using only evaluation and prox. For an
/// infeasible query the projection is (prox_{λ f}(x̂), t̂ + λ) where λ is the
/// root of φ(λ) = f(prox_{λ f}(x̂)) - t̂ - λ. φ is strictly decreasing, so the
/// root is bracketed by doubling and then bisected until |φ| <= tol.
Vector project_epigraph_prox(const FunctionOracle& f, const Vector& query, double tol);

/// φ(λ) from the routine above, exposed for diagnostics and tests.
double epigraph_residual(const FunctionOracle& f, const Vector& query, double lambda);

/// Inside when proj(x) == x exactly; otherwise separator x - proj(x).
SeparationResult separation_from_projection(const ProjectionOracle& proj, const Vector& x);

/// Which access to f is used for the epigraph half of a lifted separation.
enum class EpigraphAccess { Auto, Subgradient, Proximal };

/// Separation oracle for Q = {(x, t) : x ∈ K, f(x) <= a t}.
class ConstrainedLiftSeparator {
 public:
  ConstrainedLiftSeparator(SetOracle set, FunctionOracle f, double a,
                           EpigraphAccess access = EpigraphAccess::Auto,
                           double tol = 1e-12);

  SeparationResult operator()(const Vector& query) const;
  EpigraphAccess access() const { return access_; }

 private:
  SetOracle set_;
  FunctionOracle f_over_a_;
  EpigraphAccess access_;
  double tol_;
};

SeparationResult separate_constrained_q(const SetOracle& set, const FunctionOracle& f, double a,
                                        const Vector& query,
                                        EpigraphAccess access = EpigraphAccess::Auto,
                                        double tol = 1e-12);

/// prox of f̃(x, s) = f(x) + a s at (x₀, s₀): (prox_{λ f}(x₀), s₀ - λ a).
Vector prox_ftilde(const ProximalMap& prox_f, double a, double lambda, const Vector& query);

/// Oracle combinations for the doubly lifted set
/// Q̃ = {(x, s, t) : h(x) <= a s, f(x) + a s <= b t}.
enum class CompositeCase {
  ProxProx,     // prox_f and prox_h
  SubgradProx,  // f' and prox_h
};

class CompositeLiftSeparator {
 public:
  CompositeLiftSeparator(CompositeCase which, FunctionOracle f, FunctionOracle h, double a,
                         double b, double tol = 1e-12);

  SeparationResult operator()(const Vector& query) const;

  /// Separation for K̃ = epi(h / a) ⊂ R^{d+1}.
  SeparationResult separate_inner(const Vector& xs) const;

 private:
  CompositeCase case_;
  FunctionOracle h_over_a_;
  FunctionOracle ftilde_over_b_;
  double tol_;
};

SeparationResult separate_qtilde(CompositeCase which, const FunctionOracle& f,
                                 const FunctionOracle& h, double a, double b,
                                 const Vector& query, double tol = 1e-12);

/// Closed Euclidean ball.
SeparationResult separate_ball(const Vector& center, double radius, const Vector& x);

/// First separator among the members, Inside when all are Inside.
SeparationResult separate_intersection(std::span<const SeparationOracle> oracles, const Vector& x);

// ---------------------------------------------------------------------------
// Stock oracles
// ---------------------------------------------------------------------------

FunctionOracle zero_function(Index dimension);

/// scale * ||x - shift||_1. Lipschitz bound scale * sqrt(d).
FunctionOracle l1_function(Index dimension, double scale = 1.0,
                           std::optional<Vector> shift = std::nullopt);

/// <c, x>.
FunctionOracle linear_function(Vector c);

/// radius * B_∞(0).
SetOracle box_set(Index dimension, double radius);

/// radius * B_2(0).
SetOracle ball_set(Index dimension, double radius);

}  // namespace liftsampler
