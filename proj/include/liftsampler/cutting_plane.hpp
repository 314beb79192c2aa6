// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "liftsampler/oracle.hpp"
#include "liftsampler/types.hpp"

namespace liftsampler {

/// Minimize a convex objective over a convex body known through a
/// separation oracle. The body must lie inside the box
/// center + enclosing_radius * B_∞.
struct CpProblem {
  Index dimension = 0;
  std::function<double(const Vector&)> objective_value;
  std::function<Vector(const Vector&)> objective_subgradient;
  SeparationOracle feasible_set;
  Vector center;  // empty means the origin
  double enclosing_radius = 1.0;
  double strong_convexity = 0.0;
  double target_gap = 1e-6;

  /// A point already known to be feasible; used to seed the incumbent.
  std::optional<Vector> known_feasible;
  /// Overrides the default iteration budget when set.
  std::optional<std::int64_t> iteration_budget;
  /// Called after every ellipsoid update with (center, shape matrix).
  std::function<void(const Vector&, const Matrix&)> on_iterate;
};

struct CpCalls {
  std::int64_t separation = 0;
  std::int64_t subgradient = 0;
};

struct CpResult {
  Vector point;
  double best_value = 0.0;
  double certified_gap = 0.0;
  CpCalls calls;
  std::int64_t iterations = 0;
  bool converged = false;
};

/// Default hard iteration cap:
/// 50 n² ln(max(R / sqrt(ε min(μ, 1) / 2), 10)) + 1000.
std::int64_t cp_default_budget(const CpProblem& problem);

/// Central-cut ellipsoid method with a certified optimality gap.
///
/// Infeasible centers are cut by the separator; feasible centers are cut by
/// the objective subgradient, and each such cut (v_i, x_i, g_i) gives the
/// lower bound  v_i + <g_i, c - x_i> - sqrt(g_iᵀ P g_i)  on the minimum
/// over the current ellipsoid {x : (x-c)ᵀ P⁻¹ (x-c) <= 1}. The returned gap
/// is the incumbent value minus the best such bound seen.
///
/// Returns converged=false when the budget runs out or the ellipsoid
/// degenerates; throws InfeasibleError when it degenerates before any
/// feasible point was seen.
CpResult cp_minimize(const CpProblem& problem);

}  // namespace liftsampler
