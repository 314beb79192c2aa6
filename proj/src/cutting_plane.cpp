// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/cutting_plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace liftsampler {

namespace {

constexpr double kMinSemiAxis = 1e-14;

// An objective cut f(x) >= value + <g, x - x_i>. `along` = <g, c> and
// `spread` = gᵀ P g track the current ellipsoid E = {c + J u : ||u|| <= 1},
// P = J Jᵀ.
struct ObjectiveCut {
  Vector g;
  double offset;  // value - <g, x_i>
  double along;
  double spread;

  double lower_bound() const { return offset + along - std::sqrt(std::max(spread, 0.0)); }
};

}  // namespace

std::int64_t cp_default_budget(const CpProblem& problem) {
  const double n = static_cast<double>(problem.dimension);
  const double mu = problem.strong_convexity > 0.0 ? std::min(problem.strong_convexity, 1.0) : 1.0;
  const double ratio = problem.enclosing_radius / std::sqrt(problem.target_gap * mu * 0.5);
  return static_cast<std::int64_t>(50.0 * n * n * std::log(std::max(ratio, 10.0))) + 1000;
}

CpResult cp_minimize(const CpProblem& problem) {
  const Index n = problem.dimension;
  if (n < 1) throw PreconditionError("cutting plane: dimension must be positive");
  if (!(problem.enclosing_radius > 0.0)) throw PreconditionError("cutting plane: R must be > 0");
  if (!(problem.target_gap > 0.0)) throw PreconditionError("cutting plane: target gap must be > 0");
  if (!problem.objective_value || !problem.objective_subgradient || !problem.feasible_set) {
    throw PreconditionError("cutting plane: objective and feasible set oracles are required");
  }

  Vector c = problem.center.size() == 0 ? Vector::Zero(n) : problem.center;
  if (c.size() != n) throw PreconditionError("cutting plane: center has wrong dimension");
  const double r = problem.enclosing_radius;
  Matrix J = (std::sqrt(static_cast<double>(n)) * r) * Matrix::Identity(n, n);
  const std::int64_t budget = problem.iteration_budget.value_or(cp_default_budget(problem));

  CpResult result;
  result.best_value = std::numeric_limits<double>::infinity();
  std::vector<ObjectiveCut> cuts;
  double verified_lower = -std::numeric_limits<double>::infinity();
  double running_lower = verified_lower;

  auto resync = [&] {
    double lower = -std::numeric_limits<double>::infinity();
    for (auto& cut : cuts) {
      cut.along = cut.g.dot(c);
      cut.spread = (J.transpose() * cut.g).squaredNorm();
      lower = std::max(lower, cut.lower_bound());
    }
    verified_lower = std::max(verified_lower, lower);
    running_lower = verified_lower;
  };

  auto gap = [&](double lower) { return result.best_value - lower; };

  // Evaluates the objective at a feasible point, records the cut and
  // returns its subgradient.
  auto objective_cut = [&](const Vector& x) {
    const double v = problem.objective_value(x);
    Vector g = problem.objective_subgradient(x);
    ++result.calls.subgradient;
    if (v < result.best_value) {
      result.best_value = v;
      result.point = x;
    }
    cuts.push_back({g, v - g.dot(x), g.dot(c), (J.transpose() * g).squaredNorm()});
    running_lower = std::max(running_lower, cuts.back().lower_bound());
    return g;
  };

  auto finish = [&](bool converged) {
    if (result.point.size() == 0) {
      throw InfeasibleError("cutting plane: localization collapsed without a feasible point");
    }
    if (!converged) resync();
    result.certified_gap = std::max(0.0, gap(verified_lower));
    result.converged = converged || result.certified_gap <= problem.target_gap;
    return result;
  };

  if (problem.known_feasible) {
    const Vector g = objective_cut(*problem.known_feasible);
    if (g.squaredNorm() == 0.0) {
      verified_lower = result.best_value;
      return finish(true);
    }
  }

  const double nd = static_cast<double>(n);
  const double expand = n > 1 ? nd * nd / (nd * nd - 1.0) : 0.25;
  for (; result.iterations < budget; ++result.iterations) {
    const SeparationResult sep = problem.feasible_set(c);
    ++result.calls.separation;
    Vector g;
    if (sep.is_inside()) {
      g = objective_cut(c);
      if (g.squaredNorm() == 0.0) {
        // Zero subgradient at a feasible point: global minimizer.
        verified_lower = result.best_value;
        return finish(true);
      }
    } else {
      g = sep.separator();
    }

    const Vector Jg = J.transpose() * g;
    const double root = Jg.norm();
    if (!(root > 0.0) || !std::isfinite(root) || root / g.norm() < kMinSemiAxis) break;
    const Vector u = Jg / root;
    const Vector Ju = J * u;
    const Vector& step = Ju;

    if (n > 1) {
      c -= step / (nd + 1.0);
      // P' = expand (P - 2/(n+1) step stepᵀ) = J' J'ᵀ
      const double shrink = 1.0 - std::sqrt(1.0 - 2.0 / (nd + 1.0));
      J = std::sqrt(expand) * (J - shrink * Ju * u.transpose());
    } else {
      c -= 0.5 * step;
      J *= 0.5;
    }
    for (auto& cut : cuts) {
      const double gb = cut.g.dot(step);
      if (n > 1) {
        cut.along -= gb / (nd + 1.0);
        cut.spread = expand * (cut.spread - (2.0 / (nd + 1.0)) * gb * gb);
      } else {
        cut.along -= 0.5 * gb;
        cut.spread *= 0.25;
      }
      running_lower = std::max(running_lower, cut.lower_bound());
    }
    if (problem.on_iterate) problem.on_iterate(c, J * J.transpose());

    if (gap(running_lower) <= problem.target_gap) {
      resync();
      if (gap(verified_lower) <= problem.target_gap) {
        ++result.iterations;
        return finish(true);
      }
    }
  }
  return finish(false);
}

}  // namespace liftsampler
