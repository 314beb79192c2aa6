// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/oracle.hpp"

#include <cmath>
#include <utility>

namespace liftsampler {

SeparationResult SeparationResult::separated(Vector g) {
  if (g.size() == 0 || !(g.array() != 0.0).any()) {
    throw NumericError("separator must be a nonzero vector");
  }
  SeparationResult r;
  r.separator_ = std::move(g);
  return r;
}

const Vector& SeparationResult::separator() const {
  if (!separator_) throw PreconditionError("Inside result carries no separator");
  return *separator_;
}

FunctionOracle FunctionOracle::scaled(double c) const {
  if (!(c > 0.0)) throw PreconditionError("scale must be positive");
  FunctionOracle out;
  out.dimension = dimension;
  out.lipschitz = c * lipschitz;
  out.evaluate = [ev = evaluate, c](const Vector& x) { return c * ev(x); };
  if (subgradient) {
    out.subgradient = [sg = subgradient, c](const Vector& x) -> Vector { return c * sg(x); };
  }
  if (proximal) {
    out.proximal = [px = proximal, c](const Vector& x, double lambda) {
      return px(x, lambda * c);
    };
  }
  return out;
}

bool SetOracle::contains(const Vector& x) const {
  if (membership) return membership(x);
  return separate(x).is_inside();
}

SeparationResult SetOracle::separate(const Vector& x) const {
  if (separation) return separation(x);
  if (projection) return separation_from_projection(projection, x);
  throw CapabilityError("set oracle offers neither separation nor projection");
}

SeparationResult separate_epigraph_subgrad(const FunctionOracle& f, const Vector& query) {
  if (!f.has_subgradient()) {
    throw CapabilityError("epigraph separation needs a subgradient oracle");
  }
  const Index d = query.size() - 1;
  const Vector x = query.head(d);
  const double t = query[d];
  if (f.evaluate(x) <= t) return SeparationResult::inside();
  return SeparationResult::separated(concat(f.subgradient(x), -1.0));
}

double epigraph_residual(const FunctionOracle& f, const Vector& query, double lambda) {
  const Index d = query.size() - 1;
  return f.evaluate(f.proximal(query.head(d), lambda)) - query[d] - lambda;
}

Vector project_epigraph_prox(const FunctionOracle& f, const Vector& query, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("projection tolerance must be positive");
  if (!f.has_proximal()) throw CapabilityError("epigraph projection needs a proximal oracle");
  const Index d = query.size() - 1;
  const Vector x = query.head(d);
  const double t = query[d];
  const double excess = f.evaluate(x) - t;
  if (excess <= 0.0) return query;

  auto point_at = [&](double lambda) { return concat(f.proximal(x, lambda), t + lambda); };

  double lo = 0.0;
  double hi = std::max(tol, excess);
  double phi_hi = epigraph_residual(f, query, hi);
  int doublings = 0;
  while (phi_hi >= 0.0) {
    if (std::abs(phi_hi) <= tol) return point_at(hi);
    if (++doublings > EpigraphBisection::kMaxDoublings) {
      throw NumericError("epigraph projection: root bracket not found");
    }
    lo = hi;
    hi *= 2.0;
    phi_hi = epigraph_residual(f, query, hi);
  }
  if (std::abs(phi_hi) <= tol) return point_at(hi);

  for (int i = 0; i < EpigraphBisection::kMaxBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double phi = epigraph_residual(f, query, mid);
    if (std::abs(phi) <= tol) return point_at(mid);
    (phi > 0.0 ? lo : hi) = mid;
  }
  throw NumericError("epigraph projection: bisection did not reach tolerance");
}

SeparationResult separation_from_projection(const ProjectionOracle& proj, const Vector& x) {
  const Vector p = proj(x);
  if (p == x) return SeparationResult::inside();
  return SeparationResult::separated(x - p);
}

namespace {

EpigraphAccess resolve_access(const FunctionOracle& f, EpigraphAccess requested) {
  switch (requested) {
    case EpigraphAccess::Subgradient:
      if (!f.has_subgradient()) throw CapabilityError("f has no subgradient oracle");
      return requested;
    case EpigraphAccess::Proximal:
      if (!f.has_proximal()) throw CapabilityError("f has no proximal oracle");
      return requested;
    case EpigraphAccess::Auto:
      break;
  }
  if (f.has_subgradient()) return EpigraphAccess::Subgradient;
  if (f.has_proximal()) return EpigraphAccess::Proximal;
  throw CapabilityError("f offers neither a subgradient nor a proximal oracle");
}

SeparationResult separate_epigraph(const FunctionOracle& g, EpigraphAccess access,
                                   const Vector& query, double tol) {
  if (access == EpigraphAccess::Subgradient) return separate_epigraph_subgrad(g, query);
  return separation_from_projection(
      [&](const Vector& q) { return project_epigraph_prox(g, q, tol); }, query);
}

}  // namespace

ConstrainedLiftSeparator::ConstrainedLiftSeparator(SetOracle set, FunctionOracle f, double a,
                                                   EpigraphAccess access, double tol)
    : set_(std::move(set)),
      f_over_a_(f.scaled(1.0 / a)),
      access_(resolve_access(f, access)),
      tol_(tol) {}

SeparationResult ConstrainedLiftSeparator::operator()(const Vector& query) const {
  const Index d = query.size() - 1;
  const SeparationResult outer = set_.separate(query.head(d));
  if (!outer.is_inside()) return SeparationResult::separated(concat(outer.separator(), 0.0));
  return separate_epigraph(f_over_a_, access_, query, tol_);
}

SeparationResult separate_constrained_q(const SetOracle& set, const FunctionOracle& f, double a,
                                        const Vector& query, EpigraphAccess access, double tol) {
  return ConstrainedLiftSeparator(set, f, a, access, tol)(query);
}

Vector prox_ftilde(const ProximalMap& prox_f, double a, double lambda, const Vector& query) {
  if (!(lambda > 0.0)) throw PreconditionError("prox parameter must be positive");
  const Index d = query.size() - 1;
  return concat(prox_f(query.head(d), lambda), query[d] - lambda * a);
}

CompositeLiftSeparator::CompositeLiftSeparator(CompositeCase which, FunctionOracle f,
                                               FunctionOracle h, double a, double b, double tol)
    : case_(which), tol_(tol) {
  if (!f.evaluate || !h.evaluate) throw CapabilityError("f and h need evaluation oracles");
  if (!h.has_proximal()) throw CapabilityError("h needs a proximal oracle");
  if (which == CompositeCase::ProxProx && !f.has_proximal()) {
    throw CapabilityError("prox/prox case needs a proximal oracle for f");
  }
  if (which == CompositeCase::SubgradProx && !f.has_subgradient()) {
    throw CapabilityError("subgradient/prox case needs a subgradient oracle for f");
  }
  if (!(a > 0.0) || !(b > 0.0)) throw PreconditionError("lifting scales must be positive");

  h_over_a_ = h.scaled(1.0 / a);

  // f̃(x, s) / b with f̃(x, s) = f(x) + a s.
  const Index d = f.dimension;
  FunctionOracle ft;
  ft.dimension = d + 1;
  ft.evaluate = [ev = f.evaluate, a, b, d](const Vector& xs) {
    return (ev(xs.head(d)) + a * xs[d]) / b;
  };
  if (which == CompositeCase::SubgradProx) {
    ft.subgradient = [sg = f.subgradient, a, b, d](const Vector& xs) -> Vector {
      return concat(sg(xs.head(d)), a) / b;
    };
  } else {
    ft.proximal = [px = f.proximal, a, b](const Vector& xs, double lambda) {
      return prox_ftilde(px, a, lambda / b, xs);
    };
  }
  ftilde_over_b_ = std::move(ft);
}

SeparationResult CompositeLiftSeparator::separate_inner(const Vector& xs) const {
  return separation_from_projection(
      [&](const Vector& q) { return project_epigraph_prox(h_over_a_, q, tol_); }, xs);
}

SeparationResult CompositeLiftSeparator::operator()(const Vector& query) const {
  const Index n = query.size();
  const SeparationResult inner = separate_inner(query.head(n - 1));
  if (!inner.is_inside()) return SeparationResult::separated(concat(inner.separator(), 0.0));
  const EpigraphAccess access = case_ == CompositeCase::SubgradProx
                                    ? EpigraphAccess::Subgradient
                                    : EpigraphAccess::Proximal;
  return separate_epigraph(ftilde_over_b_, access, query, tol_);
}

SeparationResult separate_qtilde(CompositeCase which, const FunctionOracle& f,
                                 const FunctionOracle& h, double a, double b,
                                 const Vector& query, double tol) {
  return CompositeLiftSeparator(which, f, h, a, b, tol)(query);
}

SeparationResult separate_ball(const Vector& center, double radius, const Vector& x) {
  if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
  Vector g = x - center;
  if (g.norm() <= radius) return SeparationResult::inside();
  return SeparationResult::separated(std::move(g));
}

SeparationResult separate_intersection(std::span<const SeparationOracle> oracles,
                                       const Vector& x) {
  if (oracles.empty()) throw PreconditionError("intersection of zero sets");
  for (const auto& oracle : oracles) {
    SeparationResult r = oracle(x);
    if (!r.is_inside()) return r;
  }
  return SeparationResult::inside();
}

// ---------------------------------------------------------------------------

FunctionOracle zero_function(Index dimension) {
  FunctionOracle f;
  f.dimension = dimension;
  f.lipschitz = 0.0;
  f.evaluate = [](const Vector&) { return 0.0; };
  f.subgradient = [dimension](const Vector&) -> Vector { return Vector::Zero(dimension); };
  f.proximal = [](const Vector& x, double) { return x; };
  return f;
}

FunctionOracle l1_function(Index dimension, double scale, std::optional<Vector> shift) {
  if (!(scale > 0.0)) throw PreconditionError("l1 scale must be positive");
  const Vector c = shift.value_or(Vector::Zero(dimension));
  if (c.size() != dimension) throw PreconditionError("l1 shift has wrong dimension");
  FunctionOracle f;
  f.dimension = dimension;
  f.lipschitz = scale * std::sqrt(static_cast<double>(dimension));
  f.evaluate = [c, scale](const Vector& x) { return scale * (x - c).lpNorm<1>(); };
  f.subgradient = [c, scale](const Vector& x) -> Vector {
    return scale * (x - c).unaryExpr([](double v) { return double((v > 0) - (v < 0)); });
  };
  f.proximal = [c, scale](const Vector& x, double lambda) -> Vector {
    const double k = lambda * scale;
    return c + (x - c).unaryExpr([k](double v) {
      return std::copysign(std::max(std::abs(v) - k, 0.0), v);
    });
  };
  return f;
}

FunctionOracle linear_function(Vector c) {
  FunctionOracle f;
  f.dimension = c.size();
  f.lipschitz = c.norm();
  f.evaluate = [c](const Vector& x) { return c.dot(x); };
  f.subgradient = [c](const Vector&) -> Vector { return c; };
  f.proximal = [c](const Vector& x, double lambda) -> Vector { return x - lambda * c; };
  return f;
}

SetOracle box_set(Index dimension, double radius) {
  if (!(radius > 0.0)) throw PreconditionError("box radius must be positive");
  SetOracle k;
  k.dimension = dimension;
  k.inner_radius = radius;
  k.outer_radius = radius * std::sqrt(static_cast<double>(dimension));
  k.membership = [radius](const Vector& x) { return x.lpNorm<Eigen::Infinity>() <= radius; };
  k.projection = [radius](const Vector& x) -> Vector {
    return x.cwiseMax(-radius).cwiseMin(radius);
  };
  k.separation = [proj = k.projection](const Vector& x) {
    return separation_from_projection(proj, x);
  };
  return k;
}

SetOracle ball_set(Index dimension, double radius) {
  if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
  SetOracle k;
  k.dimension = dimension;
  k.inner_radius = radius;
  k.outer_radius = radius;
  k.membership = [radius](const Vector& x) { return x.norm() <= radius; };
  k.projection = [radius](const Vector& x) -> Vector {
    const double n = x.norm();
    return n <= radius ? x : Vector(x * (radius / n));
  };
  k.separation = [radius](const Vector& x) {
    return separate_ball(Vector::Zero(x.size()), radius, x);
  };
  return k;
}

}  // namespace liftsampler
