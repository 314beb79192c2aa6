// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/lifting.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "liftsampler/log.hpp"

namespace liftsampler {

void ConstrainedTarget::validate() const {
  if (dimension < 1) throw PreconditionError("target dimension must be positive");
  if (f.dimension != dimension || set.dimension != dimension) {
    throw PreconditionError("f and K must live in the target dimension");
  }
  if (!f.evaluate) throw CapabilityError("f needs an evaluation oracle");
  if (!(lipschitz >= 0.0)) throw PreconditionError("Lipschitz bound must be nonnegative");
  if (!(outer_radius > 0.0)) throw PreconditionError("outer radius must be positive");
}

void CompositeTarget::validate() const {
  if (dimension < 1) throw PreconditionError("target dimension must be positive");
  if (f.dimension != dimension || h.dimension != dimension) {
    throw PreconditionError("f and h must live in the target dimension");
  }
  if (!f.evaluate || !h.evaluate) throw CapabilityError("f and h need evaluation oracles");
  if (!(lipschitz_f >= 0.0) || !(lipschitz_h >= 0.0)) {
    throw PreconditionError("Lipschitz bounds must be nonnegative");
  }
}

namespace {

double checked_scale(std::optional<double> scale, Index d, const char* name) {
  const double v = scale.value_or(static_cast<double>(d));
  if (!(v > 0.0)) throw PreconditionError(std::string("lifting scale ") + name + " must be > 0");
  if (v != static_cast<double>(d)) {
    log(LogLevel::Info, std::string("lifting scale ") + name + " = " + std::to_string(v) +
                            " differs from d; proposal constants are calibrated for scale d");
  }
  return v;
}

}  // namespace

SingleLiftedTarget::SingleLiftedTarget(ConstrainedTarget base, std::optional<double> a)
    : base_(std::move(base)) {
  base_.validate();
  a_ = checked_scale(a, base_.dimension, "a");
}

bool SingleLiftedTarget::contains(const Vector& w) const {
  const Index d = base_.dimension;
  if (w.size() != d + 1) throw PreconditionError("lifted point must have d+1 coordinates");
  const Vector x = w.head(d);
  return base_.set.contains(x) && base_.f.evaluate(x) <= a_ * w[d];
}

double SingleLiftedTarget::potential(const Vector& w) const {
  return contains(w) ? a_ * w[base_.dimension] : kInfinity;
}

ConstrainedLiftSeparator SingleLiftedTarget::separator(EpigraphAccess access, double tol) const {
  return ConstrainedLiftSeparator(base_.set, base_.f, a_, access, tol);
}

DoubleLiftedTarget::DoubleLiftedTarget(CompositeTarget base, std::optional<double> a,
                                       std::optional<double> b)
    : base_(std::move(base)) {
  base_.validate();
  a_ = checked_scale(a, base_.dimension, "a");
  b_ = checked_scale(b, base_.dimension, "b");
}

bool DoubleLiftedTarget::contains(const Vector& p) const {
  const Index d = base_.dimension;
  if (p.size() != d + 2) throw PreconditionError("lifted point must have d+2 coordinates");
  const Vector x = p.head(d);
  const double s = p[d];
  const double t = p[d + 1];
  return base_.h.evaluate(x) <= a_ * s && base_.f.evaluate(x) + a_ * s <= b_ * t;
}

double DoubleLiftedTarget::potential(const Vector& p) const {
  return contains(p) ? b_ * p[base_.dimension + 1] : kInfinity;
}

CompositeLiftSeparator DoubleLiftedTarget::separator(double tol) const {
  return CompositeLiftSeparator(base_.oracle_case, base_.f, base_.h, a_, b_, tol);
}

bool q_member(const SingleLiftedTarget& target, const Vector& w) { return target.contains(w); }
bool qtilde_member(const DoubleLiftedTarget& target, const Vector& p) { return target.contains(p); }
double lifted_potential(const SingleLiftedTarget& target, const Vector& w) {
  return target.potential(w);
}
double lifted_potential(const DoubleLiftedTarget& target, const Vector& p) {
  return target.potential(p);
}

Vector drop_lift(const Vector& lifted, Index d) {
  if (d < 0 || d > lifted.size()) throw PreconditionError("drop_lift: bad dimension");
  return lifted.head(d);
}

}  // namespace liftsampler
