// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/proposal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace liftsampler {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void RadialLaw::validate() const {
  if (!(power >= 0.0)) throw PreconditionError("radial power must be >= 0");
  if (!(shift >= 0.0)) throw PreconditionError("radial shift must be >= 0");
  if (!(step > 0.0)) throw PreconditionError("radial step must be > 0");
}

double RadialLaw::log_density(double r) const {
  if (r < 0.0) return -kInf;
  const double dr = r - shift;
  if (power == 0.0) return -dr * dr / (2.0 * step);
  return power * std::log(r) - dr * dr / (2.0 * step);
}

double RadialLaw::log_density_derivative(double r) const {
  return (power == 0.0 ? 0.0 : power / r) - (r - shift) / step;
}

double RadialLaw::log_density_second_derivative(double r) const {
  return -power / (r * r) - 1.0 / step;
}

double RadialLaw::mode() const {
  return 0.5 * (shift + std::sqrt(shift * shift + 4.0 * power * step));
}

RadialLaw ProposalSpec::radial_law() const {
  return RadialLaw{static_cast<double>(dimension() - 1), radial_shift, step};
}

void ProposalSpec::validate() const {
  if (dimension() < 1) throw PreconditionError("proposal center must be nonempty");
  radial_law().validate();
}

RadialSampler::RadialSampler(RadialLaw law) : law_(law) {
  law_.validate();
  const double sigma = std::sqrt(law_.step);
  const double mode = law_.mode();
  std::vector<double> init;
  if (mode > 0.0) {
    init = {0.5 * mode, mode, 2.0 * mode};
    if (mode < 3.0 * sigma) init.push_back(mode + 3.0 * sigma);
  } else {
    init = {0.5 * sigma, sigma, 2.0 * sigma};
  }
  for (double x : init) {
    points_.push_back({x, law_.log_density(x), law_.log_density_derivative(x)});
  }
  rebuild();
}

void RadialSampler::insert(double x) {
  if (points_.size() >= kMaxPoints || !(x > 0.0) || !std::isfinite(x)) return;
  const double h = law_.log_density(x);
  if (!std::isfinite(h)) return;
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Abscissa& a, double v) { return a.x < v; });
  if (it != points_.end() && it->x == x) return;
  points_.insert(it, {x, h, law_.log_density_derivative(x)});
  rebuild();
}

void RadialSampler::rebuild() {
  const std::size_t k = points_.size();
  if (points_.back().dh >= 0.0) throw NumericError("ARS hull has no decreasing right tail");
  std::vector<double> bounds(k + 1);
  bounds[0] = 0.0;
  bounds[k] = kInf;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Abscissa& p = points_[i];
    const Abscissa& q = points_[i + 1];
    double z;
    const double slope_gap = p.dh - q.dh;
    if (slope_gap <= 1e-12 * (std::abs(p.dh) + std::abs(q.dh) + 1.0)) {
      z = 0.5 * (p.x + q.x);
    } else {
      z = (q.h - p.h - q.x * q.dh + p.x * p.dh) / slope_gap;
    }
    bounds[i + 1] = std::clamp(z, p.x, q.x);
  }

  pieces_.assign(k, {});
  double max_log = -kInf;
  for (std::size_t i = 0; i < k; ++i) {
    const Abscissa& p = points_[i];
    const double lo = bounds[i];
    const double hi = bounds[i + 1];
    const double width = hi - lo;
    double log_mass;
    if (width <= 0.0) {
      log_mass = -kInf;
    } else if (p.dh > 0.0) {
      const double u_hi = p.h + p.dh * (hi - p.x);
      log_mass = u_hi + std::log(-std::expm1(-p.dh * width)) - std::log(p.dh);
    } else if (p.dh < 0.0) {
      const double u_lo = p.h + p.dh * (lo - p.x);
      log_mass = u_lo + std::log(-std::expm1(p.dh * width)) - std::log(-p.dh);
    } else {
      log_mass = p.h + std::log(width);
    }
    pieces_[i] = {lo, hi, log_mass};
    max_log = std::max(max_log, log_mass);
  }
  if (!std::isfinite(max_log)) throw NumericError("ARS hull has no mass");
  cumulative_.resize(k);
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    acc += std::exp(pieces_[i].log_mass - max_log);
    cumulative_[i] = acc;
  }
}

double RadialSampler::envelope(std::size_t piece, double x) const {
  const Abscissa& p = points_[piece];
  return p.h + p.dh * (x - p.x);
}

double RadialSampler::squeeze(double x) const {
  if (x < points_.front().x || x > points_.back().x) return -kInf;
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Abscissa& a) { return v < a.x; });
  if (it == points_.end()) return points_.back().h;
  const Abscissa& right = *it;
  const Abscissa& left = *(it - 1);
  return ((right.x - x) * left.h + (x - left.x) * right.h) / (right.x - left.x);
}

double RadialSampler::sample(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < kMaxTrials; ++trial) {
    const double pick = unif(rng) * cumulative_.back();
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(cumulative_.begin(), cumulative_.end(), pick) - cumulative_.begin());
    const std::size_t piece = std::min(i, pieces_.size() - 1);
    const auto [lo, hi, log_mass] = pieces_[piece];
    const double slope = points_[piece].dh;
    const double u = unif(rng);
    double x;
    if (slope < 0.0) {
      x = lo + std::log1p(u * std::expm1(slope * (hi - lo))) / slope;
    } else if (slope > 0.0) {
      x = hi + std::log1p(-u * -std::expm1(-slope * (hi - lo))) / slope;
    } else {
      x = lo + u * (hi - lo);
    }
    if (!(x > 0.0) || !std::isfinite(x)) continue;

    const double log_u = std::log(unif(rng));
    const double upper = envelope(piece, x);
    if (log_u <= squeeze(x) - upper) return x;
    const double h = law_.log_density(x);
    if (log_u <= h - upper) return x;
    insert(x);
  }
  throw NumericError("adaptive rejection sampling exhausted its trial budget");
}

Vector sample_unit_sphere(Index n, Rng& rng) {
  if (n < 1) throw PreconditionError("sphere dimension must be >= 1");
  std::normal_distribution<double> normal;
  for (;;) {
    Vector w(n);
    for (Index i = 0; i < n; ++i) w[i] = normal(rng);
    const double norm = w.norm();
    if (norm > 0.0) return w / norm;
  }
}

double ars_sample(const RadialLaw& law, Rng& rng) {
  RadialSampler sampler(law);
  return sampler.sample(rng);
}

Vector sample_proposal(const ProposalSpec& spec, RadialSampler& radial, Rng& rng) {
  const Vector theta = sample_unit_sphere(spec.dimension(), rng);
  const double r = radial.sample(rng);
  return spec.center + r * theta;
}

Vector sample_proposal(const ProposalSpec& spec, Rng& rng) {
  spec.validate();
  RadialSampler radial(spec.radial_law());
  return sample_proposal(spec, radial, rng);
}

double inverse_exp_tail(double rate, double lower, double u) {
  if (!(rate > 0.0)) throw PreconditionError("exponential tail rate must be positive");
  if (!(u >= 0.0 && u < 1.0)) throw PreconditionError("uniform variate must lie in [0, 1)");
  return lower - std::log1p(-u) / rate;
}

}  // namespace liftsampler
