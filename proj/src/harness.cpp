// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/harness.hpp"

#include "liftsampler/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace liftsampler {

Vector naive_truncated_gaussian(const Vector& z, double eta, const MemberPredicate& member,
                                Rng& rng, std::int64_t max_tries, std::int64_t* tries) {
  if (!(eta > 0.0)) throw PreconditionError("eta must be positive");
  std::normal_distribution<double> normal;
  const double sd = std::sqrt(eta);
  Vector w(z.size());
  for (std::int64_t k = 1; k <= max_tries; ++k) {
    for (Index i = 0; i < w.size(); ++i) w[i] = z[i] + sd * normal(rng);
    if (member(w)) {
      if (tries) *tries = k;
      return w;
    }
  }
  throw NumericError("naive truncated Gaussian exhausted its tries");
}

MomentReport sample_moments(const std::vector<Vector>& samples) {
  if (samples.empty()) throw PreconditionError("no samples");
  const Index d = samples.front().size();
  const auto n = static_cast<std::int64_t>(samples.size());

  MomentReport r;
  r.count = n;
  r.mean = Vector::Zero(d);
  for (const Vector& x : samples) {
    r.mean += x;
    r.l1_mean += x.lpNorm<1>();
  }
  r.mean /= static_cast<double>(n);
  r.l1_mean /= static_cast<double>(n);
  r.variance = Vector::Zero(d);
  for (const Vector& x : samples) r.variance += (x - r.mean).cwiseAbs2();
  r.variance /= static_cast<double>(n);

  auto batches = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::sqrt(double(n))));
  batches = std::min(batches, n);
  const std::int64_t size = n / batches;
  Vector mean_acc = Vector::Zero(d);
  Vector var_acc = Vector::Zero(d);
  double l1_acc = 0.0;
  for (std::int64_t b = 0; b < batches; ++b) {
    Vector bm = Vector::Zero(d);
    Vector bv = Vector::Zero(d);
    double bl = 0.0;
    for (std::int64_t k = b * size; k < (b + 1) * size; ++k) {
      const Vector& x = samples[static_cast<std::size_t>(k)];
      bm += x;
      bv += (x - r.mean).cwiseAbs2();
      bl += x.lpNorm<1>();
    }
    bm /= double(size);
    bv /= double(size);
    bl /= double(size);
    mean_acc += (bm - r.mean).cwiseAbs2();
    var_acc += (bv - r.variance).cwiseAbs2();
    l1_acc += (bl - r.l1_mean) * (bl - r.l1_mean);
  }
  const double denom = double(batches) * double(batches - 1);
  r.mean_se = (mean_acc / denom).cwiseSqrt();
  r.variance_se = (var_acc / denom).cwiseSqrt();
  r.l1_se = std::sqrt(l1_acc / denom);
  return r;
}

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Composite Simpson on [lo, hi] with an even number of intervals no wider
// than `step`.
Rule simpson(double lo, double hi, double step) {
  auto n = static_cast<std::int64_t>(std::ceil((hi - lo) / step - 1e-9));
  n = std::max<std::int64_t>(2, n + (n % 2));
  const double h = (hi - lo) / double(n);
  Rule r;
  r.nodes.resize(static_cast<std::size_t>(n + 1));
  r.weights.resize(r.nodes.size());
  for (std::int64_t i = 0; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.nodes[k] = lo + h * double(i);
    r.weights[k] = h / 3.0 * ((i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
  }
  return r;
}

// Largest step <= `step` that divides 1/4, so that 0, ±1/2, ±1 land on
// even Simpson nodes of a symmetric grid.
double aligned_step(double step) {
  if (!(step > 0.0)) throw PreconditionError("quadrature step must be positive");
  return 0.25 / std::ceil(0.25 / step - 1e-9);
}

struct Accumulator {
  double mass = 0.0;
  double l1 = 0.0;
  Vector m1;
  Vector m2;

  explicit Accumulator(Index d) : m1(Vector::Zero(d)), m2(Vector::Zero(d)) {}

  void add(double weight, const Vector& x, double density) {
    const double p = weight * density;
    if (p == 0.0) return;
    mass += p;
    m1 += p * x;
    m2 += p * x.cwiseAbs2();
    l1 += p * x.lpNorm<1>();
  }

  MomentReport report() const {
    if (!(mass > 0.0)) throw NumericError("quadrature mass vanished");
    MomentReport r;
    r.mean = m1 / mass;
    r.variance = m2 / mass - r.mean.cwiseAbs2();
    r.l1_mean = l1 / mass;
    return r;
  }
};

MomentReport grid_moments(Index d, double half_width, double step,
                          const std::function<double(const Vector&)>& density) {
  if (d < 1 || d > 2) throw UnsupportedError("quadrature moments need d <= 2");
  const Rule rule = simpson(-half_width, half_width, aligned_step(step));
  Accumulator acc(d);
  Vector x(d);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    x[0] = rule.nodes[i];
    if (d == 1) {
      acc.add(rule.weights[i], x, density(x));
      continue;
    }
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      x[1] = rule.nodes[j];
      acc.add(rule.weights[i] * rule.weights[j], x, density(x));
    }
  }
  return acc.report();
}

// Polar coordinates on the disc of the given radius.
MomentReport disc_moments(double radius, double step,
                          const std::function<double(const Vector&)>& density) {
  const Rule radial = simpson(0.0, radius, aligned_step(step));
  auto sectors = static_cast<std::int64_t>(std::ceil(2.0 * std::numbers::pi * radius / step));
  sectors = std::max<std::int64_t>(8, 8 * ((sectors + 7) / 8));
  const Rule angular = simpson(0.0, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi / double(sectors));
  Accumulator acc(2);
  Vector x(2);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i];
    if (r == 0.0) continue;
    for (std::size_t j = 0; j + 1 < angular.nodes.size(); ++j) {
      const double phi = angular.nodes[j];
      x << r * std::cos(phi), r * std::sin(phi);
      // First and last angular nodes coincide; fold their weights.
      const double wa = j == 0 ? angular.weights.front() + angular.weights.back()
                               : angular.weights[j];
      acc.add(radial.weights[i] * wa * r, x, density(x));
    }
  }
  return acc.report();
}

}  // namespace

MomentReport quadrature_moments(const ConstrainedTarget& target, double step,
                                std::optional<double> half_width) {
  const double w = half_width.value_or(target.outer_radius);
  return grid_moments(target.dimension, w, step, [&](const Vector& x) {
    return target.set.contains(x) ? std::exp(-target.f.evaluate(x)) : 0.0;
  });
}

MomentReport quadrature_moments(const CompositeTarget& target, double step, double half_width) {
  return grid_moments(target.dimension, half_width, step, [&](const Vector& x) {
    return std::exp(-target.f.evaluate(x) - target.h.evaluate(x));
  });
}

MomentReport quadrature_moments(const InstanceSpec& spec, double step) {
  const Target target = build_target(spec);
  if (const auto* comp = std::get_if<CompositeTarget>(&target)) {
    return quadrature_moments(*comp, step);
  }
  const auto& con = std::get<ConstrainedTarget>(target);
  if (spec.set == SetKind::Ball && spec.dimension == 2) {
    return disc_moments(spec.radius, step,
                        [&](const Vector& x) { return std::exp(-con.f.evaluate(x)); });
  }
  return quadrature_moments(con, step, spec.radius);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    const double y = -pi * pi / (8.0 * lambda * lambda);
    double cdf = 0.0;
    for (int j = 1; j <= 20; ++j) {
      const double k = 2.0 * j - 1.0;
      cdf += std::exp(k * k * y);
    }
    cdf *= std::sqrt(2.0 * pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double q = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    q += (j % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(q, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw PreconditionError("KS test needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = double(a.size());
  const double nb = double(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_survival((ne + 0.12 + 0.11 / ne) * d)};
}

}  // namespace liftsampler
