// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "liftsampler/harness.hpp"
#include "liftsampler/proposal.hpp"
#include "test_util.hpp"

using namespace liftsampler;
using testing::mean_se;
using testing::vec;

namespace {

std::vector<double> ars_draws(const RadialLaw& law, int n, std::uint64_t seed) {
  Rng rng(seed);
  RadialSampler s(law);
  std::vector<double> out(n);
  for (auto& r : out) r = s.sample(rng);
  return out;
}

}  // namespace

TEST_CASE("unit sphere") {
  Rng rng(1);
  int plus = 0;
  for (int k = 0; k < 10000; ++k) {
    const Vector t = sample_unit_sphere(1, rng);
    CHECK(std::abs(t.norm() - 1.0) <= 1e-12);
    plus += t[0] > 0;
  }
  CHECK(std::abs(plus / 1e4 - 0.5) <= 0.02);
  const int n = 100000;
  Vector sum = Vector::Zero(3);
  for (int k = 0; k < n; ++k) {
    const Vector t = sample_unit_sphere(3, rng);
    REQUIRE(std::abs(t.norm() - 1.0) <= 1e-12);
    sum += t;
  }
  const double bound = 3.0 / std::sqrt(double(n)) / std::sqrt(3.0) * 3.0;
  CHECK((sum / n).cwiseAbs().maxCoeff() <= bound);
  CHECK_THROWS_AS(sample_unit_sphere(0, rng), PreconditionError);
}

TEST_CASE("radial law basics") {
  const RadialLaw law{2.0, 1.0, 0.5};
  CHECK(law.mode() == doctest::Approx((1.0 + std::sqrt(1.0 + 4.0)) / 2.0));
  CHECK(law.log_density_derivative(law.mode()) == doctest::Approx(0.0).epsilon(1e-12));
  for (double r = 1e-3; r < 50.0; r *= 1.3) CHECK(law.log_density_second_derivative(r) < 0.0);
  CHECK_THROWS_AS((RadialLaw{-1.0, 0.0, 1.0}.validate()), PreconditionError);
  CHECK_THROWS_AS((RadialLaw{0.0, -1.0, 1.0}.validate()), PreconditionError);
  CHECK_THROWS_AS((RadialLaw{0.0, 0.0, 0.0}.validate()), PreconditionError);
}

TEST_CASE("ars half-normal mean") {
  const auto xs = ars_draws({0.0, 0.0, 1.0}, 100000, 11);
  const auto m = mean_se(xs);
  CHECK(std::abs(m.mean - std::sqrt(2.0 / M_PI)) <= 3.0 * m.se);
  CHECK(*std::min_element(xs.begin(), xs.end()) > 0.0);
}

TEST_CASE("ars Maxwell mean") {
  const auto m = mean_se(ars_draws({2.0, 0.0, 1.0}, 100000, 12));
  CHECK(std::abs(m.mean - 2.0 * std::sqrt(2.0 / M_PI)) <= 3.0 * m.se);
}

TEST_CASE("ars shifted near-Gaussian mean") {
  const auto m = mean_se(ars_draws({0.0, 5.0, 1.0}, 100000, 13));
  CHECK(std::abs(m.mean - 5.0) <= 3.0 * m.se);
}

TEST_CASE("ars one-shot and hull reuse agree in law") {
  Rng rng(4);
  std::vector<double> one(20000);
  for (auto& r : one) r = ars_sample({3.0, 0.4, 0.2}, rng);
  const auto reuse = ars_draws({3.0, 0.4, 0.2}, 20000, 5);
  CHECK(ks_two_sample(one, reuse).p_value > 0.001);
}

TEST_CASE("proposal radius matches a Rayleigh law") {
  Rng rng(21);
  const ProposalSpec spec{vec({1.0, -2.0}), 0.0, 1.0};
  const int n = 100000;
  std::vector<double> radii(n), direct(n);
  std::normal_distribution<double> g;
  for (int k = 0; k < n; ++k) radii[k] = (sample_proposal(spec, rng) - spec.center).norm();
  Rng other(22);
  for (int k = 0; k < n; ++k) direct[k] = std::hypot(g(other), g(other));
  const auto m = mean_se(radii);
  CHECK(std::abs(m.mean - std::sqrt(M_PI / 2.0)) <= 3.0 * m.se);
  CHECK(ks_two_sample(radii, direct).p_value > 0.01);
}

TEST_CASE("proposal mean is the center") {
  Rng rng(23);
  const ProposalSpec spec{vec({0.5, 1.0, -1.0}), 2.0, 0.3};
  RadialSampler radial(spec.radial_law());
  const int n = 50000;
  std::vector<std::vector<double>> cols(3, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    const Vector w = sample_proposal(spec, radial, rng);
    for (int i = 0; i < 3; ++i) cols[i][k] = w[i];
  }
  for (int i = 0; i < 3; ++i) {
    const auto m = mean_se(cols[i]);
    CHECK(std::abs(m.mean - spec.center[i]) <= 3.0 * m.se);
  }
}

TEST_CASE("one-dimensional proposal matches inverse-CDF sampling") {
  const double c = 1.0, eta = 0.5, center = 0.3;
  // Tabulated CDF of exp(-(|w| - c)^2 / (2 eta)) on [-L, L].
  const double L = c + 12.0 * std::sqrt(eta);
  const int grid = 200001;
  const double h = 2.0 * L / (grid - 1);
  std::vector<double> cdf(grid, 0.0);
  auto dens = [&](double w) { return std::exp(-std::pow(std::abs(w) - c, 2) / (2.0 * eta)); };
  for (int i = 1; i < grid; ++i) {
    const double w0 = -L + h * (i - 1);
    cdf[i] = cdf[i - 1] + 0.5 * h * (dens(w0) + dens(w0 + h));
  }
  for (auto& v : cdf) v /= cdf.back();
  Rng rng(31);
  std::uniform_real_distribution<double> unif;
  const int n = 100000;
  std::vector<double> direct(n), ours(n);
  for (auto& v : direct) {
    const double u = unif(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto i = std::max<std::ptrdiff_t>(1, it - cdf.begin());
    const double frac = (u - cdf[i - 1]) / std::max(cdf[i] - cdf[i - 1], 1e-300);
    v = center - L + h * (double(i - 1) + frac);
  }
  const ProposalSpec spec{vec({center}), c, eta};
  Rng r2(32);
  for (auto& v : ours) v = sample_proposal(spec, r2)[0];
  CHECK(ks_two_sample(ours, direct).p_value > 0.01);
}

TEST_CASE("proposal determinism") {
  const ProposalSpec spec{vec({0.0, 0.0}), 0.7, 0.4};
  Rng a(99), b(99);
  for (int k = 0; k < 100; ++k) CHECK((sample_proposal(spec, a) - sample_proposal(spec, b)).norm() == 0.0);
}

TEST_CASE("inverse exponential tail") {
  CHECK(inverse_exp_tail(1.0, 0.0, 1.0 - std::exp(-1.0)) == doctest::Approx(1.0));
  CHECK(inverse_exp_tail(1.0, 2.5, 0.0) == 2.5);
  CHECK(inverse_exp_tail(2.0, 3.0, 0.5) == doctest::Approx(3.0 + std::log(2.0) / 2.0));
  CHECK_THROWS(inverse_exp_tail(1.0, 0.0, 1.0));
  CHECK_THROWS(inverse_exp_tail(0.0, 0.0, 0.5));
}
