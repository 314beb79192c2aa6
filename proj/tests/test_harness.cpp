// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liftsampler/harness.hpp"
#include "liftsampler/instances.hpp"
#include "test_util.hpp"

using namespace liftsampler;
using testing::vec;

TEST_CASE("naive oracle without restriction is a Gaussian") {
  Rng rng(1);
  const Vector z = vec({0.5, -1.0});
  std::vector<Vector> xs;
  for (int k = 0; k < 100000; ++k)
    xs.push_back(naive_truncated_gaussian(z, 0.25, [](const Vector&) { return true; }, rng));
  const MomentReport m = sample_moments(xs);
  for (Index i = 0; i < 2; ++i) CHECK(std::abs(m.mean[i] - z[i]) <= 3.0 * (*m.mean_se)[i]);
  CHECK(m.variance[0] == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("naive oracle acceptance on a halfspace") {
  Rng rng(2);
  const Vector z = vec({0.0, 1.0});
  std::int64_t total = 0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    std::int64_t tries = 0;
    naive_truncated_gaussian(z, 1.0, [](const Vector& w) { return w[1] >= 1.0; }, rng,
                             1'000'000, &tries);
    total += tries;
  }
  CHECK(std::abs(double(n) / double(total) - 0.5) <= 0.01);
}

TEST_CASE("naive oracle acceptance equals the Gaussian mass of the set") {
  // Mass of [-1, 1] under N(0.3, 0.5).
  const double sd = std::sqrt(0.5);
  const double mass = 0.5 * (std::erf((1.0 - 0.3) / (sd * std::sqrt(2.0))) -
                             std::erf((-1.0 - 0.3) / (sd * std::sqrt(2.0))));
  Rng rng(3);
  std::vector<double> accepted;
  for (int k = 0; k < 100000; ++k) {
    std::int64_t tries = 0;
    naive_truncated_gaussian(vec({0.3}), 0.5, [](const Vector& w) { return std::abs(w[0]) <= 1.0; },
                             rng, 1000, &tries);
    for (std::int64_t j = 1; j < tries; ++j) accepted.push_back(0.0);
    accepted.push_back(1.0);
  }
  const auto m = testing::mean_se(accepted);
  CHECK(std::abs(m.mean - mass) <= 3.0 * m.se);
  CHECK_THROWS_AS(naive_truncated_gaussian(vec({0.0}), 1.0, [](const Vector&) { return false; },
                                           rng, 10),
                  NumericError);
}

TEST_CASE("quadrature reference values") {
  const MomentReport abs = quadrature_moments(find_instance("C1_d1"), 1e-3);
  CHECK(abs.l1_mean == doctest::Approx((1.0 - 2.0 * std::exp(-1.0)) / (1.0 - std::exp(-1.0))).epsilon(1e-9));
  CHECK(abs.l1_mean == doctest::Approx(0.41802).epsilon(1e-5));

  ConstrainedTarget flat;
  flat.dimension = 1;
  flat.f = zero_function(1);
  flat.set = box_set(1, 1.0);
  flat.outer_radius = 1.0;
  const MomentReport u = quadrature_moments(flat, 1e-3);
  CHECK(std::abs(u.mean[0]) <= 1e-12);
  CHECK(u.variance[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  const MomentReport disc = quadrature_moments(find_instance("C2_d2"), 1e-2);
  CHECK(disc.variance[0] == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(disc.l1_mean == doctest::Approx(8.0 / (3.0 * M_PI)).epsilon(1e-8));
}

TEST_CASE("quadrature is stable under refinement") {
  for (const char* name : {"C1_d1", "C1_d2", "C2_d2", "C3_d2", "P1_d1", "P2_d2"}) {
    const InstanceSpec& spec = find_instance(name);
    const double step = spec.dimension == 1 ? 1e-4 : 1e-2;
    const MomentReport coarse = quadrature_moments(spec, step);
    const MomentReport fine = quadrature_moments(spec, step / 2.0);
    CAPTURE(name);
    CHECK((coarse.mean - fine.mean).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((coarse.variance - fine.variance).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(std::abs(coarse.l1_mean - fine.l1_mean) < 1e-6);
  }
  CHECK_THROWS_AS(quadrature_moments(find_instance("C1_d4"), 1e-2), UnsupportedError);
}

TEST_CASE("KS extremes") {
  const std::vector<double> a{0.1, 0.5, 0.9, 1.3};
  CHECK(ks_two_sample(a, a).statistic == 0.0);
  CHECK(ks_two_sample(a, a).p_value == doctest::Approx(1.0));
  const std::vector<double> b{5.0, 6.0, 7.0};
  CHECK(ks_two_sample(a, b).statistic == 1.0);
  CHECK_THROWS_AS(ks_two_sample({}, b), PreconditionError);
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(kolmogorov_survival(1.0) == doctest::Approx(0.26999967).epsilon(1e-6));
}

TEST_CASE("KS null calibration") {
  Rng rng(4);
  std::uniform_real_distribution<double> u;
  int passes = 0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> a(10000), b(10000);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = u(rng);
    passes += ks_two_sample(a, b).p_value > 0.01;
  }
  CHECK(passes >= 98);
}

TEST_CASE("sample moments") {
  std::vector<Vector> xs;
  for (int k = 0; k < 100; ++k) xs.push_back(vec({double(k % 2), -1.0}));
  const MomentReport m = sample_moments(xs);
  CHECK(m.count == 100);
  CHECK(m.mean[0] == doctest::Approx(0.5));
  CHECK(m.variance[0] == doctest::Approx(0.25));
  CHECK(m.l1_mean == doctest::Approx(1.5));
  CHECK((*m.mean_se)[1] == 0.0);
  CHECK_THROWS_AS(sample_moments({}), PreconditionError);
}
