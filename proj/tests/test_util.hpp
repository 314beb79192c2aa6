// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "liftsampler/types.hpp"

namespace testing {

inline liftsampler::Vector vec(std::initializer_list<double> v) {
  liftsampler::Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline bool near(const liftsampler::Vector& a, const liftsampler::Vector& b, double tol) {
  return a.size() == b.size() && (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= double(xs.size());
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  v /= double(xs.size() - 1);
  return {m, std::sqrt(v / double(xs.size()))};
}

inline liftsampler::Vector uniform_box(Eigen::Index n, double r, liftsampler::Rng& rng) {
  std::uniform_real_distribution<double> u(-r, r);
  liftsampler::Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

}  // namespace testing
