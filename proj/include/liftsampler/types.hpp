// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace liftsampler {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Per-chain random stream. Never shared between chains.
using Rng = std::mt19937_64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An oracle was asked for a capability it does not advertise.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Root finding, envelope construction or a proposal budget gave out.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The cutting-plane localization collapsed without meeting a feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Requested something outside what an operation supports (e.g. quadrature in d > 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or unknown instance name.
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline Vector concat(const Vector& head, double tail) {
  Vector out(head.size() + 1);
  out << head, tail;
  return out;
}

inline Vector concat(const Vector& head, double a, double b) {
  Vector out(head.size() + 2);
  out << head, a, b;
  return out;
}

}  // namespace liftsampler
