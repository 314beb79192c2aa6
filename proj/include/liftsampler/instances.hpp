// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liftsampler/lifting.hpp"

namespace liftsampler {

enum class InstanceKind { Constrained, Composite };
enum class SetKind { Box, Ball };
enum class PotentialKind { Zero, L1, Linear };

/// scale * ||x - shift||_1 (L1), <coefficients, x> (Linear) or 0 (Zero).
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Zero;
  double scale = 1.0;
  Vector shift;
  Vector coefficients;
};

struct InstanceSpec {
  std::string name;
  InstanceKind kind = InstanceKind::Constrained;
  Index dimension = 1;
  SetKind set = SetKind::Box;
  double radius = 1.0;
  PotentialSpec f;
  PotentialSpec h;
  CompositeCase oracle_case = CompositeCase::SubgradProx;
  /// Step size used when the run config does not give one.
  std::optional<double> eta;

  void validate() const;
};

using Target = std::variant<ConstrainedTarget, CompositeTarget>;

const std::vector<InstanceSpec>& registry();

/// Registry lookup; also accepts the short aliases "C1" and "P1" for the d=1
/// members. Throws ConfigError for unknown names.
const InstanceSpec& find_instance(const std::string& name);

FunctionOracle build_potential(const PotentialSpec& spec, Index dimension);
Target build_target(const InstanceSpec& spec);

/// Inline instance from JSON text (schema in docs/config.md).
InstanceSpec parse_instance_json(const std::string& text);
std::string instance_to_json(const InstanceSpec& spec);

}  // namespace liftsampler
