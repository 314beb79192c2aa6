// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/instances.hpp"

#include <cmath>

#include <json.hpp>

namespace liftsampler {

using nlohmann::json;

namespace {

PotentialSpec l1(Index d, double scale = 1.0, double shift = 0.0) {
  PotentialSpec p;
  p.kind = PotentialKind::L1;
  p.scale = scale;
  p.shift = Vector::Constant(d, shift);
  return p;
}

PotentialSpec linear(Vector c) {
  PotentialSpec p;
  p.kind = PotentialKind::Linear;
  p.coefficients = std::move(c);
  return p;
}

InstanceSpec constrained(std::string name, Index d, SetKind set, PotentialSpec f) {
  InstanceSpec s;
  s.name = std::move(name);
  s.kind = InstanceKind::Constrained;
  s.dimension = d;
  s.set = set;
  s.f = std::move(f);
  return s;
}

InstanceSpec composite(std::string name, Index d, PotentialSpec f, PotentialSpec h,
                       CompositeCase which) {
  InstanceSpec s;
  s.name = std::move(name);
  s.kind = InstanceKind::Composite;
  s.dimension = d;
  s.f = std::move(f);
  s.h = std::move(h);
  s.oracle_case = which;
  return s;
}

std::vector<InstanceSpec> make_registry() {
  std::vector<InstanceSpec> out;
  for (Index d : {1, 2, 4, 8}) {
    out.push_back(constrained("C1_d" + std::to_string(d), d, SetKind::Box, l1(d)));
  }
  out.front().eta = 0.25;
  out.push_back(constrained("C2_d2", 2, SetKind::Ball, PotentialSpec{}));
  Vector c(2);
  c << 0.6, 0.8;
  out.push_back(constrained("C3_d2", 2, SetKind::Ball, linear(c)));
  InstanceSpec p1 = composite("P1_d1", 1, l1(1), l1(1, 2.0, 0.5), CompositeCase::SubgradProx);
  p1.eta = 0.25;
  out.push_back(p1);
  for (Index d : {2, 4}) {
    out.push_back(composite("P2_d" + std::to_string(d), d, l1(d), l1(d, 1.0, 0.5),
                            CompositeCase::ProxProx));
  }
  return out;
}

double potential_lipschitz(const PotentialSpec& p, Index d) {
  switch (p.kind) {
    case PotentialKind::Zero: return 0.0;
    case PotentialKind::L1: return p.scale * std::sqrt(double(d));
    case PotentialKind::Linear: return p.coefficients.norm();
  }
  return 0.0;
}

Vector read_vector(const json& j, Index d, const char* what) {
  if (j.is_number()) return Vector::Constant(d, j.get<double>());
  if (!j.is_array() || static_cast<Index>(j.size()) != d) {
    throw ConfigError(std::string(what) + " must be a number or an array of length d");
  }
  Vector v(d);
  for (Index i = 0; i < d; ++i) v[i] = j[static_cast<std::size_t>(i)].get<double>();
  return v;
}

PotentialSpec read_potential(const json& j, Index d) {
  PotentialSpec p;
  const std::string type = j.value("type", "zero");
  if (type == "zero") {
    p.kind = PotentialKind::Zero;
  } else if (type == "l1") {
    p.kind = PotentialKind::L1;
    p.scale = j.value("scale", 1.0);
    p.shift = j.contains("shift") ? read_vector(j["shift"], d, "shift") : Vector::Zero(d);
  } else if (type == "linear") {
    p.kind = PotentialKind::Linear;
    if (!j.contains("coefficients")) throw ConfigError("linear potential needs coefficients");
    p.coefficients = read_vector(j["coefficients"], d, "coefficients");
  } else {
    throw ConfigError("unknown potential type '" + type + "'");
  }
  return p;
}

json write_vector(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json write_potential(const PotentialSpec& p) {
  switch (p.kind) {
    case PotentialKind::Zero: return {{"type", "zero"}};
    case PotentialKind::L1: return {{"type", "l1"}, {"scale", p.scale}, {"shift", write_vector(p.shift)}};
    case PotentialKind::Linear: return {{"type", "linear"}, {"coefficients", write_vector(p.coefficients)}};
  }
  return {};
}

void check_potential(const PotentialSpec& p, Index d) {
  if (p.kind == PotentialKind::L1) {
    if (!(p.scale > 0.0)) throw ConfigError("l1 scale must be positive");
    if (p.shift.size() != d) throw ConfigError("l1 shift has wrong length");
  }
  if (p.kind == PotentialKind::Linear && p.coefficients.size() != d) {
    throw ConfigError("linear coefficients have wrong length");
  }
}

}  // namespace

void InstanceSpec::validate() const {
  if (dimension < 1) throw ConfigError("dimension must be positive");
  if (eta && !(*eta > 0.0)) throw ConfigError("eta must be positive");
  check_potential(f, dimension);
  if (kind == InstanceKind::Constrained) {
    if (!(radius >= 1.0)) throw ConfigError("set radius must be at least 1");
  } else {
    check_potential(h, dimension);
    if (oracle_case == CompositeCase::ProxProx &&
        (f.kind == PotentialKind::Linear || h.kind == PotentialKind::Linear)) {
      throw ConfigError("linear potentials offer no proximal map");
    }
    if (h.kind == PotentialKind::Linear) throw ConfigError("h needs a proximal map");
  }
}

const std::vector<InstanceSpec>& registry() {
  static const std::vector<InstanceSpec> instances = make_registry();
  return instances;
}

const InstanceSpec& find_instance(const std::string& name) {
  const std::string key = name == "C1" ? "C1_d1" : name == "P1" ? "P1_d1" : name;
  for (const InstanceSpec& s : registry()) {
    if (s.name == key) return s;
  }
  throw ConfigError("unknown instance '" + name + "'");
}

FunctionOracle build_potential(const PotentialSpec& spec, Index dimension) {
  switch (spec.kind) {
    case PotentialKind::Zero: return zero_function(dimension);
    case PotentialKind::L1: return l1_function(dimension, spec.scale, spec.shift);
    case PotentialKind::Linear: return linear_function(spec.coefficients);
  }
  throw ConfigError("bad potential");
}

Target build_target(const InstanceSpec& spec) {
  spec.validate();
  const Index d = spec.dimension;
  if (spec.kind == InstanceKind::Constrained) {
    ConstrainedTarget t;
    t.dimension = d;
    t.f = build_potential(spec.f, d);
    t.set = spec.set == SetKind::Box ? box_set(d, spec.radius) : ball_set(d, spec.radius);
    t.lipschitz = potential_lipschitz(spec.f, d);
    t.outer_radius = t.set.outer_radius;
    t.validate();
    return t;
  }
  CompositeTarget t;
  t.dimension = d;
  t.f = build_potential(spec.f, d);
  t.h = build_potential(spec.h, d);
  t.lipschitz_f = potential_lipschitz(spec.f, d);
  t.lipschitz_h = potential_lipschitz(spec.h, d);
  t.oracle_case = spec.oracle_case;
  t.validate();
  return t;
}

InstanceSpec parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("instance JSON: ") + e.what());
  }
  try {
    InstanceSpec s;
    s.name = j.value("name", "inline");
    const std::string kind = j.value("kind", "constrained");
    if (kind != "constrained" && kind != "composite") throw ConfigError("unknown kind '" + kind + "'");
    s.kind = kind == "constrained" ? InstanceKind::Constrained : InstanceKind::Composite;
    s.dimension = j.at("dimension").get<Index>();
    if (s.dimension < 1) throw ConfigError("dimension must be positive");
    if (j.contains("eta")) s.eta = j["eta"].get<double>();
    s.f = read_potential(j.value("f", json::object()), s.dimension);
    if (s.kind == InstanceKind::Constrained) {
      const json set = j.value("set", json{{"type", "box"}});
      const std::string type = set.value("type", "box");
      if (type != "box" && type != "ball") throw ConfigError("unknown set type '" + type + "'");
      s.set = type == "box" ? SetKind::Box : SetKind::Ball;
      s.radius = set.value("radius", 1.0);
    } else {
      s.h = read_potential(j.value("h", json::object()), s.dimension);
      const std::string which = j.value("oracle_case", "subgrad_prox");
      if (which != "subgrad_prox" && which != "prox_prox") {
        throw ConfigError("unknown oracle_case '" + which + "'");
      }
      s.oracle_case = which == "prox_prox" ? CompositeCase::ProxProx : CompositeCase::SubgradProx;
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("instance JSON: ") + e.what());
  }
}

std::string instance_to_json(const InstanceSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["dimension"] = spec.dimension;
  j["f"] = write_potential(spec.f);
  if (spec.eta) j["eta"] = *spec.eta;
  if (spec.kind == InstanceKind::Constrained) {
    j["kind"] = "constrained";
    j["set"] = {{"type", spec.set == SetKind::Box ? "box" : "ball"}, {"radius", spec.radius}};
  } else {
    j["kind"] = "composite";
    j["h"] = write_potential(spec.h);
    j["oracle_case"] = spec.oracle_case == CompositeCase::ProxProx ? "prox_prox" : "subgrad_prox";
  }
  return j.dump();
}

}  // namespace liftsampler
