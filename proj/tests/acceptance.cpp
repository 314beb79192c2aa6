// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

// Acceptance suite. Usage: acceptance <path-to-liftsampler-cli>
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "liftsampler/harness.hpp"
#include "liftsampler/instances.hpp"
#include "liftsampler/rgo.hpp"
#include "liftsampler/sampler.hpp"
#include "liftsampler/verify.hpp"

using namespace liftsampler;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Membership checks of lifted outputs, pooled across criteria.
struct FeasibilityLedger {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  void record(bool ok) {
    ++checked;
    failed += !ok;
  }
};

FeasibilityLedger g_feasible;

std::string fmt(const char* pattern, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

Vector uniform_box(Index n, double r, Rng& rng) {
  std::uniform_real_distribution<double> u(-r, r);
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

double exp1(Rng& rng) { return std::exponential_distribution<double>(1.0)(rng); }

Vector gaussian(Index n, double sd, Rng& rng) {
  std::normal_distribution<double> g(0.0, sd);
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = g(rng);
  return x;
}

// -------------------------------------------------------------------------
// 1, 2: RGO against the naive oracle, KS per coordinate on >= 2 of 3 seeds.

template <typename Draw>
Outcome ks_protocol(Index width, const Vector& center, double eta, const MemberPredicate& member,
                    Draw draw) {
  constexpr int kDraws = 100000;
  constexpr int kSeeds = 3;
  std::vector<int> passes(static_cast<std::size_t>(width), 0);
  std::string ps;
  for (int seed = 0; seed < kSeeds; ++seed) {
    Rng rng(chain_seed(101, seed));
    Rng naive_rng(chain_seed(202, seed));
    std::vector<std::vector<double>> ours(width), naive(width);
    for (int k = 0; k < kDraws; ++k) {
      const Vector w = draw(rng);
      g_feasible.record(member(w));
      const Vector v = naive_truncated_gaussian(center, eta, member, naive_rng);
      for (Index i = 0; i < width; ++i) {
        ours[i].push_back(w[i]);
        naive[i].push_back(v[i]);
      }
    }
    for (Index i = 0; i < width; ++i) {
      const double p = ks_two_sample(ours[i], naive[i]).p_value;
      passes[i] += p > 0.01;
      ps += fmt("%s%.3f", ps.empty() ? "" : " ", p);
    }
  }
  bool ok = true;
  for (int c : passes) ok = ok && c >= 2;
  return {ok, "KS p-values (seed-major, per coordinate): " + ps};
}

Outcome criterion1() {
  const auto c1 = std::get<ConstrainedTarget>(build_target(find_instance("C1_d1")));
  const SingleLiftedTarget lifted(c1, 1.0);
  const RgoInputConstrained input{Vector::Zero(1), 1.0, 0.25};
  return ks_protocol(
      2, input.z(lifted.a()), input.eta, [&](const Vector& w) { return lifted.contains(w); },
      [&](Rng& rng) { return rgo_sample_constrained(lifted, input, rng).point; });
}

Outcome criterion2() {
  const auto p1 = std::get<CompositeTarget>(build_target(find_instance("P1_d1")));
  const DoubleLiftedTarget lifted(p1);
  const RgoInputComposite input = verify_input(lifted, 0.25);
  return ks_protocol(
      3, input.q(lifted.b()), input.eta, [&](const Vector& p) { return lifted.contains(p); },
      [&](Rng& rng) { return rgo_sample_composite(lifted, input, rng).point; });
}

// -------------------------------------------------------------------------
// 3, 4: stationary marginals.

SamplerConfig long_run(const InstanceSpec& spec, std::uint64_t seed) {
  SamplerConfig c = SamplerConfig::defaults(spec.dimension);
  if (spec.eta) c.eta = *spec.eta;
  c.burn_in = 1000;
  c.iterations = c.burn_in + 100000;
  c.seed = seed;
  return c;
}

template <typename Lifted>
void record_trace(const Trace& trace, const Lifted& lifted) {
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    Vector p(trace.dimension + trace.lift_count);
    p << trace.samples[i], trace.lifts[i];
    g_feasible.record(lifted.contains(p));
  }
}

Outcome criterion3() {
  const InstanceSpec& spec = find_instance("C1_d1");
  const auto target = std::get<ConstrainedTarget>(build_target(spec));
  const SamplerConfig config = long_run(spec, 303);
  const Trace trace = run_constrained(config, target);
  if (!trace.complete()) return {false, "chain stopped: " + trace.error};
  record_trace(trace, SingleLiftedTarget(target, config.a));
  const MomentReport m = sample_moments(trace.samples);
  const double expected = (1.0 - 2.0 * std::exp(-1.0)) / (1.0 - std::exp(-1.0));
  const double z_abs = (m.l1_mean - expected) / *m.l1_se;
  const double z_mean = m.mean[0] / (*m.mean_se)[0];
  return {std::abs(z_abs) <= 3.0 && std::abs(z_mean) <= 3.0,
          fmt("E|X| = %.5f (target %.5f, z = %.2f), E[X] = %.5f (z = %.2f), %zu samples",
              m.l1_mean, expected, z_abs, m.mean[0], z_mean, trace.samples.size())};
}

Outcome criterion4() {
  const InstanceSpec& spec = find_instance("P1_d1");
  const auto target = std::get<CompositeTarget>(build_target(spec));
  const SamplerConfig config = long_run(spec, 404);
  const Trace trace = run_composite(config, target);
  if (!trace.complete()) return {false, "chain stopped: " + trace.error};
  record_trace(trace, DoubleLiftedTarget(target, config.a, config.b));
  const MomentReport m = sample_moments(trace.samples);
  const MomentReport q = quadrature_moments(spec, 1e-4);
  const double z = (m.mean[0] - q.mean[0]) / (*m.mean_se)[0];
  return {std::abs(z) <= 3.0, fmt("E[X] = %.5f vs quadrature %.5f (z = %.2f), %zu samples",
                                  m.mean[0], q.mean[0], z, trace.samples.size())};
}

// -------------------------------------------------------------------------
// 5: mean proposals on C1 with the a = d, eta = 1/d^2.

Outcome criterion5() {
  std::vector<double> means;
  std::string detail;
  bool ok = true;
  for (int d : {2, 4, 8}) {
    const InstanceSpec& spec = find_instance("C1_d" + std::to_string(d));
    const auto target = std::get<ConstrainedTarget>(build_target(spec));
    SamplerConfig config = SamplerConfig::defaults(d);
    config.seed = 505;
    const Trace trace = run_constrained(config, target);
    if (!trace.complete()) return {false, fmt("d=%d chain stopped: ", d) + trace.error};
    record_trace(trace, SingleLiftedTarget(target, config.a));
    const double mean = trace.mean_proposals();
    ok = ok && mean <= 50.0;
    if (!means.empty()) ok = ok && mean / means.back() <= 2.0;
    means.push_back(mean);
    detail += fmt("%sd=%d: %.2f", detail.empty() ? "" : ", ", d, mean);
  }
  return {ok, "mean proposals per RGO call " + detail + " (a = d, eta = 1/d^2)"};
}

// -------------------------------------------------------------------------
// 6: P1 <= Theta and P1~ <= Theta~ on probes around many RGO inputs.

Outcome criterion6() {
  constexpr int kInputs = 100;
  constexpr int kProbes = 100;
  const auto c1 = std::get<ConstrainedTarget>(build_target(find_instance("C1_d1")));
  const auto p1 = std::get<CompositeTarget>(build_target(find_instance("P1_d1")));
  const SingleLiftedTarget lc(c1, 1.0);
  const DoubleLiftedTarget lp(p1, 1.0, 1.0);
  const double eta = 0.25;
  std::int64_t probes = 0, violations = 0, skipped = 0;
  Rng rng(606);
  for (Envelope env : {Envelope::Certified, Envelope::Nominal}) {
    RgoOptions opt;
    opt.envelope = env;
    for (int k = 0; k < kInputs; ++k) {
      const RgoInputConstrained in{uniform_box(1, 1.5, rng), -0.5 + 2.5 * std::uniform_real_distribution<>()(rng), eta};
      const RgoCenter c = rgo_subproblem_constrained(lc, in, opt);
      if (!c.converged) {
        ++skipped;
        continue;
      }
      const double kappa = env == Envelope::Nominal ? constrained_proposal_shift(lc, eta)
                                                  : constrained_envelope_radius(lc, eta, c.certified_gap);
      const ProposalSpec prop{c.point, kappa, eta};
      for (int j = 0; j < kProbes; ++j) {
        const Vector w = j % 2 == 0 ? sample_proposal(prop, rng)
                                    : Vector(c.point + uniform_box(2, kappa + 4.0 * std::sqrt(eta), rng));
        ++probes;
        violations += p1_eval(lc, in, w, c.point, kappa) > theta_eval(lc, in, w) + 1e-9;
      }
    }
    for (int k = 0; k < kInputs; ++k) {
      const Vector x = uniform_box(1, 1.5, rng);
      const double s = p1.h.evaluate(x) + exp1(rng);
      const double t = p1.f.evaluate(x) + s + exp1(rng);
      RgoInputComposite in;
      in.eta = eta;
      in.previous = concat(x, s, t);
      in.yuv = in.previous + gaussian(3, std::sqrt(eta), rng);
      const RgoCenter c = rgo_subproblem_composite(lp, in, opt);
      if (!c.converged) {
        ++skipped;
        continue;
      }
      const double delta = env == Envelope::Nominal ? composite_delta(1, eta)
                                                  : composite_envelope_radius(eta, c.certified_gap);
      const ProposalSpec prop{c.point, delta, eta};
      for (int j = 0; j < kProbes; ++j) {
        const Vector p = j % 2 == 0 ? sample_proposal(prop, rng)
                                    : Vector(c.point + uniform_box(3, delta + 4.0 * std::sqrt(eta), rng));
        ++probes;
        violations += ptilde1_eval(lp, in, p, c.point, delta) > theta_tilde_eval(lp, in, p) + 1e-9;
      }
    }
  }
  return {violations == 0 && probes >= 4 * kInputs * kProbes / 2,
          fmt("%lld probes over C1/P1 x {certified, nominal}, %lld violations, %lld inputs skipped "
              "(no certificate)",
              static_cast<long long>(probes), static_cast<long long>(violations),
              static_cast<long long>(skipped))};
}

// -------------------------------------------------------------------------
// 7: cutting-plane contract on min ||x - c||² over [-1, 1]^n.

Outcome criterion7() {
  constexpr double kEps = 1e-6;
  constexpr double kC = 10.0;
  Rng rng(707);
  const SetOracle box0 = box_set(1, 1.0);
  double fitted = 0.0;
  bool ok = true;
  int solved = 0;
  for (Index n : {2, 4, 8, 16}) {
    const SetOracle box = box_set(n, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
      const Vector c = uniform_box(n, 2.0, rng);
      const Vector star = c.cwiseMax(-1.0).cwiseMin(1.0);
      CpProblem p;
      p.dimension = n;
      p.objective_value = [c](const Vector& x) { return (x - c).squaredNorm(); };
      p.objective_subgradient = [c](const Vector& x) -> Vector { return 2.0 * (x - c); };
      p.feasible_set = [box](const Vector& x) { return box.separate(x); };
      p.enclosing_radius = 1.0;
      p.strong_convexity = 2.0;
      p.target_gap = kEps;
      const CpResult r = cp_minimize(p);
      const double true_gap = r.best_value - (star - c).squaredNorm();
      ok = ok && r.converged && r.certified_gap <= kEps && true_gap <= r.certified_gap + 1e-12 &&
           true_gap >= -1e-12;
      const double ratio = double(r.calls.separation) / (double(n * n) * std::log(1.0 / kEps));
      fitted = std::max(fitted, ratio);
      ++solved;
    }
  }
  ok = ok && fitted <= kC;
  return {ok, fmt("%d solves, n in {2,4,8,16}; fitted C = %.3f (bound %.0f)", solved, fitted, kC)};
}

// -------------------------------------------------------------------------
// 8: oracle compositions against ground truth.

struct CompositionCheck {
  std::int64_t queries = 0;
  std::int64_t membership_errors = 0;
  std::int64_t separator_errors = 0;
};

// Ground-truth membership, the oracle's verdict, and the separator
// inequality <g, q - y> > 0 against sampled feasible points y.
void check_query(CompositionCheck& acc, const Vector& q, bool member, const SeparationResult& s,
                 const std::function<Vector()>& feasible) {
  ++acc.queries;
  if (s.is_inside() != member) ++acc.membership_errors;
  if (s.is_inside()) return;
  for (int j = 0; j < 100; ++j) {
    if (!(s.separator().dot(q - feasible()) > 0.0)) {
      ++acc.separator_errors;
      return;
    }
  }
}

Outcome criterion8() {
  constexpr int kQueries = 1000;
  Rng rng(808);
  const Index d = 2;
  const SetOracle box = box_set(d, 1.0);
  const SetOracle ball = ball_set(d, 1.0);
  const FunctionOracle f = l1_function(d);
  const FunctionOracle h = l1_function(d, 2.0, Vector::Constant(d, 0.5));
  const double a = 2.0, b = 2.0;

  // Boundary points half the time, interior otherwise.
  auto slack = [&]() { return std::uniform_int_distribution<>(0, 1)(rng) ? exp1(rng) : 0.0; };
  auto in_ball = [&]() {
    Vector x = uniform_box(d, 1.0, rng);
    while (x.norm() > 1.0) x = uniform_box(d, 1.0, rng);
    return x;
  };
  auto in_epi = [&]() {
    const Vector x = uniform_box(d, 3.0, rng);
    return concat(x, f.evaluate(x) + slack());
  };
  auto in_q = [&]() {
    const Vector x = uniform_box(d, 1.0, rng);
    return concat(x, f.evaluate(x) / a + slack());
  };
  auto in_qt = [&]() {
    const Vector x = uniform_box(d, 3.0, rng);
    const double s = h.evaluate(x) / a + slack();
    return concat(x, s, (f.evaluate(x) + a * s) / b + slack());
  };

  std::vector<std::pair<std::string, CompositionCheck>> rows;
  auto run = [&](const std::string& name, const std::function<void(CompositionCheck&)>& one) {
    CompositionCheck acc;
    for (int k = 0; k < kQueries; ++k) one(acc);
    rows.emplace_back(name, acc);
  };

  run("projection->separation (ball)", [&](CompositionCheck& acc) {
    const Vector x = uniform_box(d, 2.0, rng);
    check_query(acc, x, x.norm() <= 1.0, separation_from_projection(ball.projection, x), in_ball);
  });
  run("epigraph via subgradient", [&](CompositionCheck& acc) {
    const Vector q = uniform_box(d + 1, 3.0, rng);
    check_query(acc, q, f.evaluate(q.head(d)) <= q[d], separate_epigraph_subgrad(f, q), in_epi);
  });
  run("epigraph via prox projection", [&](CompositionCheck& acc) {
    const Vector q = uniform_box(d + 1, 3.0, rng);
    const bool member = f.evaluate(q.head(d)) <= q[d];
    const Vector p = project_epigraph_prox(f, q, 1e-12);
    // Projection lands on the epigraph and satisfies the obtuse-angle test.
    bool ok = f.evaluate(p.head(d)) <= p[d] + 1e-9;
    for (int j = 0; j < 20 && ok; ++j) ok = (q - p).dot(in_epi() - p) <= 1e-9;
    if (!ok) ++acc.separator_errors;
    check_query(acc, q, member,
                separation_from_projection([&](const Vector& v) { return project_epigraph_prox(f, v, 1e-12); }, q),
                in_epi);
  });
  for (EpigraphAccess access : {EpigraphAccess::Subgradient, EpigraphAccess::Proximal}) {
    run(access == EpigraphAccess::Subgradient ? "lifted set, subgradient access"
                                              : "lifted set, proximal access",
        [&](CompositionCheck& acc) {
          const Vector q = uniform_box(d + 1, 2.0, rng);
          const bool member = box.contains(q.head(d)) && f.evaluate(q.head(d)) <= a * q[d];
          check_query(acc, q, member, separate_constrained_q(box, f, a, q, access), in_q);
        });
  }
  for (CompositeCase which : {CompositeCase::ProxProx, CompositeCase::SubgradProx}) {
    run(which == CompositeCase::ProxProx ? "double lift, prox/prox" : "double lift, subgradient/prox",
        [&](CompositionCheck& acc) {
          const Vector p = uniform_box(d + 2, 3.0, rng);
          const Vector x = p.head(d);
          const bool member = h.evaluate(x) <= a * p[d] && f.evaluate(x) + a * p[d] <= b * p[d + 1];
          check_query(acc, p, member, separate_qtilde(which, f, h, a, b, p), in_qt);
        });
  }

  bool ok = true;
  std::string detail;
  for (const auto& [name, acc] : rows) {
    ok = ok && acc.queries == kQueries && acc.membership_errors == 0 && acc.separator_errors == 0;
    detail += fmt("%s%s: %lld/%lld", detail.empty() ? "" : "; ", name.c_str(),
                  static_cast<long long>(acc.membership_errors + acc.separator_errors),
                  static_cast<long long>(acc.queries));
  }
  return {ok, "violations/queries " + detail};
}

// -------------------------------------------------------------------------
// 10: byte-identical CSVs from two CLI runs.

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome criterion10(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / fmt("liftsampler_accept_%d", int(::getpid()));
  fs::create_directories(dir);
  struct Case {
    const char* name;
    const char* config;
  };
  const Case cases[] = {
      {"C1_d2", R"({"instance": "C1_d2", "iterations": 300, "burn_in": 50, "seed": 1010})"},
      {"P2_d2", R"({"instance": "P2_d2", "iterations": 300, "burn_in": 50, "seed": 1011})"},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const fs::path cfg = dir / (std::string(c.name) + ".json");
    std::ofstream(cfg) << c.config << "\n";
    std::string files[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / fmt("%s_%d", c.name, run);
      const std::string cmd = "\"" + cli + "\" run --config \"" + cfg.string() + "\" --out \"" +
                              out.string() + "\" > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, std::string("CLI run failed for ") + c.name};
      files[run] = slurp(out / "samples.csv");
    }
    const bool same = !files[0].empty() && files[0] == files[1];
    ok = ok && same;
    detail += fmt("%s%s: %zu bytes %s", detail.empty() ? "" : ", ", c.name, files[0].size(),
                  same ? "identical" : "DIFFER");
  }
  fs::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <liftsampler-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "RGO unbiasedness, constrained (C1 d=1)", 120, criterion1},
      {2, "RGO unbiasedness, composite (P1 d=1)", 180, criterion2},
      {3, "stationary marginal (C1 d=1)", 300, criterion3},
      {4, "composite marginal (P1 d=1)", 300, criterion4},
      {5, "proposal complexity (C1 d=2,4,8)", 0, criterion5},
      {6, "envelope domination (C1, P1)", 0, criterion6},
      {7, "cutting-plane contract", 0, criterion7},
      {8, "oracle compositions", 0, criterion8},
      {9, "feasibility invariant", 0, [] {
         return Outcome{g_feasible.checked > 0 && g_feasible.failed == 0,
                        fmt("%lld lifted outputs checked, %lld outside the lifted set",
                            static_cast<long long>(g_feasible.checked),
                            static_cast<long long>(g_feasible.failed))};
       }},
      {10, "determinism of CSV output", 0, [&] { return criterion10(cli); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += fmt(" [over the %.0f s limit]", c.limit_s);
    }
    failures += !o.pass;
    std::printf("criterion %2d %s: %s | %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
