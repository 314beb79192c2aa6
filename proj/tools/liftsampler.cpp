// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftsampler/liftsampler.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitRuntime = 4;

struct ConfigError {
  std::string message;
};

struct RunConfig {
  json instance;
  std::optional<double> eta, a, b;
  std::optional<int64_t> iterations, burn_in, proposal_budget;
  std::optional<std::string> envelope;
  uint64_t seed = 0;
  int chains = 1;
  std::optional<std::vector<double>> x0;
  std::string out = ".";
};

int status_exit(ls_status s) {
  switch (s) {
    case LS_OK: return 0;
    case LS_ERR_UNSUPPORTED: return kExitUnsupported;
    case LS_ERR_RUNTIME: return kExitRuntime;
    default: return kExitConfig;
  }
}

template <typename T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j[key].get<T>();
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError{"cannot read config " + path};
  RunConfig c;
  try {
    const json j = json::parse(in);
    if (!j.is_object()) throw ConfigError{"config must be a JSON object"};
    if (!j.contains("instance")) throw ConfigError{"config has no instance"};
    c.instance = j["instance"];
    if (!c.instance.is_string() && !c.instance.is_object()) {
      throw ConfigError{"instance must be a registry name or an inline object"};
    }
    for (const auto& [key, _] : j.items()) {
      static const char* known[] = {"instance", "eta",    "a",    "b",  "iterations",
                                    "burn_in",  "seed",   "proposal_budget",
                                    "chains",   "x0",     "out",  "envelope"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        throw ConfigError{"unknown config key '" + key + "'"};
      }
    }
    c.eta = opt<double>(j, "eta");
    c.a = opt<double>(j, "a");
    c.b = opt<double>(j, "b");
    c.iterations = opt<int64_t>(j, "iterations");
    c.burn_in = opt<int64_t>(j, "burn_in");
    c.proposal_budget = opt<int64_t>(j, "proposal_budget");
    c.seed = j.value("seed", uint64_t{0});
    c.chains = j.value("chains", 1);
    c.x0 = opt<std::vector<double>>(j, "x0");
    c.envelope = opt<std::string>(j, "envelope");
    if (c.envelope && *c.envelope != "certified" && *c.envelope != "nominal") {
      throw ConfigError{"envelope must be \"certified\" or \"nominal\""};
    }
    c.out = j.value("out", std::string("."));
  } catch (const json::exception& e) {
    throw ConfigError{std::string("config: ") + e.what()};
  }
  return c;
}

json echo(const RunConfig& c, const ls_sampler_config& s) {
  json j;
  j["instance"] = c.instance;
  j["eta"] = s.eta;
  j["a"] = s.a;
  j["b"] = s.b;
  j["iterations"] = s.iterations;
  j["burn_in"] = s.burn_in;
  j["proposal_budget"] = s.proposal_budget;
  j["envelope"] = s.envelope == LS_ENVELOPE_NOMINAL ? "nominal" : "certified";
  j["seed"] = c.seed;
  j["chains"] = c.chains;
  if (c.x0) j["x0"] = *c.x0;
  return j;
}

struct ChainResult {
  ls_status status = LS_OK;
  ls_trace* trace = nullptr;
  std::string error;
};

int cmd_run(const std::string& config_path, std::optional<uint64_t> seed,
            std::optional<int> chains, std::optional<std::string> out_dir) {
  RunConfig c;
  try {
    c = parse_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitConfig;
  }
  if (seed) c.seed = *seed;
  if (chains) c.chains = *chains;
  if (out_dir) c.out = *out_dir;
  if (c.chains < 1) {
    std::cerr << "error: chains must be at least 1\n";
    return kExitConfig;
  }

  ls_instance* instance = nullptr;
  const ls_status made = c.instance.is_string()
                             ? ls_instance_from_registry(c.instance.get<std::string>().c_str(), &instance)
                             : ls_instance_from_json(c.instance.dump().c_str(), &instance);
  if (made != LS_OK) {
    std::cerr << "error: " << ls_last_error() << "\n";
    return status_exit(made);
  }
  std::unique_ptr<ls_instance, decltype(&ls_instance_free)> holder(instance, ls_instance_free);
  const size_t d = ls_instance_dimension(instance);

  ls_sampler_config s;
  ls_sampler_config_default(instance, &s);
  if (c.eta) s.eta = *c.eta;
  if (c.a) s.a = *c.a;
  if (c.b) s.b = *c.b;
  if (c.burn_in) s.burn_in = *c.burn_in;
  s.iterations = c.iterations.value_or(s.burn_in + 1000);
  if (c.proposal_budget) s.proposal_budget = *c.proposal_budget;
  if (c.envelope) s.envelope = *c.envelope == "nominal" ? LS_ENVELOPE_NOMINAL : LS_ENVELOPE_CERTIFIED;
  if (c.x0 && c.x0->size() != d) {
    std::cerr << "error: x0 must have " << d << " coordinates\n";
    return kExitConfig;
  }

  std::error_code ec;
  fs::create_directories(c.out, ec);
  if (!fs::is_directory(c.out)) {
    std::cerr << "error: cannot create output directory " << c.out << "\n";
    return kExitConfig;
  }

  std::vector<ChainResult> results(static_cast<size_t>(c.chains));
  std::vector<std::thread> workers;
  for (int k = 0; k < c.chains; ++k) {
    workers.emplace_back([&, k] {
      ls_sampler_config mine = s;
      mine.seed = ls_chain_seed(c.seed, static_cast<uint64_t>(k));
      ChainResult& r = results[static_cast<size_t>(k)];
      r.status = ls_run(instance, &mine, c.x0 ? c.x0->data() : nullptr, &r.trace);
      if (r.status != LS_OK) r.error = ls_last_error();
    });
  }
  for (std::thread& t : workers) t.join();

  int exit_code = 0;
  json stats;
  json per_chain = json::array();
  int64_t steps = 0, proposals = 0, accepted = 0, sep = 0, sub = 0;
  double wall = 0.0;
  for (int k = 0; k < c.chains; ++k) {
    ChainResult& r = results[static_cast<size_t>(k)];
    json cj;
    cj["chain"] = k;
    cj["seed"] = ls_chain_seed(c.seed, static_cast<uint64_t>(k));
    if (r.status != LS_OK) {
      std::cerr << "error: chain " << k << ": " << r.error << "\n";
      cj["error"] = r.error;
      exit_code = std::max(exit_code, status_exit(r.status));
    }
    if (r.trace) {
      const std::string name = c.chains == 1 ? "samples.csv" : "samples_" + std::to_string(k) + ".csv";
      if (ls_trace_write_csv(r.trace, (fs::path(c.out) / name).c_str()) != LS_OK) {
        std::cerr << "error: " << ls_last_error() << "\n";
        exit_code = std::max(exit_code, kExitRuntime);
      }
      ls_trace_stats ts;
      ls_trace_get_stats(r.trace, &ts);
      cj["samples"] = ls_trace_count(r.trace);
      cj["steps"] = ts.steps;
      cj["proposals"] = ts.proposals;
      cj["accepted"] = ts.accepted;
      cj["mean_proposals"] = ts.mean_proposals;
      cj["cp_sep_calls"] = ts.cp_sep_calls;
      cj["cp_subgrad_calls"] = ts.cp_subgrad_calls;
      cj["wall_ms"] = ts.wall_ms;
      steps += ts.steps;
      proposals += ts.proposals;
      accepted += ts.accepted;
      sep += ts.cp_sep_calls;
      sub += ts.cp_subgrad_calls;
      wall = std::max(wall, ts.wall_ms);
      ls_trace_free(r.trace);
    }
    per_chain.push_back(cj);
  }
  stats["mean_proposals"] = steps > 0 ? double(proposals) / double(steps) : 0.0;
  stats["cp_sep_calls"] = sep;
  stats["cp_subgrad_calls"] = sub;
  stats["wall_ms"] = wall;
  stats["seed"] = c.seed;
  stats["steps"] = steps;
  stats["proposals"] = proposals;
  stats["accepted"] = accepted;
  stats["rejected"] = proposals - accepted;
  stats["complete"] = exit_code == 0;
  stats["chains"] = per_chain;
  stats["config"] = echo(c, s);
  std::ofstream(fs::path(c.out) / "stats.json") << stats.dump(2) << "\n";
  return exit_code;
}

int cmd_verify(const std::string& name, std::optional<int64_t> draws,
               std::optional<int64_t> chain_samples, std::optional<uint64_t> seed) {
  ls_verify_options o;
  ls_verify_options_default(&o);
  if (draws) o.draws = *draws;
  if (chain_samples) o.chain_samples = *chain_samples;
  if (seed) o.seed = *seed;
  ls_verify_report* report = nullptr;
  const ls_status st = ls_verify(name.c_str(), &o, &report);
  if (st != LS_OK) {
    std::cerr << "error: " << ls_last_error() << "\n";
    return status_exit(st);
  }
  std::printf("verify %s\n", name.c_str());
  for (size_t i = 0; i < ls_verify_report_rows(report); ++i) {
    const char* label = nullptr;
    double value = 0.0, threshold = 0.0;
    int pass = 0;
    ls_verify_report_row(report, i, &label, &value, &threshold, &pass);
    std::printf("  %-4s %-52s %12.6g  (threshold %g)\n", pass ? "PASS" : "FAIL", label, value,
                threshold);
  }
  const int ok = ls_verify_report_pass(report);
  ls_verify_report_free(report);
  std::printf("%s\n", ok ? "all checks passed" : "some checks failed");
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifted proximal sampler for constrained and composite log-concave targets"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<int> chains;
  std::optional<std::string> out_dir;
  CLI::App* run = app.add_subcommand("run", "run chains from a JSON config");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--chains", chains, "number of chains");
  run->add_option("--out", out_dir, "output directory");

  std::string name;
  std::optional<int64_t> draws, chain_samples;
  std::optional<uint64_t> verify_seed;
  CLI::App* verify = app.add_subcommand("verify", "compare an instance against reference oracles");
  verify->add_option("name", name, "registry instance")->required();
  verify->add_option("--draws", draws, "RGO draws per seed");
  verify->add_option("--chain-samples", chain_samples, "kept chain samples");
  verify->add_option("--seed", verify_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (*run) return cmd_run(config_path, seed, chains, out_dir);
  return cmd_verify(name, draws, chain_samples, verify_seed);
}
