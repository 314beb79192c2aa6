// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/liftsampler.h"

#include <memory>
#include <string>

#include "liftsampler/instances.hpp"
#include "liftsampler/log.hpp"
#include "liftsampler/sampler.hpp"
#include "liftsampler/trace_io.hpp"
#include "liftsampler/verify.hpp"

namespace ls = liftsampler;

struct ls_instance {
  ls::InstanceSpec spec;
  ls::Target target;
  std::string json;
};

struct ls_trace {
  ls::Trace trace;
};

struct ls_verify_report {
  ls::VerifyReport report;
};

namespace {

thread_local std::string last_error;

ls_status fail(ls_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Body>
ls_status guarded(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const ls::ConfigError& e) {
    return fail(LS_ERR_CONFIG, e.what());
  } catch (const ls::UnsupportedError& e) {
    return fail(LS_ERR_UNSUPPORTED, e.what());
  } catch (const ls::PreconditionError& e) {
    return fail(LS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LS_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(LS_ERR_RUNTIME, "unknown error");
  }
}

ls_status make_instance(ls::InstanceSpec spec, ls_instance** out) {
  ls::Target target = ls::build_target(spec);
  std::string json = ls::instance_to_json(spec);
  *out = new ls_instance{std::move(spec), std::move(target), std::move(json)};
  return LS_OK;
}

ls::SamplerConfig from_c(const ls_sampler_config& c) {
  ls::SamplerConfig s;
  s.eta = c.eta;
  s.a = c.a;
  s.b = c.b;
  s.iterations = c.iterations;
  s.burn_in = c.burn_in;
  s.seed = c.seed;
  s.proposal_budget = c.proposal_budget;
  s.envelope = c.envelope == LS_ENVELOPE_NOMINAL ? ls::Envelope::Nominal : ls::Envelope::Certified;
  s.store_lifted = c.store_lifted != 0;
  return s;
}

}  // namespace

extern "C" {

const char* ls_last_error(void) { return last_error.c_str(); }

const char* ls_status_name(ls_status status) {
  switch (status) {
    case LS_OK: return "ok";
    case LS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LS_ERR_CONFIG: return "config error";
    case LS_ERR_UNSUPPORTED: return "unsupported";
    case LS_ERR_RUNTIME: return "runtime error";
  }
  return "unknown";
}

ls_status ls_instance_from_registry(const char* name, ls_instance** out) {
  if (!name || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return make_instance(ls::find_instance(name), out); });
}

ls_status ls_instance_from_json(const char* json, ls_instance** out) {
  if (!json || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return make_instance(ls::parse_instance_json(json), out); });
}

void ls_instance_free(ls_instance* instance) { delete instance; }

size_t ls_instance_dimension(const ls_instance* instance) {
  return instance ? static_cast<size_t>(instance->spec.dimension) : 0;
}

int ls_instance_is_composite(const ls_instance* instance) {
  return instance && instance->spec.kind == ls::InstanceKind::Composite;
}

const char* ls_instance_name(const ls_instance* instance) {
  return instance ? instance->spec.name.c_str() : nullptr;
}

const char* ls_instance_json(const ls_instance* instance) {
  return instance ? instance->json.c_str() : nullptr;
}

ls_status ls_sampler_config_default(const ls_instance* instance, ls_sampler_config* out) {
  if (!instance || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  const ls::SamplerConfig s = ls::SamplerConfig::defaults(instance->spec.dimension);
  out->eta = instance->spec.eta.value_or(s.eta);
  out->a = s.a;
  out->b = s.b;
  out->iterations = s.iterations;
  out->burn_in = s.burn_in;
  out->seed = s.seed;
  out->proposal_budget = s.proposal_budget;
  out->envelope = LS_ENVELOPE_CERTIFIED;
  out->store_lifted = 1;
  return LS_OK;
}

uint64_t ls_chain_seed(uint64_t base, uint64_t index) { return ls::chain_seed(base, index); }

ls_status ls_run(const ls_instance* instance, const ls_sampler_config* config, const double* x0,
                 ls_trace** out) {
  if (!instance || !config || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const ls::SamplerConfig c = from_c(*config);
    c.validate();
    const ls::Index d = instance->spec.dimension;
    std::optional<ls::Vector> start;
    if (x0) start = Eigen::Map<const ls::Vector>(x0, d);
    auto trace = std::make_unique<ls_trace>();
    if (const auto* t = std::get_if<ls::ConstrainedTarget>(&instance->target)) {
      trace->trace = ls::run_constrained(c, *t, start);
    } else {
      trace->trace = ls::run_composite(c, std::get<ls::CompositeTarget>(instance->target), start);
    }
    const std::string error = trace->trace.error;
    *out = trace.release();
    if (!error.empty()) {
      ls::log(ls::LogLevel::Error, "sampler stopped: " + error);
      return fail(LS_ERR_RUNTIME, error);
    }
    return LS_OK;
  });
}

void ls_trace_free(ls_trace* trace) { delete trace; }

size_t ls_trace_count(const ls_trace* trace) { return trace ? trace->trace.samples.size() : 0; }

size_t ls_trace_dimension(const ls_trace* trace) {
  return trace ? static_cast<size_t>(trace->trace.dimension) : 0;
}

size_t ls_trace_lift_count(const ls_trace* trace) {
  return trace ? static_cast<size_t>(trace->trace.lift_count) : 0;
}

ls_status ls_trace_get_sample(const ls_trace* trace, size_t index, int64_t* step, double* x,
                              double* lift) {
  if (!trace) return fail(LS_ERR_INVALID_ARGUMENT, "null trace");
  const ls::Trace& t = trace->trace;
  if (index >= t.samples.size()) return fail(LS_ERR_INVALID_ARGUMENT, "sample index out of range");
  if (step) *step = t.steps[index];
  if (x) ls::Vector::Map(x, t.dimension) = t.samples[index];
  if (lift) {
    if (t.lifts.empty()) return fail(LS_ERR_INVALID_ARGUMENT, "trace has no lifted coordinates");
    ls::Vector::Map(lift, t.lift_count) = t.lifts[index];
  }
  return LS_OK;
}

ls_status ls_trace_get_stats(const ls_trace* trace, ls_trace_stats* out) {
  if (!trace || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  const ls::Trace& t = trace->trace;
  out->steps = static_cast<int64_t>(t.step_stats.size());
  out->proposals = t.totals.proposals;
  out->accepted = out->steps;
  out->cp_sep_calls = t.totals.cp_separation_calls;
  out->cp_subgrad_calls = t.totals.cp_subgradient_calls;
  out->mean_proposals = t.mean_proposals();
  out->wall_ms = t.wall_ms;
  return LS_OK;
}

const char* ls_trace_error(const ls_trace* trace) {
  if (!trace || trace->trace.complete()) return nullptr;
  return trace->trace.error.c_str();
}

ls_status ls_trace_write_csv(const ls_trace* trace, const char* path) {
  if (!trace || !path) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ls::write_csv(trace->trace, std::string(path));
    return LS_OK;
  });
}

void ls_verify_options_default(ls_verify_options* out) {
  if (!out) return;
  const ls::VerifyOptions o;
  out->draws = o.draws;
  out->chain_samples = o.chain_samples;
  out->seed = o.seed;
}

ls_status ls_verify(const char* name, const ls_verify_options* options, ls_verify_report** out) {
  if (!name || !out) return fail(LS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    ls::VerifyOptions o;
    if (options) {
      if (options->draws <= 0 || options->chain_samples <= 0) {
        return fail(LS_ERR_INVALID_ARGUMENT, "verify sizes must be positive");
      }
      o.draws = options->draws;
      o.chain_samples = options->chain_samples;
      o.seed = options->seed;
    }
    *out = new ls_verify_report{ls::verify_instance(std::string(name), o)};
    return LS_OK;
  });
}

size_t ls_verify_report_rows(const ls_verify_report* report) {
  return report ? report->report.rows.size() : 0;
}

ls_status ls_verify_report_row(const ls_verify_report* report, size_t index, const char** label,
                               double* value, double* threshold, int* pass) {
  if (!report) return fail(LS_ERR_INVALID_ARGUMENT, "null report");
  if (index >= report->report.rows.size()) return fail(LS_ERR_INVALID_ARGUMENT, "row out of range");
  const ls::VerifyRow& r = report->report.rows[index];
  if (label) *label = r.label.c_str();
  if (value) *value = r.value;
  if (threshold) *threshold = r.threshold;
  if (pass) *pass = r.pass ? 1 : 0;
  return LS_OK;
}

int ls_verify_report_pass(const ls_verify_report* report) {
  return report && report->report.all_pass();
}

void ls_verify_report_free(ls_verify_report* report) { delete report; }

}  // extern "C"
