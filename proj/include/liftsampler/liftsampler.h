/* Copyright 2026 The liftsampler Authors
   Licensed under Apache 2.0 */

#ifndef LIFTSAMPLER_H_
#define LIFTSAMPLER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LS_BUILDING_LIBRARY)
#define LS_API __attribute__((visibility("default")))
#else
#define LS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LS_OK = 0,
  LS_ERR_INVALID_ARGUMENT = 1,
  LS_ERR_CONFIG = 2,
  LS_ERR_UNSUPPORTED = 3,
  LS_ERR_RUNTIME = 4
} ls_status;

typedef struct ls_instance ls_instance;
typedef struct ls_trace ls_trace;
typedef struct ls_verify_report ls_verify_report;

typedef enum { LS_ENVELOPE_CERTIFIED = 0, LS_ENVELOPE_NOMINAL = 1 } ls_envelope;

typedef struct {
  double eta;
  double a;
  double b;
  int64_t iterations;
  int64_t burn_in;
  uint64_t seed;
  int64_t proposal_budget;
  ls_envelope envelope;
  int store_lifted;
} ls_sampler_config;

typedef struct {
  int64_t steps;
  int64_t proposals;
  int64_t accepted;
  int64_t cp_sep_calls;
  int64_t cp_subgrad_calls;
  double mean_proposals;
  double wall_ms;
} ls_trace_stats;

typedef struct {
  int64_t draws;
  int64_t chain_samples;
  uint64_t seed;
} ls_verify_options;

/* Message of the last failed call on this thread ("" if none). */
LS_API const char* ls_last_error(void);
LS_API const char* ls_status_name(ls_status status);

LS_API ls_status ls_instance_from_registry(const char* name, ls_instance** out);
LS_API ls_status ls_instance_from_json(const char* json, ls_instance** out);
LS_API void ls_instance_free(ls_instance* instance);
LS_API size_t ls_instance_dimension(const ls_instance* instance);
LS_API int ls_instance_is_composite(const ls_instance* instance);
LS_API const char* ls_instance_name(const ls_instance* instance);
/* JSON form of the instance, accepted back by ls_instance_from_json. */
LS_API const char* ls_instance_json(const ls_instance* instance);

/* eta = 1/d^2 (or the instance's own step), a = b = d, burn_in = max(10 d^2, 1000). */
LS_API ls_status ls_sampler_config_default(const ls_instance* instance, ls_sampler_config* out);
/* splitmix64 of base + index. */
LS_API uint64_t ls_chain_seed(uint64_t base, uint64_t index);

/* Runs one chain from x0 (NULL means the origin). On a sampler failure the
   partial trace is still returned through *out together with LS_ERR_RUNTIME. */
LS_API ls_status ls_run(const ls_instance* instance, const ls_sampler_config* config,
                        const double* x0, ls_trace** out);
LS_API void ls_trace_free(ls_trace* trace);
LS_API size_t ls_trace_count(const ls_trace* trace);
LS_API size_t ls_trace_dimension(const ls_trace* trace);
LS_API size_t ls_trace_lift_count(const ls_trace* trace);
/* x needs dimension slots, lift needs lift_count slots; either may be NULL. */
LS_API ls_status ls_trace_get_sample(const ls_trace* trace, size_t index, int64_t* step,
                                     double* x, double* lift);
LS_API ls_status ls_trace_get_stats(const ls_trace* trace, ls_trace_stats* out);
/* NULL when the run completed. */
LS_API const char* ls_trace_error(const ls_trace* trace);
LS_API ls_status ls_trace_write_csv(const ls_trace* trace, const char* path);

LS_API void ls_verify_options_default(ls_verify_options* out);
LS_API ls_status ls_verify(const char* name, const ls_verify_options* options,
                           ls_verify_report** out);
LS_API size_t ls_verify_report_rows(const ls_verify_report* report);
LS_API ls_status ls_verify_report_row(const ls_verify_report* report, size_t index,
                                      const char** label, double* value, double* threshold,
                                      int* pass);
LS_API int ls_verify_report_pass(const ls_verify_report* report);
LS_API void ls_verify_report_free(ls_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LIFTSAMPLER_H_ */
