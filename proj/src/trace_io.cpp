// Copyright 2026 The liftsampler Authors
// Licensed under Apache 2.0

#include "liftsampler/trace_io.hpp"

#include <cstdio>
#include <fstream>

namespace liftsampler {

namespace {

void put(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << ',' << buf;
}

}  // namespace

void write_csv(const Trace& trace, std::ostream& out) {
  const bool lifted = !trace.lifts.empty() || trace.samples.empty();
  if (!lifted && !trace.samples.empty()) {
    throw PreconditionError("trace was recorded without lifted coordinates");
  }
  out << "step";
  for (Index i = 1; i <= trace.dimension; ++i) out << ",x" << i;
  for (Index i = 1; i <= trace.lift_count; ++i) out << ",lift" << i;
  out << '\n';
  for (std::size_t k = 0; k < trace.samples.size(); ++k) {
    out << trace.steps[k];
    for (Index i = 0; i < trace.samples[k].size(); ++i) put(out, trace.samples[k][i]);
    for (Index i = 0; i < trace.lifts[k].size(); ++i) put(out, trace.lifts[k][i]);
    out << '\n';
  }
}

void write_csv(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_csv(trace, out);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace liftsampler
