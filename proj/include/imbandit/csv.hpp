#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "imbandit/env.hpp"
#include "imbandit/harness.hpp"

namespace imbandit {

// Comment-prefixed metadata block written at the top of every output file:
// tool version, master seed, config hash and any echoed config keys.
// Re-running with the same seed reproduces everything below the version line
// byte for byte.
void write_metadata(std::ostream& out, const ExperimentConfig& config);

// Trace rows: run,t,arm,generated,accrued,reward,cum_regret with floats at 6
// decimal places and LF endings. cum_regret must match the trace length.
void write_trace_header(std::ostream& out);
void write_trace_rows(std::ostream& out, const Trace& trace,
                      const std::vector<double>& cum_regret);
void write_trace_csv(std::ostream& out, const Trace& trace,
                     const std::vector<double>& cum_regret);

// Curve rows: t,<label>_mean,<label>_std,... All curves must share a length.
void write_curve_csv(std::ostream& out, const std::vector<LabeledCurve>& curves);

// Histogram rows: bin,opt<k>,... one column per switching-study setting.
void write_histogram_csv(std::ostream& out,
                         const std::vector<SwitchingResult>& results);

}  // namespace imbandit
