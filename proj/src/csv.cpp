#include "imbandit/csv.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "imbandit/version.hpp"

namespace imbandit {

namespace {

std::ostream& fixed6(std::ostream& out) {
  return out << std::fixed << std::setprecision(6);
}

}  // namespace

void write_metadata(std::ostream& out, const ExperimentConfig& config) {
  out << "# " << kToolName << " " << kToolVersion << "\n";
  out << "# master_seed=" << config.master_seed << " config_hash=" << std::hex
      << config.config_hash << std::dec << "\n";
  for (const auto& [key, value] : config.metadata)
    out << "# " << key << "=" << value << "\n";
}

void write_trace_header(std::ostream& out) {
  out << "run,t,arm,generated,accrued,reward,cum_regret\n";
}

void write_trace_rows(std::ostream& out, const Trace& trace,
                      const std::vector<double>& cum_regret) {
  if (cum_regret.size() != trace.records.size())
    throw std::invalid_argument("cum_regret length does not match trace");
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const RoundRecord& rec = trace.records[i];
    out << trace.run_index << "," << rec.t << "," << rec.arm << ",";
    fixed6(out) << rec.generated << "," << (rec.accrued ? 1 : 0) << ",";
    fixed6(out) << rec.reward << ",";
    fixed6(out) << cum_regret[i] << "\n";
  }
}

void write_trace_csv(std::ostream& out, const Trace& trace,
                     const std::vector<double>& cum_regret) {
  write_trace_header(out);
  write_trace_rows(out, trace, cum_regret);
}

void write_curve_csv(std::ostream& out, const std::vector<LabeledCurve>& curves) {
  if (curves.empty()) throw std::invalid_argument("no curves to write");
  const std::size_t len = curves.front().curve.mean.size();
  for (const auto& lc : curves) {
    if (lc.curve.mean.size() != len || lc.curve.stddev.size() != len)
      throw std::invalid_argument("curve length mismatch: " + lc.label);
  }
  out << "t";
  for (const auto& lc : curves)
    out << "," << lc.label << "_mean," << lc.label << "_std";
  out << "\n";
  for (std::size_t i = 0; i < len; ++i) {
    out << (i + 1);
    for (const auto& lc : curves) {
      out << ",";
      fixed6(out) << lc.curve.mean[i] << ",";
      fixed6(out) << lc.curve.stddev[i];
    }
    out << "\n";
  }
}

void write_histogram_csv(std::ostream& out,
                         const std::vector<SwitchingResult>& results) {
  if (results.empty()) throw std::invalid_argument("no histograms to write");
  const std::size_t bins = results.front().bins.size();
  for (const auto& r : results)
    if (r.bins.size() != bins)
      throw std::invalid_argument("histogram length mismatch");
  out << "bin";
  for (const auto& r : results) out << ",opt" << r.num_optimal;
  out << "\n";
  for (std::size_t b = 0; b < bins; ++b) {
    out << b;
    for (const auto& r : results) out << "," << r.bins[b];
    out << "\n";
  }
}

}  // namespace imbandit
