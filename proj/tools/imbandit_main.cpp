// Command-line front end: seeded Monte Carlo simulations, the three shipped
// experiment presets, and the closed-form bound calculators. CSV outputs are
// reproducible byte for byte from (config, master seed).

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imbandit/bounds.hpp"
#include "imbandit/config.hpp"
#include "imbandit/csv.hpp"
#include "imbandit/harness.hpp"
#include "imbandit/schedule.hpp"
#include "imbandit/version.hpp"

namespace fs = std::filesystem;
using namespace imbandit;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  return out;
}

void apply_overrides(ExperimentConfig& cfg, std::optional<std::uint64_t> seed,
                     std::optional<int> runs) {
  if (seed) cfg.master_seed = *seed;
  if (runs) {
    if (*runs < 1) throw ConfigError("--runs must be >= 1");
    cfg.runs = *runs;
    cfg.metadata["runs"] = std::to_string(cfg.runs);
  }
}

void print_final_regrets(const std::vector<LabeledCurve>& curves) {
  std::cout << std::fixed << std::setprecision(3);
  for (const auto& lc : curves)
    std::cout << "  final regret " << lc.label << " = " << lc.curve.mean.back()
              << " (std " << lc.curve.stddev.back() << ")\n";
}

void run_simulate(const ExperimentConfig& cfg, const fs::path& out_dir,
                  bool export_traces) {
  fs::create_directories(out_dir);
  switch (cfg.mode) {
    case ExperimentMode::Single: {
      const AggregateCurve curve = run_monte_carlo(cfg);
      std::vector<LabeledCurve> curves{{cfg.policy.name, curve}};
      auto out = open_output(out_dir / "curve.csv");
      write_metadata(out, cfg);
      write_curve_csv(out, curves);
      std::cout << "wrote " << (out_dir / "curve.csv").string() << "\n";
      print_final_regrets(curves);
      if (export_traces) {
        auto tout = open_output(out_dir / "traces.csv");
        write_metadata(tout, cfg);
        write_trace_header(tout);
        for (int run = 0; run < cfg.runs; ++run) {
          const Trace trace = run_single(cfg, run);
          write_trace_rows(tout, trace,
                           cumulative_regret(trace, cfg.instance,
                                             cfg.regret_mode));
        }
        std::cout << "wrote " << (out_dir / "traces.csv").string() << "\n";
      }
      break;
    }
    case ExperimentMode::Switching: {
      const auto results = switching_experiment(cfg);
      auto out = open_output(out_dir / "switching_hist.csv");
      write_metadata(out, cfg);
      out << std::fixed << std::setprecision(6);
      for (const auto& r : results)
        out << "# mean_bin_opt" << r.num_optimal << "=" << r.mean_bin << "\n";
      write_histogram_csv(out, results);
      std::cout << "wrote " << (out_dir / "switching_hist.csv").string() << "\n";
      std::cout << std::fixed << std::setprecision(3);
      for (const auto& r : results)
        std::cout << "  mean same-arm count, " << r.num_optimal
                  << " optimal arm(s): " << r.mean_bin << "\n";
      break;
    }
    case ExperimentMode::Buckets: {
      const auto curves = bucket_size_sweep(cfg, cfg.capacities);
      auto out = open_output(out_dir / "bucket_curves.csv");
      write_metadata(out, cfg);
      write_curve_csv(out, curves);
      std::cout << "wrote " << (out_dir / "bucket_curves.csv").string() << "\n";
      print_final_regrets(curves);
      break;
    }
    case ExperimentMode::Impairment: {
      const auto curves = impairment_sweep(cfg, cfg.impairment_means);
      auto out = open_output(out_dir / "impairment_curves.csv");
      write_metadata(out, cfg);
      write_curve_csv(out, curves);
      std::cout << "wrote " << (out_dir / "impairment_curves.csv").string()
                << "\n";
      print_final_regrets(curves);
      break;
    }
  }
}

fs::path resolve_preset(const std::string& presets_dir,
                        const std::string& name) {
  const std::string file = "fig_" + name + ".ini";
  // Probe upward so running from a build directory still finds presets/.
  for (const char* prefix : {"", "../", "../../", "../../../"}) {
    const fs::path candidate = fs::path(prefix) / presets_dir / file;
    if (fs::exists(candidate)) return candidate;
  }
  throw ConfigError("cannot find preset " + file + " under '" + presets_dir +
                    "' (searched ./, ../, ../../, ../../../)");
}

void run_bounds(const ExperimentConfig& cfg, std::optional<double> lambda_opt) {
  const BanditInstance& inst = cfg.instance;
  const auto T = static_cast<double>(inst.horizon);
  const double lambda =
      lambda_opt ? *lambda_opt : reference_lambda(inst.num_arms(), T);
  if (!(lambda > 0.0 && lambda < 1.0))
    throw ConfigError("--lambda must lie in (0, 1)");
  const OrderScaleBounds co =
      order_scale_bounds(inst.num_arms(), T, inst.d_max(), inst.expected_d());
  std::cout << std::setprecision(10);
  std::cout << "K               = " << inst.num_arms() << "\n";
  std::cout << "T               = " << inst.horizon << "\n";
  std::cout << "d_max           = " << inst.d_max() << "\n";
  std::cout << "E[d]            = " << inst.expected_d() << "\n";
  std::cout << "epsilon         = " << epsilon(inst) << "\n";
  std::cout << "lambda          = " << lambda << "\n";
  std::cout << "bound_phased_se = "
            << phased_se_bound(inst, T, lambda, inst.d_max()) << "\n";
  std::cout << "bound_ucbr      = " << ucbr_bound(inst, T, lambda, inst.d_max())
            << "\n";
  std::cout << "bound_ucbr_plus = "
            << ucbr_plus_bound(inst, T, lambda, inst.expected_d()) << "\n";
  std::cout << "scale_support   = " << co.support_known << "\n";
  std::cout << "scale_expected  = " << co.expectation_known << "\n";
}

void run_epsilon(const ExperimentConfig& cfg) {
  const GapInfo info = gaps(cfg.instance);
  std::cout << std::setprecision(10);
  std::cout << "mu_star = " << info.mu_star << "\n";
  std::cout << "j_star  = " << info.j_star << "\n";
  std::cout << "gaps    =";
  for (double g : info.gaps) std::cout << " " << g;
  std::cout << "\n";
  std::cout << "epsilon = " << epsilon(cfg.instance) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               " - bandit simulation under play-frequency reward gating"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", presets_dir = "presets";
  std::string experiment_name;
  bool export_traces = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  std::optional<double> lambda;

  auto* sim = app.add_subcommand("simulate", "run a Monte Carlo experiment");
  sim->add_option("--config", config_path, "INI config file")->required();
  sim->add_option("--seed", seed, "override the master seed");
  sim->add_option("--runs", runs, "override the run count");
  sim->add_option("--out", out_dir, "output directory (default: out)");
  sim->add_flag("--traces", export_traces, "also export per-run traces");

  auto* exp = app.add_subcommand("experiment", "run a shipped preset");
  exp->add_option("name", experiment_name, "switching | buckets | impairment")
      ->required()
      ->check(CLI::IsMember({"switching", "buckets", "impairment"}));
  exp->add_option("--out", out_dir, "output directory (default: out)");
  exp->add_option("--presets", presets_dir, "presets directory");
  exp->add_option("--seed", seed, "override the master seed");
  exp->add_option("--runs", runs, "override the run count");

  auto* bnd = app.add_subcommand("bounds", "print closed-form regret bounds");
  bnd->add_option("--config", config_path, "INI config file")->required();
  bnd->add_option("--lambda", lambda, "gap threshold (default sqrt(K lnT / T))");

  auto* eps = app.add_subcommand("epsilon", "print gaps and the dissimilarity");
  eps->add_option("--config", config_path, "INI config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (sim->parsed()) {
      ExperimentConfig cfg = load_config_file(config_path);
      apply_overrides(cfg, seed, runs);
      run_simulate(cfg, out_dir, export_traces);
    } else if (exp->parsed()) {
      const fs::path preset = resolve_preset(presets_dir, experiment_name);
      ExperimentConfig cfg = load_config_file(preset.string());
      apply_overrides(cfg, seed, runs);
      run_simulate(cfg, out_dir, false);
    } else if (bnd->parsed()) {
      run_bounds(load_config_file(config_path), lambda);
    } else if (eps->parsed()) {
      run_epsilon(load_config_file(config_path));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
