#pragma once

#include <stdexcept>
#include <string>

#include "imbandit/harness.hpp"

namespace imbandit {

// Raised on any config problem: unknown key, type mismatch, or constraint
// violation. Messages carry key names and 1-based line numbers.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message) {}
};

// FNV-1a over the raw config text; embedded in output metadata.
std::uint64_t config_hash(const std::string& text);

// Parses INI-style text with sections [instance], [policy], [experiment].
// Unknown sections or keys are hard errors. Defaults: runs = 30, seed = 1,
// regret = mean_optimal, phase_mean = empirical, window = 20, horizon = 5000,
// impairment = none, mode = single.
ExperimentConfig parse_config(const std::string& text);

// Reads the file and parses it.
ExperimentConfig load_config_file(const std::string& path);

}  // namespace imbandit
