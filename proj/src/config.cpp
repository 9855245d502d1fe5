#include "imbandit/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace imbandit {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

struct RawConfig {
  std::map<std::string, Section> sections;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

RawConfig tokenize(const std::string& text) {
  static const std::set<std::string> kSections = {"instance", "policy",
                                                  "experiment"};
  RawConfig raw;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      if (!kSections.count(section))
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown section [" + section + "]");
      raw.sections[section];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside any section");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    auto& sec = raw.sections[section];
    if (sec.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "' (first at line " +
                        std::to_string(sec[key].line) + ")");
    sec[key] = Entry{value, lineno, false};
  }
  return raw;
}

// Typed access with key/line reporting.
class Reader {
 public:
  Reader(RawConfig& raw, std::string section)
      : raw_(raw), section_(std::move(section)) {}

  bool has(const std::string& key) const {
    auto it = raw_.sections.find(section_);
    return it != raw_.sections.end() && it->second.count(key);
  }

  int line(const std::string& key) const { return entry(key).line; }

  std::string get_string(const std::string& key) {
    return take(key).value;
  }

  long long get_int(const std::string& key) {
    const Entry& e = take(key);
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      fail(key, e.line, "expected an integer, got '" + e.value + "'");
    }
  }

  std::uint64_t get_uint(const std::string& key) {
    const Entry& e = take(key);
    try {
      std::size_t pos = 0;
      const std::uint64_t v = std::stoull(e.value, &pos);
      if (pos != e.value.size() || e.value[0] == '-')
        throw std::invalid_argument("");
      return v;
    } catch (...) {
      fail(key, e.line, "expected a non-negative integer, got '" + e.value + "'");
    }
  }

  double get_real(const std::string& key) {
    const Entry& e = take(key);
    try {
      std::size_t pos = 0;
      const double v = std::stod(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      fail(key, e.line, "expected a real number, got '" + e.value + "'");
    }
  }

  std::vector<double> get_real_list(const std::string& key) {
    const Entry& e = take(key);
    std::vector<double> out;
    std::istringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      try {
        std::size_t pos = 0;
        out.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("");
      } catch (...) {
        fail(key, e.line, "expected a comma-separated list of reals");
      }
    }
    if (out.empty()) fail(key, e.line, "empty list");
    return out;
  }

  std::vector<int> get_int_list(const std::string& key) {
    const Entry& e = take(key);
    std::vector<int> out;
    std::istringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      try {
        std::size_t pos = 0;
        out.push_back(std::stoi(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("");
      } catch (...) {
        fail(key, e.line, "expected a comma-separated list of integers");
      }
    }
    if (out.empty()) fail(key, e.line, "empty list");
    return out;
  }

  [[noreturn]] void fail(const std::string& key, int line,
                         const std::string& what) const {
    throw ConfigError("[" + section_ + "] " + key + " (line " +
                      std::to_string(line) + "): " + what);
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    fail(key, line(key), what);
  }

  [[noreturn]] void missing(const std::string& key) const {
    throw ConfigError("[" + section_ + "] missing required key '" + key + "'");
  }

 private:
  const Entry& entry(const std::string& key) const {
    return raw_.sections.at(section_).at(key);
  }

  Entry& take(const std::string& key) {
    auto sec = raw_.sections.find(section_);
    if (sec == raw_.sections.end() || !sec->second.count(key)) missing(key);
    Entry& e = sec->second.at(key);
    e.used = true;
    return e;
  }

  RawConfig& raw_;
  std::string section_;
};

void reject_unused(const RawConfig& raw) {
  for (const auto& [section, entries] : raw.sections) {
    for (const auto& [key, entry] : entries) {
      if (!entry.used)
        throw ConfigError("[" + section + "] unknown key '" + key +
                          "' (line " + std::to_string(entry.line) + ")");
    }
  }
}

std::string format_means(const std::vector<double>& means) {
  std::ostringstream oss;
  oss << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < means.size(); ++i) {
    if (i) oss << ",";
    oss << means[i];
  }
  return oss.str();
}

ImpairmentSpec parse_impairment(Reader& inst, int window) {
  const std::string kind = inst.has("impairment")
                               ? inst.get_string("impairment")
                               : std::string("none");
  const auto forbid = [&](const char* key) {
    if (inst.has(key))
      inst.fail(key, std::string("not valid with impairment = ") + kind);
  };
  ImpairmentSpec spec;
  if (kind == "none") {
    for (const char* k : {"d_value", "d_lo", "d_hi", "d_mean", "d_stddev",
                          "d_stddev_scale", "d_max"})
      forbid(k);
    return ImpairmentSpec::none();
  }
  if (kind == "constant") {
    for (const char* k :
         {"d_lo", "d_hi", "d_mean", "d_stddev", "d_stddev_scale", "d_max"})
      forbid(k);
    if (!inst.has("d_value")) inst.missing("d_value");
    const long long v = inst.get_int("d_value");
    if (v < 0) inst.fail("d_value", "must be >= 0");
    spec = ImpairmentSpec::constant(static_cast<int>(v));
  } else if (kind == "uniform") {
    for (const char* k : {"d_value", "d_mean", "d_stddev", "d_stddev_scale",
                          "d_max"})
      forbid(k);
    if (!inst.has("d_lo")) inst.missing("d_lo");
    if (!inst.has("d_hi")) inst.missing("d_hi");
    const long long lo = inst.get_int("d_lo");
    const long long hi = inst.get_int("d_hi");
    if (lo < 0 || hi < lo)
      inst.fail("d_lo", "need 0 <= d_lo <= d_hi");
    spec = ImpairmentSpec::uniform_int(static_cast<int>(lo),
                                       static_cast<int>(hi));
  } else if (kind == "absnormal") {
    for (const char* k : {"d_value", "d_lo", "d_hi", "d_stddev_scale"})
      forbid(k);
    if (!inst.has("d_mean")) inst.missing("d_mean");
    if (!inst.has("d_stddev")) inst.missing("d_stddev");
    if (!inst.has("d_max")) inst.missing("d_max");
    const double mean = inst.get_real("d_mean");
    const double stddev = inst.get_real("d_stddev");
    const long long d_max = inst.get_int("d_max");
    if (mean < 0.0) inst.fail("d_mean", "must be >= 0");
    if (stddev <= 0.0) inst.fail("d_stddev", "must be > 0");
    if (d_max < 0) inst.fail("d_max", "must be >= 0");
    spec = ImpairmentSpec::abs_normal(mean, stddev, static_cast<int>(d_max));
  } else {
    inst.fail("impairment",
              "expected none | constant | uniform | absnormal, got '" + kind +
                  "'");
  }
  if (spec.d_max > window) {
    const std::string d_key = kind == "constant" ? "d_value"
                              : kind == "uniform" ? "d_hi"
                                                  : "d_max";
    const std::string window_at =
        inst.has("window") ? "line " + std::to_string(inst.line("window"))
                           : std::string("default");
    throw ConfigError("[instance] " + d_key + " (line " +
                      std::to_string(inst.line(d_key)) + ") = " +
                      std::to_string(spec.d_max) + " exceeds window (" +
                      window_at + ") = " + std::to_string(window));
  }
  return spec;
}

}  // namespace

std::uint64_t config_hash(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

ExperimentConfig parse_config(const std::string& text) {
  RawConfig raw = tokenize(text);
  if (!raw.sections.count("instance"))
    throw ConfigError("missing [instance] section");
  if (!raw.sections.count("policy"))
    throw ConfigError("missing [policy] section");

  Reader inst(raw, "instance");
  Reader pol(raw, "policy");
  Reader exp(raw, "experiment");

  ExperimentConfig cfg;
  InstanceSpec& spec = cfg.instance_spec;

  // --- [instance] ---
  spec.window = 20;
  if (inst.has("window")) {
    const long long w = inst.get_int("window");
    if (w < 1) inst.fail("window", "must be >= 1");
    spec.window = static_cast<int>(w);
  }
  spec.horizon = 5000;
  if (inst.has("horizon")) {
    const long long T = inst.get_int("horizon");
    if (T < 2) inst.fail("horizon", "must be >= 2");
    spec.horizon = T;
  }

  const bool has_means = inst.has("means");
  const bool has_random = inst.has("num_arms");
  if (has_means == has_random)
    throw ConfigError(
        "[instance] give exactly one of 'means' or 'num_arms' (+ instance_seed)");
  if (has_means) {
    spec.means = inst.get_real_list("means");
    if (spec.means.size() < 2) inst.fail("means", "need at least 2 arms");
    for (double m : spec.means)
      if (!(m >= 0.0 && m <= 1.0))
        inst.fail("means", "every mean must lie in [0,1]");
    for (const char* k : {"instance_seed", "num_optimal"})
      if (inst.has(k))
        inst.fail(k, "only valid with num_arms (random instances)");
  } else {
    const long long k = inst.get_int("num_arms");
    if (k < 2) inst.fail("num_arms", "need at least 2 arms");
    spec.num_arms = static_cast<int>(k);
    if (!inst.has("instance_seed")) inst.missing("instance_seed");
    spec.instance_seed = inst.get_uint("instance_seed");
    if (inst.has("num_optimal")) {
      const long long n = inst.get_int("num_optimal");
      if (n < 1 || n > k) inst.fail("num_optimal", "must lie in [1, num_arms]");
      spec.num_optimal = static_cast<int>(n);
    }
  }
  spec.impairment = parse_impairment(inst, spec.window);

  // --- [policy] ---
  if (!pol.has("name")) pol.missing("name");
  cfg.policy.name = pol.get_string("name");
  static const std::set<std::string> kPolicies = {"ucb1", "se", "phased_se",
                                                  "ucbr", "ucbr_plus"};
  if (!kPolicies.count(cfg.policy.name))
    pol.fail("name", "unknown policy '" + cfg.policy.name + "'");
  if (pol.has("bucket_capacity")) {
    if (cfg.policy.name != "phased_se")
      pol.fail("bucket_capacity", "only valid for phased_se");
    const long long cap = pol.get_int("bucket_capacity");
    if (cap < 1) pol.fail("bucket_capacity", "must be >= 1");
    cfg.policy.bucket_capacity = static_cast<int>(cap);
  }
  if (pol.has("phase_mean")) {
    static const std::set<std::string> kPhased = {"phased_se", "ucbr",
                                                  "ucbr_plus"};
    if (!kPhased.count(cfg.policy.name))
      pol.fail("phase_mean", "only valid for phase-based policies");
    const std::string mode = pol.get_string("phase_mean");
    if (mode == "empirical")
      cfg.policy.phase_mean = PhaseMeanMode::Empirical;
    else if (mode == "target")
      cfg.policy.phase_mean = PhaseMeanMode::TargetNormalized;
    else
      pol.fail("phase_mean", "expected empirical | target");
  }

  // --- [experiment] ---
  if (exp.has("runs")) {
    const long long r = exp.get_int("runs");
    if (r < 1) exp.fail("runs", "must be >= 1");
    cfg.runs = static_cast<int>(r);
  }
  if (exp.has("seed")) cfg.master_seed = exp.get_uint("seed");
  if (exp.has("regret")) {
    const std::string mode = exp.get_string("regret");
    if (mode == "mean_optimal")
      cfg.regret_mode = RegretMode::MeanOptimal;
    else if (mode == "oracle_impaired")
      cfg.regret_mode = RegretMode::OracleImpaired;
    else
      exp.fail("regret", "expected mean_optimal | oracle_impaired");
  }
  std::string mode = "single";
  if (exp.has("mode")) mode = exp.get_string("mode");
  const auto require_mode = [&](const char* key, const char* needed) {
    if (exp.has(key) && mode != needed)
      exp.fail(key, std::string("only valid with mode = ") + needed);
  };
  require_mode("capacities", "buckets");
  require_mode("impairment_means", "impairment");
  require_mode("stddev_scale", "impairment");
  require_mode("optimal_arms", "switching");
  require_mode("histogram_window", "switching");

  const auto require_policy = [&](const char* needed) {
    if (cfg.policy.name != needed)
      throw ConfigError("[experiment] mode = " + mode + " requires policy '" +
                        needed + "', got '" + cfg.policy.name + "'");
  };
  if (mode == "single") {
    cfg.mode = ExperimentMode::Single;
  } else if (mode == "switching") {
    cfg.mode = ExperimentMode::Switching;
    require_policy("ucb1");
    cfg.optimal_arms = exp.has("optimal_arms") ? exp.get_int_list("optimal_arms")
                                               : std::vector<int>{1, 3, 7};
    for (int n : cfg.optimal_arms)
      if (n < 1) exp.fail("optimal_arms", "entries must be >= 1");
    if (exp.has("histogram_window")) {
      const long long w = exp.get_int("histogram_window");
      if (w < 1) exp.fail("histogram_window", "must be >= 1");
      cfg.histogram_window = static_cast<int>(w);
    }
    if (spec.means.empty() == false)
      throw ConfigError(
          "[experiment] mode = switching needs a random instance (num_arms)");
  } else if (mode == "buckets") {
    cfg.mode = ExperimentMode::Buckets;
    require_policy("phased_se");
    if (!exp.has("capacities")) exp.missing("capacities");
    cfg.capacities = exp.get_int_list("capacities");
    for (int c : cfg.capacities)
      if (c < 1) exp.fail("capacities", "entries must be >= 1");
  } else if (mode == "impairment") {
    cfg.mode = ExperimentMode::Impairment;
    require_policy("ucbr_plus");
    if (!exp.has("impairment_means")) exp.missing("impairment_means");
    cfg.impairment_means = exp.get_real_list("impairment_means");
    for (double m : cfg.impairment_means)
      if (m < 0.0 || m > spec.window)
        exp.fail("impairment_means", "entries must lie in [0, window]");
    if (exp.has("stddev_scale")) {
      cfg.stddev_scale = exp.get_real("stddev_scale");
      if (cfg.stddev_scale <= 0.0) exp.fail("stddev_scale", "must be > 0");
    }
  } else {
    exp.fail("mode", "expected single | switching | buckets | impairment");
  }

  reject_unused(raw);

  cfg.instance = spec.build();
  cfg.config_hash = config_hash(text);

  cfg.metadata["policy"] = cfg.policy.name;
  cfg.metadata["runs"] = std::to_string(cfg.runs);
  cfg.metadata["window"] = std::to_string(spec.window);
  cfg.metadata["horizon"] = std::to_string(spec.horizon);
  cfg.metadata["means"] = format_means([&] {
    std::vector<double> ms;
    for (const auto& a : cfg.instance.arms) ms.push_back(a.mean);
    return ms;
  }());
  if (!has_means) {
    cfg.metadata["instance_seed"] = std::to_string(spec.instance_seed);
    cfg.metadata["num_optimal"] = std::to_string(spec.num_optimal);
  }
  cfg.metadata["d_max"] = std::to_string(cfg.instance.d_max());
  if (cfg.mode == ExperimentMode::Impairment) {
    std::ostringstream rule;
    rule << "stddev_j=" << cfg.stddev_scale << "*(j+1)";
    cfg.metadata["impair_stddev_rule"] = rule.str();
    cfg.metadata["impair_d_max"] = std::to_string(spec.window);
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace imbandit
