#include "bpr/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(line_no) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    cfg.sections_[section][key] = value;
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key) const {
  if (!has(section, key))
    throw ConfigError("missing config key [" + section + "] " + key);
  return sections_.at(section).at(key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string v = get(section, key);
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key [" + section + "] " + key + ": not a number: " + v);
  }
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

std::int64_t Config::get_int(const std::string& section, const std::string& key) const {
  const std::string v = get(section, key);
  try {
    std::size_t used = 0;
    const std::int64_t out = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key [" + section + "] " + key + ": not an integer: " + v);
  }
}

std::int64_t Config::get_int_or(const std::string& section, const std::string& key,
                                std::int64_t fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::vector<std::string> Config::get_list(const std::string& section,
                                          const std::string& key) const {
  std::vector<std::string> out;
  std::istringstream in(get(section, key));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError("config key [" + section + "] " + key + ": empty list");
  return out;
}

StrategyConfig parse_strategy_config(const Config& cfg, const std::string& section,
                                     const std::string& label, bool bare_params) {
  StrategyConfig out;
  out.kind = parse_strategy(label);
  auto lookup = [&](const std::string& param) -> std::optional<std::string> {
    const std::string dotted = label + "." + param;
    if (cfg.has(section, dotted)) return cfg.get(section, dotted);
    if (bare_params && cfg.has(section, param)) return cfg.get(section, param);
    return std::nullopt;
  };
  auto lookup_double = [&](const std::string& param) -> std::optional<double> {
    auto raw = lookup(param);
    if (!raw) return std::nullopt;
    try {
      return std::stod(*raw);
    } catch (const std::exception&) {
      throw ConfigError("strategy " + label + ": parameter " + param + " is not a number");
    }
  };

  const auto epsilon = lookup_double("epsilon");
  const auto kappa = lookup_double("kappa");
  const auto u_plus = lookup_double("u_plus");
  const auto policy = lookup_double("policy");
  const auto entropy_mode = lookup("entropy_mode");

  auto reject = [&](bool present, const std::string& param) {
    if (present)
      throw ConfigError("strategy " + label + " does not take parameter " + param);
  };
  switch (out.kind) {
    case StrategyKind::kEpsGreedy:
      if (!epsilon) throw ConfigError("strategy eps_greedy requires epsilon");
      if (*epsilon < 0.0 || *epsilon > 1.0)
        throw ConfigError("eps_greedy: epsilon outside [0, 1]");
      out.epsilon = epsilon;
      reject(kappa.has_value(), "kappa");
      reject(u_plus.has_value(), "u_plus");
      reject(policy.has_value(), "policy");
      break;
    case StrategyKind::kPi:
      out.u_plus = u_plus;
      reject(epsilon.has_value(), "epsilon");
      reject(kappa.has_value(), "kappa");
      reject(policy.has_value(), "policy");
      break;
    case StrategyKind::kBe:
      if (kappa) {
        if (!(*kappa > 0.0)) throw ConfigError("be: kappa must be positive");
        out.kappa = *kappa;
      }
      if (entropy_mode) {
        if (*entropy_mode == "expected")
          out.be_mode = BeEntropyMode::kExpectedPerSignal;
        else if (*entropy_mode == "averaged")
          out.be_mode = BeEntropyMode::kAveragedPosterior;
        else
          throw ConfigError("be: entropy_mode must be 'expected' or 'averaged'");
      }
      reject(epsilon.has_value(), "epsilon");
      reject(u_plus.has_value(), "u_plus");
      reject(policy.has_value(), "policy");
      break;
    case StrategyKind::kFixed:
      if (!policy) throw ConfigError("strategy fixed requires policy");
      out.fixed_policy = static_cast<int>(*policy);
      reject(epsilon.has_value(), "epsilon");
      reject(kappa.has_value(), "kappa");
      reject(u_plus.has_value(), "u_plus");
      break;
    default:
      reject(epsilon.has_value(), "epsilon");
      reject(kappa.has_value(), "kappa");
      reject(u_plus.has_value(), "u_plus");
      reject(policy.has_value(), "policy");
      break;
  }
  return out;
}

ExperimentConfig ExperimentConfig::from(const Config& cfg, CommandKind cmd) {
  ExperimentConfig out;
  out.domain_name = cfg.get("domain", "name");
  if (out.domain_name == "golf") {
    out.signal_kind = SignalKind::kCategoryBin;
  } else if (out.domain_name == "telephone") {
    out.signal_kind = parse_signal_kind(cfg.get_or("domain", "signal_kind", "sas"));
    if (out.signal_kind != SignalKind::kTransitionTrace &&
        out.signal_kind != SignalKind::kRewardTrace &&
        out.signal_kind != SignalKind::kEpisodicReturn)
      throw ConfigError("telephone signal_kind must be sas, sar or u");
  } else if (out.domain_name == "surveillance") {
    out.signal_kind = SignalKind::kScalarReal;
  } else {
    throw ConfigError("unknown domain: " + out.domain_name);
  }
  if (cfg.has("domain", "signal_kind") && out.domain_name != "telephone") {
    const SignalKind k = parse_signal_kind(cfg.get("domain", "signal_kind"));
    if (k != out.signal_kind)
      throw ConfigError("domain " + out.domain_name + " emits a fixed signal kind");
  }
  out.map_seed = static_cast<std::uint64_t>(cfg.get_int_or("domain", "map_seed", 1));

  out.training.episodes_per_pair =
      static_cast<int>(cfg.get_int_or("models", "episodes_per_pair", 1000));
  out.training.smoothing_alpha = cfg.get_double_or("models", "smoothing_alpha", 0.01);
  out.training.sd_floor = cfg.get_double_or("models", "sd_floor", 1e-3);
  if (out.training.episodes_per_pair < 1)
    throw ConfigError("episodes_per_pair must be >= 1");
  if (!(out.training.smoothing_alpha > 0.0))
    throw ConfigError("smoothing_alpha must be positive");

  out.episodes = static_cast<int>(cfg.get_int_or("run", "episodes", 1));
  out.tasks = static_cast<int>(cfg.get_int_or("run", "tasks", 1));
  out.library_fraction = cfg.get_double_or("run", "library_fraction", 1.0);
  out.seed = static_cast<std::uint64_t>(cfg.get_int_or("run", "seed", 0));
  out.kb_path = cfg.get_or("run", "kb", "");
  if (out.episodes < 1) throw ConfigError("episodes must be >= 1");
  if (out.tasks < 1) throw ConfigError("tasks must be >= 1");
  if (!(out.library_fraction > 0.0) || out.library_fraction > 1.0)
    throw ConfigError("library_fraction must lie in (0, 1]");

  if (cmd == CommandKind::kRun) {
    out.strategy_label = cfg.get_or("strategy", "kind", "greedy");
    out.strategy = parse_strategy_config(cfg, "strategy", out.strategy_label, true);
    if (out.kb_path.empty()) throw ConfigError("run requires [run] kb = <path>");
  }
  if (cmd == CommandKind::kCompare) {
    for (const std::string& label : cfg.get_list("compare", "strategies")) {
      out.compare_labels.push_back(label);
      out.compare_strategies.push_back(parse_strategy_config(cfg, "compare", label, false));
    }
    if (out.kb_path.empty()) throw ConfigError("compare requires [run] kb = <path>");
  }
  if (cmd == CommandKind::kSweep) {
    const std::string label = cfg.get_or("sweep", "strategy", "ei");
    out.sweep_strategy = parse_strategy_config(cfg, "sweep", label, false);
    for (const std::string& f : cfg.get_list("sweep", "fractions")) {
      const double v = std::stod(f);
      if (!(v > 0.0) || v > 1.0) throw ConfigError("sweep fraction outside (0, 1]");
      out.sweep_fractions.push_back(v);
    }
    for (const std::string& k : cfg.get_list("sweep", "episode_grid")) {
      const int v = std::stoi(k);
      if (v < 1) throw ConfigError("sweep episode grid entries must be >= 1");
      out.sweep_episode_grid.push_back(v);
    }
    out.sweep_trials = static_cast<int>(cfg.get_int_or("sweep", "trials", 200));
    if (out.sweep_trials < 1) throw ConfigError("sweep trials must be >= 1");
  }
  return out;
}

}  // namespace bpr
