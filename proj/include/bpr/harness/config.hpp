#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpr/selection.hpp"
#include "bpr/signal.hpp"
#include "bpr/training.hpp"

namespace bpr {

// Minimal sectioned key/value file: [section] headers, key = value lines,
// '#' comments, comma-separated lists.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  std::int64_t get_int(const std::string& section, const std::string& key) const;
  std::int64_t get_int_or(const std::string& section, const std::string& key,
                          std::int64_t fallback) const;
  std::vector<std::string> get_list(const std::string& section,
                                    const std::string& key) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

enum class CommandKind { kTrain, kRun, kCompare, kSweep };

// Validated view of a config file for one command.
struct ExperimentConfig {
  std::string domain_name = "golf";
  SignalKind signal_kind = SignalKind::kCategoryBin;
  std::uint64_t map_seed = 1;

  TrainingOptions training;

  StrategyConfig strategy;
  std::string strategy_label = "greedy";

  int episodes = 1;
  int tasks = 1;
  double library_fraction = 1.0;
  std::uint64_t seed = 0;
  std::string kb_path;

  std::vector<StrategyConfig> compare_strategies;
  std::vector<std::string> compare_labels;

  StrategyConfig sweep_strategy;
  std::vector<double> sweep_fractions;
  std::vector<int> sweep_episode_grid;
  int sweep_trials = 200;

  static ExperimentConfig from(const Config& cfg, CommandKind cmd);
};

// Parses a strategy plus its parameters from section keys. `label` is the
// strategy name; parameters live under "<label>.<param>" or bare param keys
// when the section configures a single strategy.
StrategyConfig parse_strategy_config(const Config& cfg, const std::string& section,
                                     const std::string& label, bool bare_params);

}  // namespace bpr
