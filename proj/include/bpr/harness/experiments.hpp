#pragma once

#include <string>
#include <vector>

#include "bpr/harness/config.hpp"
#include "bpr/runner.hpp"

namespace bpr {

struct TrainResult {
  std::string kb_path;
  std::string report_path;
  TrainingReport report;
};

struct RunResult {
  std::vector<RunTrace> traces;
  std::string csv_path;
};

struct CompareCurve {
  std::string strategy;
  // Indexed by episode-1; statistics are across tasks.
  std::vector<double> mean_regret;
  std::vector<double> std_regret;
  std::vector<double> mean_entropy;
  std::vector<double> std_entropy;
  // Per (task, episode) regret for paired analyses.
  std::vector<std::vector<double>> task_regret;
  std::vector<std::vector<double>> task_entropy;
};

struct CompareResult {
  std::vector<CompareCurve> curves;
  std::string csv_path;
};

struct SweepCell {
  double fraction = 1.0;
  int episodes = 0;
  double mean_regret = 0.0;
  int trials = 0;
};

struct SweepResult {
  std::vector<SweepCell> cells;
  std::string csv_path;
};

// Trains on the configured domain and writes kb.json plus
// train_report.json under out_dir.
TrainResult cmd_train(const ExperimentConfig& cfg, const std::string& out_dir);

// Runs the configured strategy over `tasks` sampled tasks for K episodes and
// writes run.csv (one row per task x episode).
RunResult cmd_run(const ExperimentConfig& cfg, const std::string& out_dir);

// Runs every configured strategy over a shared task set and writes
// compare.csv with per-strategy averaged regret/entropy curves.
CompareResult cmd_compare(const ExperimentConfig& cfg, const std::string& out_dir);

// Library-size / horizon grid: per cell, sample a library subset of the
// given fraction, train on it, run on tasks drawn from the full task space
// and average episodic regret over the configured trials. Regret is measured
// against the hindsight-best policy of the full space so cells are
// comparable across fractions.
SweepResult cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir);

}  // namespace bpr
