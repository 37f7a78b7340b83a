#include "bpr/harness/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "bpr/errors.hpp"
#include "bpr/harness/csv.hpp"

namespace bpr {
namespace {

namespace fs = std::filesystem;

std::unique_ptr<Domain> domain_from(const ExperimentConfig& cfg) {
  DomainOptions opts;
  opts.telephone_signal = cfg.signal_kind;
  opts.surveillance_map_seed = cfg.map_seed;
  return make_domain(cfg.domain_name, opts);
}

std::string out_path(const std::string& out_dir, const std::string& file) {
  fs::create_directories(out_dir);
  return (fs::path(out_dir) / file).string();
}

KnowledgeBase load_matching_kb(const ExperimentConfig& cfg) {
  if (cfg.kb_path.empty()) throw ConfigError("missing [run] kb = <path>");
  KnowledgeBase kb = load_kb(cfg.kb_path);
  if (kb.signal_space().kind != cfg.signal_kind)
    throw ConfigError("knowledge base was trained on signal kind '" +
                      signal_kind_name(kb.signal_space().kind) +
                      "' but the config requests '" + signal_kind_name(cfg.signal_kind) +
                      "'");
  return kb;
}

// Paired type/policy subset of the library for a fraction in (0, 1].
void library_subset(const Domain& domain, double fraction, SplitRng& rng,
                    std::vector<int>* types, std::vector<int>* policies) {
  const int n = domain.num_types();
  const int m = std::max(1, static_cast<int>(std::lround(fraction * n)));
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  types->clear();
  for (int k = 0; k < m; ++k) {
    const int pick = rng.uniform_int(static_cast<int>(all.size()));
    types->push_back(all[static_cast<std::size_t>(pick)]);
    all.erase(all.begin() + pick);
  }
  std::sort(types->begin(), types->end());
  if (domain.num_policies() == n) {
    *policies = *types;  // types and policies are paired 1:1
  } else {
    policies->resize(static_cast<std::size_t>(domain.num_policies()));
    std::iota(policies->begin(), policies->end(), 0);
  }
}

std::vector<Task> shared_tasks(const Domain& domain, const ExperimentConfig& cfg) {
  std::vector<Task> tasks;
  for (int i = 0; i < cfg.tasks; ++i) {
    SplitRng rng = derive_stream(cfg.seed, {stream::kTask, static_cast<std::uint64_t>(i)});
    tasks.push_back(domain.sample_task(rng));
  }
  return tasks;
}

}  // namespace

TrainResult cmd_train(const ExperimentConfig& cfg, const std::string& out_dir) {
  auto domain = domain_from(cfg);
  std::vector<int> types, policies;
  if (cfg.library_fraction < 1.0) {
    SplitRng rng = derive_stream(cfg.seed, {stream::kSweep, 0});
    library_subset(*domain, cfg.library_fraction, rng, &types, &policies);
  } else {
    types.resize(static_cast<std::size_t>(domain->num_types()));
    std::iota(types.begin(), types.end(), 0);
    policies.resize(static_cast<std::size_t>(domain->num_policies()));
    std::iota(policies.begin(), policies.end(), 0);
  }
  TrainResult result;
  KnowledgeBase kb =
      train_offline(*domain, types, policies, cfg.training, cfg.seed, &result.report);
  result.kb_path = out_path(out_dir, "kb.json");
  save_kb(kb, result.kb_path);

  nlohmann::json report;
  report["episodes_per_pair"] = result.report.episodes_per_pair;
  report["types"] = kb.num_types();
  report["policies"] = kb.num_policies();
  report["storage_bytes"] = result.report.storage_bytes;
  result.report_path = out_path(out_dir, "train_report.json");
  std::ofstream out(result.report_path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + result.report_path);
  out << report.dump(1) << '\n';
  return result;
}

RunResult cmd_run(const ExperimentConfig& cfg, const std::string& out_dir) {
  auto domain = domain_from(cfg);
  const KnowledgeBase kb = load_matching_kb(cfg);
  const RegretOracle oracle(*domain, cfg.seed);
  const std::vector<Task> tasks = shared_tasks(*domain, cfg);

  RunResult result;
  CsvWriter csv(out_path(out_dir, "run.csv"), "bpr-run-1",
                "task_id,episode,policy,utility,regret,entropy,seed");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    RunTrace trace = run_bpr(kb, *domain, tasks[i], cfg.strategy, cfg.episodes, cfg.seed,
                             static_cast<std::uint64_t>(i), oracle);
    for (const EpisodeRecord& rec : trace.episodes) {
      std::ostringstream row;
      row << i << ',' << rec.episode << ',' << rec.policy << ','
          << format_number(rec.utility) << ',' << format_number(rec.regret) << ','
          << format_number(rec.entropy) << ',' << trace.seed;
      csv.row(row.str());
    }
    result.traces.push_back(std::move(trace));
  }
  csv.close();
  result.csv_path = out_path(out_dir, "run.csv");
  return result;
}

CompareResult cmd_compare(const ExperimentConfig& cfg, const std::string& out_dir) {
  auto domain = domain_from(cfg);
  const KnowledgeBase kb = load_matching_kb(cfg);
  const RegretOracle oracle(*domain, cfg.seed);
  const std::vector<Task> tasks = shared_tasks(*domain, cfg);

  CompareResult result;
  for (std::size_t s = 0; s < cfg.compare_strategies.size(); ++s) {
    CompareCurve curve;
    curve.strategy = cfg.compare_labels[s];
    curve.task_regret.resize(tasks.size());
    curve.task_entropy.resize(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      RunTrace trace = run_bpr(kb, *domain, tasks[i], cfg.compare_strategies[s],
                               cfg.episodes, cfg.seed, static_cast<std::uint64_t>(i),
                               oracle);
      for (const EpisodeRecord& rec : trace.episodes) {
        curve.task_regret[i].push_back(rec.regret);
        curve.task_entropy[i].push_back(rec.entropy);
      }
    }
    const double n = static_cast<double>(tasks.size());
    for (int t = 0; t < cfg.episodes; ++t) {
      double mr = 0.0, me = 0.0;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        mr += curve.task_regret[i][static_cast<std::size_t>(t)];
        me += curve.task_entropy[i][static_cast<std::size_t>(t)];
      }
      mr /= n;
      me /= n;
      double vr = 0.0, ve = 0.0;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        vr += std::pow(curve.task_regret[i][static_cast<std::size_t>(t)] - mr, 2);
        ve += std::pow(curve.task_entropy[i][static_cast<std::size_t>(t)] - me, 2);
      }
      // Spread across tasks, not across seeds.
      curve.mean_regret.push_back(mr);
      curve.std_regret.push_back(n > 1 ? std::sqrt(vr / (n - 1)) : 0.0);
      curve.mean_entropy.push_back(me);
      curve.std_entropy.push_back(n > 1 ? std::sqrt(ve / (n - 1)) : 0.0);
    }
    result.curves.push_back(std::move(curve));
  }

  CsvWriter csv(out_path(out_dir, "compare.csv"), "bpr-compare-1",
                "strategy,episode,mean_regret,std_regret,mean_entropy,std_entropy");
  for (const CompareCurve& curve : result.curves) {
    for (int t = 0; t < cfg.episodes; ++t) {
      std::ostringstream row;
      row << curve.strategy << ',' << (t + 1) << ','
          << format_number(curve.mean_regret[static_cast<std::size_t>(t)]) << ','
          << format_number(curve.std_regret[static_cast<std::size_t>(t)]) << ','
          << format_number(curve.mean_entropy[static_cast<std::size_t>(t)]) << ','
          << format_number(curve.std_entropy[static_cast<std::size_t>(t)]);
      csv.row(row.str());
    }
  }
  csv.close();
  result.csv_path = out_path(out_dir, "compare.csv");
  return result;
}

SweepResult cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
  auto domain = domain_from(cfg);
  const RegretOracle oracle(*domain, cfg.seed);
  if (cfg.sweep_fractions.empty() || cfg.sweep_episode_grid.empty())
    throw ConfigError("sweep requires non-empty fraction and episode grids");

  SweepResult result;
  for (std::size_t fi = 0; fi < cfg.sweep_fractions.size(); ++fi) {
    const double fraction = cfg.sweep_fractions[fi];
    std::vector<double> cell_sum(cfg.sweep_episode_grid.size(), 0.0);
    for (int trial = 0; trial < cfg.sweep_trials; ++trial) {
      // One library subset, training pass and online task per trial; the
      // episode-grid cells share them so the K axis is a paired comparison.
      SplitRng pick = derive_stream(
          cfg.seed, {stream::kSweep, fi, static_cast<std::uint64_t>(trial), 1});
      std::vector<int> types, policies;
      library_subset(*domain, fraction, pick, &types, &policies);
      const std::uint64_t train_seed = mix_key(
          cfg.seed, mix_key(stream::kSweep, mix_key(fi, static_cast<std::uint64_t>(trial))));
      const KnowledgeBase kb =
          train_offline(*domain, types, policies, cfg.training, train_seed);
      SplitRng task_rng = derive_stream(
          cfg.seed, {stream::kSweep, fi, static_cast<std::uint64_t>(trial), 2});
      const Task task = domain->sample_task(task_rng);
      const std::uint64_t run_master = mix_key(
          cfg.seed, mix_key(stream::kSweep + 1,
                            mix_key(fi, static_cast<std::uint64_t>(trial))));
      std::vector<int> full(static_cast<std::size_t>(domain->num_policies()));
      std::iota(full.begin(), full.end(), 0);
      for (std::size_t ki = 0; ki < cfg.sweep_episode_grid.size(); ++ki) {
        RunTrace trace = run_bpr(kb, *domain, task, cfg.sweep_strategy,
                                 cfg.sweep_episode_grid[ki], run_master, 0, oracle, &full);
        double sum = 0.0;
        for (const EpisodeRecord& rec : trace.episodes) sum += rec.regret;
        cell_sum[ki] += sum / static_cast<double>(trace.episodes.size());
      }
    }
    for (std::size_t ki = 0; ki < cfg.sweep_episode_grid.size(); ++ki) {
      SweepCell cell;
      cell.fraction = fraction;
      cell.episodes = cfg.sweep_episode_grid[ki];
      cell.mean_regret = cell_sum[ki] / static_cast<double>(cfg.sweep_trials);
      cell.trials = cfg.sweep_trials;
      result.cells.push_back(cell);
    }
  }

  CsvWriter csv(out_path(out_dir, "sweep.csv"), "bpr-sweep-1",
                "library_fraction,episodes,mean_regret,n_trials");
  for (const SweepCell& cell : result.cells) {
    std::ostringstream row;
    row << format_number(cell.fraction) << ',' << cell.episodes << ','
        << format_number(cell.mean_regret) << ',' << cell.trials;
    csv.row(row.str());
  }
  csv.close();
  result.csv_path = out_path(out_dir, "sweep.csv");
  return result;
}

}  // namespace bpr
