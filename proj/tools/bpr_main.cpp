#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <string>

#include "bpr/errors.hpp"
#include "bpr/harness/experiments.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t seed = -1;  // <0: keep the config seed
};

bpr::ExperimentConfig load(const CliOptions& opts, bpr::CommandKind cmd) {
  bpr::Config cfg = bpr::Config::parse_file(opts.config_path);
  bpr::ExperimentConfig exp = bpr::ExperimentConfig::from(cfg, cmd);
  if (opts.seed >= 0) exp.seed = static_cast<std::uint64_t>(opts.seed);
  return exp;
}

void add_common(CLI::App* sub, CliOptions* opts) {
  sub->add_option("--config", opts->config_path, "experiment config file")->required();
  sub->add_option("--seed", opts->seed, "master seed override");
  sub->add_option("--out", opts->out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian policy reuse experiment harness"};
  app.require_subcommand(1);
  CliOptions opts;

  CLI::App* train = app.add_subcommand("train", "fit observation/performance models");
  CLI::App* run = app.add_subcommand("run", "run one strategy over sampled tasks");
  CLI::App* compare = app.add_subcommand("compare", "run several strategies on shared tasks");
  CLI::App* sweep = app.add_subcommand("sweep", "library-size / horizon regret grid");
  for (CLI::App* sub : {train, run, compare, sweep}) add_common(sub, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (train->parsed()) {
      auto result = bpr::cmd_train(load(opts, bpr::CommandKind::kTrain), opts.out_dir);
      std::printf("wrote %s\nwrote %s\n", result.kb_path.c_str(), result.report_path.c_str());
    } else if (run->parsed()) {
      auto result = bpr::cmd_run(load(opts, bpr::CommandKind::kRun), opts.out_dir);
      std::printf("wrote %s\n", result.csv_path.c_str());
    } else if (compare->parsed()) {
      auto result = bpr::cmd_compare(load(opts, bpr::CommandKind::kCompare), opts.out_dir);
      std::printf("wrote %s\n", result.csv_path.c_str());
    } else if (sweep->parsed()) {
      auto result = bpr::cmd_sweep(load(opts, bpr::CommandKind::kSweep), opts.out_dir);
      std::printf("wrote %s\n", result.csv_path.c_str());
    }
  } catch (const bpr::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
