#include "bpr/training.hpp"

#include <numeric>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

PerfModel fit_perf(const Domain& domain, const TrainingOptions& opts,
                   const std::vector<double>& utilities) {
  if (domain.perf_family() == PerfFamily::kGaussian)
    return Gaussian::fit(utilities, opts.sd_floor);
  return DiscreteValues::fit(domain.return_values(), opts.smoothing_alpha, utilities);
}

ObsModel fit_obs(const Domain& domain, const TrainingOptions& opts,
                 const std::vector<EpisodeOutcome>& episodes) {
  const SignalSpaceInfo space = domain.signal_space();
  switch (space.kind) {
    case SignalKind::kCategoryBin: {
      std::vector<int> bins;
      bins.reserve(episodes.size());
      for (const auto& e : episodes) bins.push_back(std::get<CategoryBin>(e.signal).bin);
      return Categorical::fit(space.category_bins, opts.smoothing_alpha, bins);
    }
    case SignalKind::kTransitionTrace: {
      std::vector<TransitionTrace> traces;
      traces.reserve(episodes.size());
      for (const auto& e : episodes) traces.push_back(std::get<TransitionTrace>(e.signal));
      return MarkovTraceModel::fit_transitions(space.num_states, space.num_actions,
                                               opts.smoothing_alpha, traces);
    }
    case SignalKind::kRewardTrace: {
      std::vector<RewardTrace> traces;
      traces.reserve(episodes.size());
      for (const auto& e : episodes) traces.push_back(std::get<RewardTrace>(e.signal));
      return MarkovTraceModel::fit_rewards(space.num_states, space.num_actions,
                                           space.reward_values, opts.smoothing_alpha,
                                           traces);
    }
    // Return-valued signals: the performance model doubles as the
    // observation model, so nothing separate is fitted.
    case SignalKind::kEpisodicReturn:
    case SignalKind::kScalarReal:
      return SameAsPerf{};
  }
  throw DomainFailure("unsupported signal kind");
}

}  // namespace

KnowledgeBase train_offline(const Domain& domain, const std::vector<int>& type_indices,
                            const std::vector<int>& policy_indices,
                            const TrainingOptions& opts, std::uint64_t seed,
                            TrainingReport* report) {
  if (opts.episodes_per_pair < 1)
    throw ConfigError("train_offline: episodes_per_pair must be >= 1");
  const int n = static_cast<int>(type_indices.size());
  const int p = static_cast<int>(policy_indices.size());
  std::vector<TypeInfo> types;
  for (int ti : type_indices) types.push_back({domain.type_name(ti), ti});
  std::vector<PolicyInfo> policies;
  for (int pi : policy_indices) policies.push_back({domain.policy_name(pi), pi});

  std::vector<std::vector<PerfModel>> perf;
  std::vector<std::vector<ObsModel>> obs;
  std::vector<std::vector<int>> counts(n, std::vector<int>(p, 0));
  for (int i = 0; i < n; ++i) {
    const Task task = domain.training_task(type_indices[static_cast<std::size_t>(i)]);
    std::vector<PerfModel> perf_row;
    std::vector<ObsModel> obs_row;
    for (int j = 0; j < p; ++j) {
      const int dom_policy = policy_indices[static_cast<std::size_t>(j)];
      SplitRng rng = derive_stream(
          seed, {stream::kTrain, static_cast<std::uint64_t>(
                                     type_indices[static_cast<std::size_t>(i)]),
                 static_cast<std::uint64_t>(dom_policy)});
      std::vector<EpisodeOutcome> episodes;
      std::vector<double> utilities;
      episodes.reserve(static_cast<std::size_t>(opts.episodes_per_pair));
      utilities.reserve(static_cast<std::size_t>(opts.episodes_per_pair));
      for (int e = 0; e < opts.episodes_per_pair; ++e) {
        episodes.push_back(domain.run_episode(task, dom_policy, rng));
        utilities.push_back(episodes.back().utility);
      }
      perf_row.push_back(fit_perf(domain, opts, utilities));
      obs_row.push_back(fit_obs(domain, opts, episodes));
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          opts.episodes_per_pair;
    }
    perf.push_back(std::move(perf_row));
    obs.push_back(std::move(obs_row));
  }

  KnowledgeBase kb(std::move(types), std::move(policies), std::move(perf), std::move(obs),
                   Belief::uniform(n), domain.signal_space());
  if (report != nullptr) {
    report->episodes_per_pair = opts.episodes_per_pair;
    report->sample_counts = std::move(counts);
    report->storage_bytes = storage_size(kb).by_family;
  }
  return kb;
}

KnowledgeBase train_offline(const Domain& domain, const TrainingOptions& opts,
                            std::uint64_t seed, TrainingReport* report) {
  std::vector<int> types(static_cast<std::size_t>(domain.num_types()));
  std::iota(types.begin(), types.end(), 0);
  std::vector<int> policies(static_cast<std::size_t>(domain.num_policies()));
  std::iota(policies.begin(), policies.end(), 0);
  return train_offline(domain, types, policies, opts, seed, report);
}

}  // namespace bpr
