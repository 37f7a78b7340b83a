#include "bpr/runner.hpp"

#include "bpr/baselines/gp_ucb.hpp"
#include "bpr/baselines/ucb1.hpp"
#include "bpr/errors.hpp"

namespace bpr {

RegretOracle::RegretOracle(const Domain& domain, std::uint64_t master_seed,
                           int mc_episodes)
    : domain_(domain), master_(master_seed), mc_episodes_(mc_episodes) {}

double RegretOracle::expected_utility(const Task& task, int policy_index) const {
  const std::uint64_t key = domain_.task_key(task);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second[policy_index];
  }
  Eigen::VectorXd means(domain_.num_policies());
  for (int p = 0; p < domain_.num_policies(); ++p) {
    SplitRng rng = derive_stream(master_, {stream::kOracle, key, static_cast<std::uint64_t>(p)});
    double sum = 0.0;
    for (int e = 0; e < mc_episodes_; ++e) sum += domain_.run_episode(task, p, rng).utility;
    means[p] = sum / static_cast<double>(mc_episodes_);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(key, std::move(means));
  return it->second[policy_index];
}

double RegretOracle::best_utility(const Task& task,
                                  const std::vector<int>& domain_policies) const {
  expected_utility(task, 0);  // fill the cache
  std::lock_guard<std::mutex> lock(mu_);
  const Eigen::VectorXd& means = cache_.at(domain_.task_key(task));
  double best = -std::numeric_limits<double>::infinity();
  for (int p : domain_policies) best = std::max(best, means[p]);
  return best;
}

double RegretOracle::best_utility(const Task& task) const {
  expected_utility(task, 0);  // fill the cache
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.at(domain_.task_key(task)).maxCoeff();
}

namespace {

class BprSelector : public Selector {
 public:
  BprSelector(StrategyConfig cfg, UtilityRange range) : cfg_(cfg), range_(range) {}
  PolicyId select(const KnowledgeBase& kb, const Belief& b, int t, int horizon,
                  SplitRng& rng) override {
    return select_policy(kb, b, cfg_, t, horizon, range_, rng);
  }

 private:
  StrategyConfig cfg_;
  UtilityRange range_;
};

class Ucb1Selector : public Selector {
 public:
  Ucb1Selector(const KnowledgeBase& kb, UtilityRange range) : range_(range) {
    // Prior: expected performance of each policy under the type prior.
    Eigen::VectorXd prior = kb.mean_utility().transpose() * kb.prior().weights;
    state_ = Ucb1State::with_prior(
        (prior.array() - range.min) / (range.max - range.min));
  }
  PolicyId select(const KnowledgeBase&, const Belief&, int, int, SplitRng&) override {
    return {ucb1_select(state_)};
  }
  void observe(int policy, double utility) override {
    ucb1_update(state_, policy, (utility - range_.min) / (range_.max - range_.min));
  }

 private:
  Ucb1State state_;
  UtilityRange range_;
};

class GpUcbSelector : public Selector {
 public:
  explicit GpUcbSelector(const KnowledgeBase& kb) : gp_(kb.mean_utility()) {}
  PolicyId select(const KnowledgeBase&, const Belief&, int t, int, SplitRng&) override {
    return {gp_.select(t)};
  }
  void observe(int policy, double utility) override { gp_.update(policy, utility); }

 private:
  GpUcb gp_;
};

}  // namespace

std::unique_ptr<Selector> make_selector(const StrategyConfig& cfg, const KnowledgeBase& kb,
                                        const UtilityRange& range) {
  switch (cfg.kind) {
    case StrategyKind::kUcb1: return std::make_unique<Ucb1Selector>(kb, range);
    case StrategyKind::kGpUcb: return std::make_unique<GpUcbSelector>(kb);
    default: return std::make_unique<BprSelector>(cfg, range);
  }
}

RunTrace run_bpr(const KnowledgeBase& kb, const Domain& domain, const Task& task,
                 Selector& selector, int horizon, std::uint64_t master_seed,
                 std::uint64_t task_ordinal, const RegretOracle& oracle,
                 const std::vector<int>* regret_reference) {
  if (horizon < 1) throw ConfigError("run_bpr: K must be >= 1");
  RunTrace trace;
  trace.task = task;
  trace.seed = mix_key(master_seed, mix_key(stream::kTask, task_ordinal));
  std::vector<int> library;
  if (regret_reference == nullptr) {
    for (const PolicyInfo& p : kb.policies()) library.push_back(p.domain_index);
    regret_reference = &library;
  }
  const double best = oracle.best_utility(task, *regret_reference);
  Belief belief = kb.prior();
  for (int t = 1; t <= horizon; ++t) {
    SplitRng select_rng = derive_stream(
        master_seed, {stream::kSelect, task_ordinal, static_cast<std::uint64_t>(t)});
    const PolicyId chosen = selector.select(kb, belief, t, horizon, select_rng);
    if (chosen.value < 0 || chosen.value >= kb.num_policies())
      throw DomainFailure("run_bpr: selector returned an invalid policy");
    const int domain_policy = kb.policies()[static_cast<std::size_t>(chosen.value)].domain_index;
    SplitRng episode_rng = derive_stream(
        master_seed, {stream::kEpisode, task_ordinal, static_cast<std::uint64_t>(t)});
    const EpisodeOutcome outcome = domain.run_episode(task, domain_policy, episode_rng);
    selector.observe(chosen.value, outcome.utility);

    EpisodeRecord rec;
    rec.episode = t;
    rec.policy = chosen.value;
    rec.utility = outcome.utility;
    rec.signal_summary = summarize(outcome.signal);
    rec.entropy = belief_entropy(belief);
    rec.regret = best - oracle.expected_utility(task, domain_policy);
    trace.episodes.push_back(std::move(rec));

    belief = update_belief(kb, belief, chosen, outcome.signal);
  }
  return trace;
}

RunTrace run_bpr(const KnowledgeBase& kb, const Domain& domain, const Task& task,
                 const StrategyConfig& cfg, int horizon, std::uint64_t master_seed,
                 std::uint64_t task_ordinal, const RegretOracle& oracle,
                 const std::vector<int>* regret_reference) {
  auto selector = make_selector(cfg, kb, domain.utility_range());
  return run_bpr(kb, domain, task, *selector, horizon, master_seed, task_ordinal, oracle,
                 regret_reference);
}

}  // namespace bpr
