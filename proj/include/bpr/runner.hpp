#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bpr/domains/domain.hpp"
#include "bpr/knowledge_base.hpp"
#include "bpr/selection.hpp"

namespace bpr {

struct EpisodeRecord {
  int episode = 0;       // 1-based
  int policy = 0;        // knowledge-base policy index
  double utility = 0.0;  // realized return
  std::string signal_summary;
  double entropy = 0.0;  // of the belief the policy was selected with
  double regret = 0.0;   // vs the hindsight-best expected utility
};

struct RunTrace {
  std::vector<EpisodeRecord> episodes;
  Task task;
  std::uint64_t seed = 0;
};

// Expected utilities E[U|task, pi] estimated once per (task, policy) by
// Monte Carlo and cached; regret is measured against these, not against
// realized samples. Safe for concurrent use.
class RegretOracle {
 public:
  RegretOracle(const Domain& domain, std::uint64_t master_seed,
               int mc_episodes = 100000);

  double expected_utility(const Task& task, int policy_index) const;
  // Best expected utility over a set of domain policy indices.
  double best_utility(const Task& task, const std::vector<int>& domain_policies) const;
  // Best over the domain's full policy space.
  double best_utility(const Task& task) const;

 private:
  const Domain& domain_;
  std::uint64_t master_;
  int mc_episodes_;
  mutable std::unordered_map<std::uint64_t, Eigen::VectorXd> cache_;
  mutable std::mutex mu_;
};

// Per-run policy chooser. BPR strategies are stateless given (kb, belief);
// the bandit baselines carry their own mutable state and learn from realized
// utilities instead of the belief.
class Selector {
 public:
  virtual ~Selector() = default;
  virtual PolicyId select(const KnowledgeBase& kb, const Belief& b, int t, int horizon,
                          SplitRng& rng) = 0;
  virtual void observe(int /*policy*/, double /*utility*/) {}
};

std::unique_ptr<Selector> make_selector(const StrategyConfig& cfg, const KnowledgeBase& kb,
                                        const UtilityRange& range);

// The K-episode loop: initialise the belief with the prior, then per episode
// select a policy, execute it, observe the signal and update the belief.
// Throws on domain or update errors; no partial trace is returned.
//
// Regret is measured against the hindsight-best policy of the agent's
// library; `regret_reference` overrides that set (the library-size sweep
// compares against the full policy space so cells stay comparable).
RunTrace run_bpr(const KnowledgeBase& kb, const Domain& domain, const Task& task,
                 Selector& selector, int horizon, std::uint64_t master_seed,
                 std::uint64_t task_ordinal, const RegretOracle& oracle,
                 const std::vector<int>* regret_reference = nullptr);

// Convenience overload constructing the selector from a config.
RunTrace run_bpr(const KnowledgeBase& kb, const Domain& domain, const Task& task,
                 const StrategyConfig& cfg, int horizon, std::uint64_t master_seed,
                 std::uint64_t task_ordinal, const RegretOracle& oracle,
                 const std::vector<int>* regret_reference = nullptr);

}  // namespace bpr
