#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bpr/belief.hpp"
#include "bpr/distributions.hpp"
#include "bpr/signal.hpp"

namespace bpr {

struct TypeInfo {
  std::string name;
  int domain_index = 0;  // index in the originating domain's full type list
};

struct PolicyInfo {
  std::string name;
  int domain_index = 0;
};

// Declared signal space the observation models were trained on.
struct SignalSpaceInfo {
  SignalKind kind = SignalKind::kEpisodicReturn;
  int category_bins = 0;                 // kCategoryBin
  std::vector<double> return_values;     // kEpisodicReturn with discrete returns
  int num_states = 0;                    // trace kinds
  int num_actions = 0;
  std::vector<double> reward_values;     // kRewardTrace
};

// Trained performance models P(U|tau,pi) and observation models P(sigma|tau,pi)
// for every (type, policy) pair, plus the prior over types. Immutable after
// construction and safe to share across concurrent runs.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(std::vector<TypeInfo> types, std::vector<PolicyInfo> policies,
                std::vector<std::vector<PerfModel>> perf,
                std::vector<std::vector<ObsModel>> obs, Belief prior,
                SignalSpaceInfo space);

  int num_types() const { return static_cast<int>(types_.size()); }
  int num_policies() const { return static_cast<int>(policies_.size()); }
  const std::vector<TypeInfo>& types() const { return types_; }
  const std::vector<PolicyInfo>& policies() const { return policies_; }
  const Belief& prior() const { return prior_; }
  const SignalSpaceInfo& signal_space() const { return space_; }

  const PerfModel& perf(int type, int policy) const { return perf_[type][policy]; }
  const ObsModel& obs(int type, int policy) const { return obs_[type][policy]; }

  // E[U|tau,pi] for all pairs, types x policies.
  const Eigen::MatrixXd& mean_utility() const { return mean_utility_; }

  double log_likelihood(int type, int policy, const Signal& s) const;
  // One entry per type, for a fixed policy.
  Eigen::VectorXd log_likelihoods(int policy, const Signal& s) const;

 private:
  std::vector<TypeInfo> types_;
  std::vector<PolicyInfo> policies_;
  std::vector<std::vector<PerfModel>> perf_;
  std::vector<std::vector<ObsModel>> obs_;
  Belief prior_;
  SignalSpaceInfo space_;
  Eigen::MatrixXd mean_utility_;
};

// sum_tau beta(tau) E[U|tau,pi] under the current belief.
double expected_utility(const KnowledgeBase& kb, const Belief& b, PolicyId pi);

// Posterior after observing `s` from running `pi`; the input belief is left
// unmodified.
Belief update_belief(const KnowledgeBase& kb, const Belief& b, PolicyId pi,
                     const Signal& s);

inline constexpr const char* kKbSchemaVersion = "bpr-kb-1";

void save_kb(const KnowledgeBase& kb, const std::string& path);
KnowledgeBase load_kb(const std::string& path);

// Serialized size in bytes, per model family. Observation models stored as
// aliases of the performance model are charged the performance model's bytes.
struct StorageSizes {
  std::map<std::string, std::size_t> by_family;
  std::size_t perf_bytes = 0;
  std::size_t obs_bytes = 0;
  std::size_t total_bytes = 0;
};
StorageSizes storage_size(const KnowledgeBase& kb);

}  // namespace bpr
