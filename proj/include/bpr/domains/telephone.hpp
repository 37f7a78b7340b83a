#pragma once

#include "bpr/domains/domain.hpp"

namespace bpr {

// States of the call transition system.
namespace call_state {
inline constexpr int kStart = 0;
inline constexpr int kFrustrated = 1;
inline constexpr int kAnnoyed = 2;
inline constexpr int kAngry = 3;     // terminal: transfer to an operator
inline constexpr int kHangUp = 4;    // terminal
inline constexpr int kSuccess = 5;   // terminal
inline constexpr int kCount = 6;
}  // namespace call_state

struct CallResult {
  TransitionTrace transitions;
  RewardTrace rewards;
  double utility = 0.0;  // +10 on success, -3 otherwise
};

// One call under resolution probability rho and hang-up propensity eta.
// From each of start/frustrated/annoyed the call resolves with probability
// rho(1-eta), hangs up with probability eta, and otherwise escalates; a call
// escalating out of `annoyed` reaches `angry` and is transferred to an
// operator, which terminates it unsuccessfully. Rewards: +10 entering
// success, -3 entering hang_up or angry, 0 on other escalations.
CallResult simulate_call(double rho, double eta, SplitRng& rng);

// Telephone personalisation over L pre-trained language models. A user type
// lambda and a chosen model pi determine rho = 1 - |pi - lambda| / L, with
// eta = 0.3 except eta = 0 on an exact match. Total utility is 10 or -3.
class TelephoneDomain : public Domain {
 public:
  static constexpr int kNumModels = 20;
  static constexpr double kEta = 0.3;
  static constexpr double kSuccessUtility = 10.0;
  static constexpr double kFailureUtility = -3.0;

  explicit TelephoneDomain(SignalKind signal);

  std::string name() const override { return "telephone"; }
  int num_types() const override { return kNumModels; }
  int num_policies() const override { return kNumModels; }
  SignalKind signal_kind() const override { return signal_; }
  SignalSpaceInfo signal_space() const override;
  PerfFamily perf_family() const override { return PerfFamily::kDiscreteValues; }
  std::vector<double> return_values() const override {
    return {kFailureUtility, kSuccessUtility};
  }
  UtilityRange utility_range() const override { return {kFailureUtility, kSuccessUtility}; }
  int default_horizon() const override { return 30; }

  Task training_task(int type_index) const override { return {type_index, 0.0}; }
  Task sample_task(SplitRng& rng) const override;
  EpisodeOutcome run_episode(const Task& task, int policy_index,
                             SplitRng& rng) const override;

  std::string type_name(int type_index) const override;
  std::string policy_name(int policy_index) const override;

  static double rho(int policy_index, int type_index) {
    return 1.0 - static_cast<double>(policy_index >= type_index
                                         ? policy_index - type_index
                                         : type_index - policy_index) /
                     kNumModels;
  }

 private:
  SignalKind signal_;
};

}  // namespace bpr
