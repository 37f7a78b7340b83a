#include "bpr/domains/telephone.hpp"

#include "bpr/errors.hpp"

namespace bpr {

CallResult simulate_call(double rho, double eta, SplitRng& rng) {
  using namespace call_state;
  CallResult out;
  int state = kStart;
  // start -> frustrated -> annoyed; each state resolves, hangs up or
  // escalates. Escalating out of annoyed reaches the angry terminal.
  while (true) {
    const double u = rng.uniform();
    int next;
    double reward;
    if (u < rho * (1.0 - eta)) {
      next = kSuccess;
      reward = TelephoneDomain::kSuccessUtility;
    } else if (u < rho * (1.0 - eta) + eta) {
      next = kHangUp;
      reward = TelephoneDomain::kFailureUtility;
    } else if (state == kAnnoyed) {
      next = kAngry;  // operator transfer
      reward = TelephoneDomain::kFailureUtility;
    } else {
      next = state + 1;
      reward = 0.0;
    }
    out.transitions.steps.push_back({state, 0, next});
    out.rewards.steps.push_back({state, 0, reward});
    out.utility += reward;
    if (next == kSuccess || next == kHangUp || next == kAngry) break;
    state = next;
  }
  return out;
}

TelephoneDomain::TelephoneDomain(SignalKind signal) : signal_(signal) {
  if (signal != SignalKind::kTransitionTrace && signal != SignalKind::kRewardTrace &&
      signal != SignalKind::kEpisodicReturn)
    throw ConfigError("telephone: signal kind must be sas, sar or u");
}

SignalSpaceInfo TelephoneDomain::signal_space() const {
  SignalSpaceInfo s;
  s.kind = signal_;
  s.num_states = call_state::kCount;
  s.num_actions = 1;
  s.reward_values = {kFailureUtility, 0.0, kSuccessUtility};
  s.return_values = {kFailureUtility, kSuccessUtility};
  return s;
}

Task TelephoneDomain::sample_task(SplitRng& rng) const {
  return {rng.uniform_int(kNumModels), 0.0};
}

EpisodeOutcome TelephoneDomain::run_episode(const Task& task, int policy_index,
                                            SplitRng& rng) const {
  if (task.index < 0 || task.index >= kNumModels)
    throw DomainFailure("telephone: user type out of range");
  if (policy_index < 0 || policy_index >= kNumModels)
    throw DomainFailure("telephone: language model out of range");
  const double r = rho(policy_index, task.index);
  const double eta = policy_index == task.index ? 0.0 : kEta;
  CallResult call = simulate_call(r, eta, rng);
  EpisodeOutcome out;
  out.utility = call.utility;
  switch (signal_) {
    case SignalKind::kTransitionTrace: out.signal = std::move(call.transitions); break;
    case SignalKind::kRewardTrace: out.signal = std::move(call.rewards); break;
    default: out.signal = EpisodicReturn{call.utility}; break;
  }
  return out;
}

std::string TelephoneDomain::type_name(int type_index) const {
  return "user" + std::to_string(type_index + 1);
}

std::string TelephoneDomain::policy_name(int policy_index) const {
  return "lm" + std::to_string(policy_index + 1);
}

}  // namespace bpr
