#pragma once

#include <optional>
#include <string>

#include "bpr/knowledge_base.hpp"
#include "bpr/rng.hpp"

namespace bpr {

enum class StrategyKind {
  kGreedy,
  kEpsGreedy,
  kSampleBelief,
  kPi,
  kEi,
  kBe,
  kKg,
  kFixed,
  kUcb1,
  kGpUcb,
};

std::string strategy_name(StrategyKind k);
StrategyKind parse_strategy(const std::string& name);

// How BPR-BE scores the post-policy belief: expected entropy of the
// per-signal posteriors (default), or entropy of the signal-averaged
// posterior.
enum class BeEntropyMode { kExpectedPerSignal, kAveragedPosterior };

struct StrategyConfig {
  StrategyKind kind = StrategyKind::kGreedy;
  std::optional<double> epsilon;   // eps-greedy
  std::optional<double> u_plus;    // PI; defaults to U_bar + (u_max - U_bar)/2
  double kappa = 1.0;              // BE; scaled by (u_max - u_min)/log N
  BeEntropyMode be_mode = BeEntropyMode::kExpectedPerSignal;
  int fixed_policy = 0;            // kFixed
};

struct UtilityRange {
  double min = 0.0;
  double max = 1.0;
};

// argmax_pi sum_tau beta(tau) E[U|tau,pi]; ties go to the lowest index.
PolicyId select_greedy(const KnowledgeBase& kb, const Belief& b);

// Greedy with probability 1-eps, uniform over the library with probability eps.
PolicyId select_eps_greedy(const KnowledgeBase& kb, const Belief& b, double epsilon,
                           SplitRng& rng);

// Sample tau ~ beta, play the best response to that type.
PolicyId select_sample_belief(const KnowledgeBase& kb, const Belief& b, SplitRng& rng);

// Probability of improvement: argmax_pi sum_tau beta(tau) (1 - F(u_plus|tau,pi)).
PolicyId select_pi(const KnowledgeBase& kb, const Belief& b, double u_plus);

// Expected improvement: argmin_pi sum_tau beta(tau) F(U_bar|tau,pi) where
// U_bar is the best expected utility under the belief.
PolicyId select_ei(const KnowledgeBase& kb, const Belief& b);

// Signal-averaged one-step posterior, sum_sigma F_pi^beta(sigma) *
// normalize(F_pi^tau(sigma) beta(tau)).
Belief expected_posterior(const KnowledgeBase& kb, const Belief& b, PolicyId pi);

// E_sigma[H(posterior after sigma)] under the predictive signal distribution.
double expected_posterior_entropy(const KnowledgeBase& kb, const Belief& b, PolicyId pi);

// argmax_pi [U_tilde(pi) - kappa * H(beta|pi)].
PolicyId select_be(const KnowledgeBase& kb, const Belief& b, double kappa,
                   BeEntropyMode mode = BeEntropyMode::kExpectedPerSignal);

// One-step lookahead value: E_sigma[max_pi' U_tilde^{post(sigma)}(pi')] -
// max_pi'' U_tilde(pi''), each signal outcome enumerated with its own
// posterior.
double knowledge_gradient(const KnowledgeBase& kb, const Belief& b, PolicyId pi, int t,
                          int horizon);

// argmax_pi [U_tilde(pi) + (K - t) nu_pi].
PolicyId select_kg(const KnowledgeBase& kb, const Belief& b, int t, int horizon);

// Dispatch for the stateless strategies; applies the documented parameter
// defaults (adaptive U+ for PI, range-scaled kappa for BE).
PolicyId select_policy(const KnowledgeBase& kb, const Belief& b, const StrategyConfig& cfg,
                       int t, int horizon, const UtilityRange& range, SplitRng& rng);

}  // namespace bpr
