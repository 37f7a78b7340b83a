#include "bpr/baselines/ucb1.hpp"

#include <cmath>

namespace bpr {

Ucb1State Ucb1State::with_prior(const Eigen::VectorXd& prior_means) {
  Ucb1State s;
  s.mean = prior_means;
  s.pulls = Eigen::VectorXi::Ones(prior_means.size());
  s.total_pulls = prior_means.size();
  return s;
}

int ucb1_select(const Ucb1State& state) {
  const double log_t = std::log(static_cast<double>(state.total_pulls));
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < state.mean.size(); ++i) {
    const double bonus = std::sqrt(2.0 * log_t / static_cast<double>(state.pulls[i]));
    const double index = state.mean[i] + bonus;
    if (index > best_index) {
      best_index = index;
      best = i;
    }
  }
  return best;
}

void ucb1_update(Ucb1State& state, int arm, double reward) {
  state.pulls[arm] += 1;
  state.total_pulls += 1;
  state.mean[arm] += (reward - state.mean[arm]) / static_cast<double>(state.pulls[arm]);
}

}  // namespace bpr
