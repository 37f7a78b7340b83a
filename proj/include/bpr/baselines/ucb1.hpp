#pragma once

#include <Eigen/Dense>

namespace bpr {

// UCB1 over the policy library with a performance prior: each arm starts
// with one virtual pull at its expected performance under the type prior,
// so no initial try-every-arm sweep is needed. Rewards must be rescaled to
// [0, 1] by the caller.
struct Ucb1State {
  Eigen::VectorXd mean;    // running mean reward per arm
  Eigen::VectorXi pulls;   // includes the virtual prior pull
  long total_pulls = 0;

  static Ucb1State with_prior(const Eigen::VectorXd& prior_means);
};

// argmax mean_i + sqrt(2 ln t / n_i); ties to the lowest index.
int ucb1_select(const Ucb1State& state);

void ucb1_update(Ucb1State& state, int arm, double reward);

}  // namespace bpr
