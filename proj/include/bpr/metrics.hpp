#pragma once

#include <Eigen/Dense>

#include "bpr/errors.hpp"

namespace bpr {

// Gap to the best library policy in hindsight on the same task.
inline double library_regret(double best_utility, double chosen_utility) {
  return best_utility - chosen_utility;
}

inline double average_library_regret(const Eigen::VectorXd& per_episode) {
  if (per_episode.size() == 0) throw EmptySequence("average_library_regret: empty");
  return per_episode.mean();
}

// True iff the two tasks' utilities differ by at most eps under every policy.
inline bool epsilon_equivalent(const Eigen::VectorXd& utilities_i,
                               const Eigen::VectorXd& utilities_j, double eps) {
  if (utilities_i.size() != utilities_j.size())
    throw DimensionMismatch("epsilon_equivalent: length mismatch");
  return (utilities_i - utilities_j).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace bpr
