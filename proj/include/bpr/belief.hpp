#pragma once

#include <Eigen/Dense>

namespace bpr {

// Probability vector over the known types; the central mutable state of a
// policy-reuse run. Kept in linear space and renormalized on every update.
struct Belief {
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(weights.size()); }

  static Belief uniform(int n);
  static Belief point_mass(int n, int index);
  // Normalizes a non-negative weight vector; throws AllLikelihoodsZero on
  // zero total mass.
  static Belief from_unnormalized(const Eigen::VectorXd& w);

  bool is_valid(double tol = 1e-9) const;
};

// -sum w log w in nats, with 0 log 0 := 0.
double belief_entropy(const Belief& b);

// Bayes update with an explicit likelihood vector (one entry per type).
Belief update_belief(const Belief& b, const Eigen::VectorXd& likelihoods);

// Same update with log likelihoods; shifts by the max before exponentiating
// so long trace products cannot underflow.
Belief update_belief_log(const Belief& b, const Eigen::VectorXd& log_likelihoods);

}  // namespace bpr
