#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "bpr/knowledge_base.hpp"

namespace bpr {

// Weighted sweep over the signal space of policy `pi` under the current
// belief. The callback receives, per outcome, the predictive weight
// F_pi^beta(sigma) (or a quadrature weight slice for continuous spaces) and
// the per-type likelihood vector F_pi^tau(sigma). Weights sum to ~1;
// consumers normalize by the accumulated weight.
//
// Discrete spaces (category bins, discrete returns, trace classes) are
// enumerated exactly. Gaussian signal spaces use 32-node Gauss-Hermite
// quadrature per mixture component, skipping components with negligible
// belief mass.
void for_each_signal_outcome(
    const KnowledgeBase& kb, const Belief& b, PolicyId pi,
    const std::function<void(double weight, const Eigen::VectorXd& likelihoods)>& fn);

// Materialized predictive distribution for discrete signal spaces.
std::vector<std::pair<Signal, double>> posterior_predictive(const KnowledgeBase& kb,
                                                            const Belief& b,
                                                            PolicyId pi);

// Nodes/weights for E_{x~N(0,1)}[f(x)] ~= sum_j w_j f(x_j).
struct GaussHermite {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
const GaussHermite& gauss_hermite_32();

}  // namespace bpr
