#include "bpr/belief.hpp"

#include <cmath>

#include "bpr/errors.hpp"

namespace bpr {

Belief Belief::uniform(int n) {
  Belief b;
  b.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return b;
}

Belief Belief::point_mass(int n, int index) {
  Belief b;
  b.weights = Eigen::VectorXd::Zero(n);
  b.weights[index] = 1.0;
  return b;
}

Belief Belief::from_unnormalized(const Eigen::VectorXd& w) {
  if (w.size() == 0) throw DimensionMismatch("belief: empty weight vector");
  if ((w.array() < 0.0).any()) throw std::invalid_argument("belief: negative weight");
  const double total = w.sum();
  if (!(total > 0.0) || !std::isfinite(total))
    throw AllLikelihoodsZero("belief: zero total mass");
  Belief b;
  b.weights = w / total;
  return b;
}

bool Belief::is_valid(double tol) const {
  if (weights.size() == 0) return false;
  if ((weights.array() < 0.0).any()) return false;
  return std::abs(weights.sum() - 1.0) <= tol;
}

double belief_entropy(const Belief& b) {
  double h = 0.0;
  for (int i = 0; i < b.weights.size(); ++i) {
    const double w = b.weights[i];
    if (w > 0.0) h -= w * std::log(w);
  }
  return h;
}

Belief update_belief(const Belief& b, const Eigen::VectorXd& likelihoods) {
  if (likelihoods.size() != b.weights.size())
    throw DimensionMismatch("update_belief: belief length != type count");
  return Belief::from_unnormalized(b.weights.cwiseProduct(likelihoods));
}

Belief update_belief_log(const Belief& b, const Eigen::VectorXd& log_likelihoods) {
  if (log_likelihoods.size() != b.weights.size())
    throw DimensionMismatch("update_belief: belief length != type count");
  const double shift = log_likelihoods.maxCoeff();
  if (!std::isfinite(shift)) throw AllLikelihoodsZero("update_belief: no likelihood mass");
  // The shift cancels in the normalization, so this matches the linear form.
  return Belief::from_unnormalized(
      b.weights.cwiseProduct((log_likelihoods.array() - shift).exp().matrix()));
}

}  // namespace bpr
