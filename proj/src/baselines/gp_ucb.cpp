#include "bpr/baselines/gp_ucb.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

constexpr double kJitter = 1e-8;

}  // namespace

GpUcb::GpUcb(const Eigen::MatrixXd& mean_utils, double delta) : delta_(delta) {
  const int p = static_cast<int>(mean_utils.cols());
  // Squared-exponential kernel on the policies' training-utility profiles,
  // with the length scale set to the median pairwise distance.
  std::vector<double> dists;
  Eigen::MatrixXd d2(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      const double d = (mean_utils.col(i) - mean_utils.col(j)).norm();
      d2(i, j) = d * d;
      if (j > i) dists.push_back(d);
    }
  }
  double ell = 1.0;
  if (!dists.empty()) {
    std::sort(dists.begin(), dists.end());
    ell = dists[dists.size() / 2];
    if (!(ell > 0.0)) ell = 1.0;
  }
  kernel_ = (-d2 / (2.0 * ell * ell)).array().exp();

  mean_offset_ = mean_utils.mean();
  double var = 0.0;
  for (int i = 0; i < mean_utils.rows(); ++i)
    for (int j = 0; j < p; ++j)
      var += (mean_utils(i, j) - mean_offset_) * (mean_utils(i, j) - mean_offset_);
  const double count = static_cast<double>(mean_utils.size());
  noise_var_ = count > 1.0 ? var / (count - 1.0) : 1.0;
  if (!(noise_var_ > 0.0)) noise_var_ = 1.0;
}

double GpUcb::beta_t(int t) const {
  const double p = static_cast<double>(num_policies());
  const double tt = static_cast<double>(t);
  return 2.0 * std::log(p * tt * tt * M_PI * M_PI / (6.0 * delta_));
}

void GpUcb::posterior(Eigen::VectorXd* mu, Eigen::VectorXd* sd) const {
  const int p = num_policies();
  const int m = static_cast<int>(obs_policy_.size());
  mu->resize(p);
  sd->resize(p);
  if (m == 0) {
    mu->setConstant(mean_offset_);
    for (int i = 0; i < p; ++i) (*sd)[i] = std::sqrt(kernel_(i, i));
    return;
  }
  Eigen::MatrixXd k_obs(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) k_obs(a, b) = kernel_(obs_policy_[a], obs_policy_[b]);
  k_obs.diagonal().array() += noise_var_;
  Eigen::VectorXd y(m);
  for (int a = 0; a < m; ++a) y[a] = obs_reward_[a] - mean_offset_;

  Eigen::LLT<Eigen::MatrixXd> llt(k_obs);
  if (llt.info() != Eigen::Success) {
    k_obs.diagonal().array() += kJitter;  // one jitter retry
    llt.compute(k_obs);
    if (llt.info() != Eigen::Success)
      throw SingularKernel("GP-UCB: kernel matrix is not positive definite");
  }
  const Eigen::VectorXd alpha = llt.solve(y);
  for (int i = 0; i < p; ++i) {
    Eigen::VectorXd k_star(m);
    for (int a = 0; a < m; ++a) k_star[a] = kernel_(obs_policy_[a], i);
    (*mu)[i] = mean_offset_ + k_star.dot(alpha);
    const double var = kernel_(i, i) - k_star.dot(llt.solve(k_star));
    (*sd)[i] = std::sqrt(std::max(var, 0.0));
  }
}

int GpUcb::select(int t) const {
  Eigen::VectorXd mu, sd;
  posterior(&mu, &sd);
  const double scale = std::sqrt(beta_t(t));
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < num_policies(); ++i) {
    const double score = mu[i] + scale * sd[i];
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

void GpUcb::update(int policy, double reward) {
  obs_policy_.push_back(policy);
  obs_reward_.push_back(reward);
}

}  // namespace bpr
