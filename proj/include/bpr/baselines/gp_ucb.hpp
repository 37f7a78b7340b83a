#pragma once

#include <Eigen/Dense>
#include <vector>

namespace bpr {

// GP-UCB over the discrete policy set. The kernel is squared-exponential on
// each policy's vector of mean training utilities across types,
// k(i,j) = exp(-||u_i - u_j||^2 / (2 l^2)) with l the median pairwise
// distance; observation noise is the empirical variance of those utilities,
// and the mean function is their global mean.
class GpUcb {
 public:
  // mean_utils: types x policies matrix of training means.
  explicit GpUcb(const Eigen::MatrixXd& mean_utils, double delta = 0.1);

  // argmax mu_t(pi) + sqrt(beta_t) sigma_t(pi); ties to the lowest index.
  int select(int t) const;
  void update(int policy, double reward);

  // Posterior over all policies given the observations so far.
  void posterior(Eigen::VectorXd* mu, Eigen::VectorXd* sd) const;

  double beta_t(int t) const;
  int num_policies() const { return static_cast<int>(kernel_.rows()); }
  double noise_variance() const { return noise_var_; }
  void set_noise_variance(double v) { noise_var_ = v; }

 private:
  Eigen::MatrixXd kernel_;
  double noise_var_ = 1.0;
  double mean_offset_ = 0.0;
  double delta_;
  std::vector<int> obs_policy_;
  std::vector<double> obs_reward_;
};

}  // namespace bpr
