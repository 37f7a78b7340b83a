#include "bpr/knowledge_base.hpp"

#include "bpr/errors.hpp"

namespace bpr {

KnowledgeBase::KnowledgeBase(std::vector<TypeInfo> types, std::vector<PolicyInfo> policies,
                             std::vector<std::vector<PerfModel>> perf,
                             std::vector<std::vector<ObsModel>> obs, Belief prior,
                             SignalSpaceInfo space)
    : types_(std::move(types)),
      policies_(std::move(policies)),
      perf_(std::move(perf)),
      obs_(std::move(obs)),
      prior_(std::move(prior)),
      space_(std::move(space)) {
  const int n = num_types();
  const int p = num_policies();
  if (static_cast<int>(perf_.size()) != n || static_cast<int>(obs_.size()) != n)
    throw DimensionMismatch("KnowledgeBase: model grid rows != type count");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(perf_[i].size()) != p || static_cast<int>(obs_[i].size()) != p)
      throw DimensionMismatch("KnowledgeBase: model grid columns != policy count");
  if (prior_.size() != n) throw DimensionMismatch("KnowledgeBase: prior length != type count");
  if (n > 0 && !prior_.is_valid()) throw std::invalid_argument("KnowledgeBase: invalid prior");
  mean_utility_.resize(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) mean_utility_(i, j) = perf_mean(perf_[i][j]);
}

double KnowledgeBase::log_likelihood(int type, int policy, const Signal& s) const {
  return obs_log_likelihood(obs_[type][policy], perf_[type][policy], s);
}

Eigen::VectorXd KnowledgeBase::log_likelihoods(int policy, const Signal& s) const {
  Eigen::VectorXd out(num_types());
  for (int i = 0; i < num_types(); ++i) out[i] = log_likelihood(i, policy, s);
  return out;
}

double expected_utility(const KnowledgeBase& kb, const Belief& b, PolicyId pi) {
  if (b.size() != kb.num_types())
    throw DimensionMismatch("expected_utility: belief length != type count");
  return b.weights.dot(kb.mean_utility().col(pi.value));
}

Belief update_belief(const KnowledgeBase& kb, const Belief& b, PolicyId pi,
                     const Signal& s) {
  if (b.size() != kb.num_types())
    throw DimensionMismatch("update_belief: belief length != type count");
  return update_belief_log(b, kb.log_likelihoods(pi.value, s));
}

}  // namespace bpr
