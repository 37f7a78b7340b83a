#include "bpr/signal_space.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

// Belief mass below this is skipped as a quadrature mixture component.
constexpr double kComponentFloor = 1e-12;

Eigen::VectorXd likelihood_vector(const KnowledgeBase& kb, int policy, const Signal& s) {
  Eigen::VectorXd lik(kb.num_types());
  for (int i = 0; i < kb.num_types(); ++i)
    lik[i] = std::exp(kb.log_likelihood(i, policy, s));
  return lik;
}

const Gaussian& gaussian_obs(const KnowledgeBase& kb, int type, int policy) {
  const ObsModel& m = kb.obs(type, policy);
  if (const auto* g = std::get_if<Gaussian>(&m)) return *g;
  if (std::holds_alternative<SameAsPerf>(m))
    return std::get<Gaussian>(kb.perf(type, policy));
  throw FamilyMismatch("expected a Gaussian observation model");
}

void enumerate_discrete(const KnowledgeBase& kb, const Belief& b, int policy,
                        const std::vector<Signal>& outcomes,
                        const std::function<void(double, const Eigen::VectorXd&)>& fn) {
  for (const Signal& s : outcomes) {
    const Eigen::VectorXd lik = likelihood_vector(kb, policy, s);
    fn(b.weights.dot(lik), lik);
  }
}

std::vector<Signal> discrete_outcomes(const KnowledgeBase& kb, int policy) {
  const SignalSpaceInfo& space = kb.signal_space();
  std::vector<Signal> out;
  switch (space.kind) {
    case SignalKind::kCategoryBin:
      for (int bin = 0; bin < space.category_bins; ++bin) out.push_back(CategoryBin{bin});
      break;
    case SignalKind::kEpisodicReturn:
      for (double v : space.return_values) out.push_back(EpisodicReturn{v});
      break;
    case SignalKind::kTransitionTrace:
    case SignalKind::kRewardTrace: {
      // Union of the trace classes observed while training this policy.
      std::map<std::string, Signal> classes;
      for (int type = 0; type < kb.num_types(); ++type) {
        const auto* tm = std::get_if<MarkovTraceModel>(&kb.obs(type, policy));
        if (tm == nullptr) throw FamilyMismatch("expected a trace observation model");
        for (const auto& cl : tm->observed_classes())
          classes.emplace(summarize(cl.trace), cl.trace);
      }
      for (auto& [key, sig] : classes) out.push_back(std::move(sig));
      break;
    }
    case SignalKind::kScalarReal:
      throw FamilyMismatch("scalar signal space is not enumerable");
  }
  return out;
}

}  // namespace

const GaussHermite& gauss_hermite_32() {
  static const GaussHermite gh = [] {
    constexpr int n = 32;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
      const double off = std::sqrt(static_cast<double>(i) / 2.0);
      jacobi(i, i - 1) = off;
      jacobi(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    GaussHermite out;
    out.nodes = es.eigenvalues();
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      const double v0 = es.eigenvectors()(0, i);
      out.weights[i] = v0 * v0;  // normalized: sum w = 1, so E[f(Z)] = sum w f(x)
    }
    return out;
  }();
  return gh;
}

void for_each_signal_outcome(
    const KnowledgeBase& kb, const Belief& b, PolicyId pi,
    const std::function<void(double, const Eigen::VectorXd&)>& fn) {
  if (b.size() != kb.num_types())
    throw DimensionMismatch("signal outcomes: belief length != type count");
  const SignalSpaceInfo& space = kb.signal_space();
  if (space.kind != SignalKind::kScalarReal) {
    enumerate_discrete(kb, b, pi.value, discrete_outcomes(kb, pi.value), fn);
    return;
  }
  // Mixture quadrature: E_{sigma~F^beta}[h] = sum_tau beta(tau)
  // E_{sigma~N(mu_tau, sd_tau)}[h], each component integrated with
  // Gauss-Hermite nodes.
  const GaussHermite& gh = gauss_hermite_32();
  const double sqrt2 = 1.4142135623730950488;
  for (int comp = 0; comp < kb.num_types(); ++comp) {
    const double mass = b.weights[comp];
    if (mass <= kComponentFloor) continue;
    const Gaussian& g = gaussian_obs(kb, comp, pi.value);
    for (int j = 0; j < gh.nodes.size(); ++j) {
      const double sigma = g.mean() + sqrt2 * g.sd() * gh.nodes[j];
      const Eigen::VectorXd lik = likelihood_vector(kb, pi.value, ScalarReal{sigma});
      fn(mass * gh.weights[j], lik);
    }
  }
}

std::vector<std::pair<Signal, double>> posterior_predictive(const KnowledgeBase& kb,
                                                            const Belief& b,
                                                            PolicyId pi) {
  if (kb.signal_space().kind == SignalKind::kScalarReal)
    throw FamilyMismatch("posterior_predictive: continuous signal space");
  std::vector<std::pair<Signal, double>> out;
  for (const Signal& s : discrete_outcomes(kb, pi.value)) {
    const Eigen::VectorXd lik = likelihood_vector(kb, pi.value, s);
    out.emplace_back(s, b.weights.dot(lik));
  }
  return out;
}

}  // namespace bpr
