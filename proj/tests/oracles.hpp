// Test-only oracles: independent closed forms and brute-force enumerations
// the implementation is checked against. Nothing here calls back into the
// selection or belief code paths under test.
#pragma once

#include <cmath>
#include <vector>

#include "bpr/knowledge_base.hpp"

namespace oracle {

inline double normal_cdf(double x, double mean, double sd) {
  return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0)));
}

// E|X| for X ~ N(mean, sd^2).
inline double folded_normal_mean(double mean, double sd) {
  const double a = std::abs(mean);
  return sd * std::sqrt(2.0 / M_PI) * std::exp(-mean * mean / (2.0 * sd * sd)) +
         a * (1.0 - 2.0 * normal_cdf(0.0, a, sd));
}

// Success probability of the three-step call chain by direct enumeration:
// from each of the three pre-terminal states the call resolves with
// probability rho(1-eta), hangs up with probability eta, else escalates.
inline double call_success_probability(double rho, double eta) {
  const double resolve = rho * (1.0 - eta);
  const double escalate = (1.0 - rho) * (1.0 - eta);
  double p = 0.0;
  double reach = 1.0;
  for (int depth = 0; depth < 3; ++depth) {
    p += reach * resolve;
    reach *= escalate;
  }
  return p;
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sample_sd(const std::vector<double>& v) {
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Builds a knowledge base with Gaussian performance models and categorical
// observation models given explicitly (bin probabilities scaled into counts).
// Prior is uniform.
inline bpr::KnowledgeBase make_categorical_kb(
    const std::vector<std::vector<double>>& perf_means,
    const std::vector<std::vector<std::vector<double>>>& obs_probs, double perf_sd = 1.0,
    double alpha = 1e-9) {
  const int n = static_cast<int>(perf_means.size());
  const int p = static_cast<int>(perf_means[0].size());
  std::vector<bpr::TypeInfo> types;
  std::vector<bpr::PolicyInfo> policies;
  for (int i = 0; i < n; ++i) types.push_back({"t" + std::to_string(i), i});
  for (int j = 0; j < p; ++j) policies.push_back({"p" + std::to_string(j), j});
  std::vector<std::vector<bpr::PerfModel>> perf;
  std::vector<std::vector<bpr::ObsModel>> obs;
  int bins = static_cast<int>(obs_probs[0][0].size());
  for (int i = 0; i < n; ++i) {
    std::vector<bpr::PerfModel> prow;
    std::vector<bpr::ObsModel> orow;
    for (int j = 0; j < p; ++j) {
      prow.emplace_back(bpr::Gaussian(perf_means[i][j], perf_sd));
      std::vector<std::int64_t> counts;
      for (double q : obs_probs[i][j])
        counts.push_back(static_cast<std::int64_t>(std::llround(q * 1e9)));
      orow.emplace_back(bpr::Categorical(counts, alpha));
    }
    perf.push_back(std::move(prow));
    obs.push_back(std::move(orow));
  }
  bpr::SignalSpaceInfo space;
  space.kind = bpr::SignalKind::kCategoryBin;
  space.category_bins = bins;
  return bpr::KnowledgeBase(types, policies, perf, obs, bpr::Belief::uniform(n), space);
}

// Exhaustive knowledge-gradient enumeration for categorical observation
// models: sum over bins of the predictive probability times the best
// posterior expected utility, minus the best current expected utility.
inline double kg_enumerate(const bpr::KnowledgeBase& kb, const Eigen::VectorXd& belief,
                           int policy) {
  const int n = kb.num_types();
  const int p = kb.num_policies();
  const int bins = kb.signal_space().category_bins;
  double best_now = -1e300;
  for (int j = 0; j < p; ++j) {
    double u = 0.0;
    for (int i = 0; i < n; ++i) u += belief[i] * bpr::perf_mean(kb.perf(i, j));
    if (u > best_now) best_now = u;
  }
  double acc = 0.0;
  double total = 0.0;
  for (int bin = 0; bin < bins; ++bin) {
    std::vector<double> post(static_cast<std::size_t>(n));
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
      const double lik =
          std::exp(kb.log_likelihood(i, policy, bpr::CategoryBin{bin}));
      post[static_cast<std::size_t>(i)] = belief[i] * lik;
      mass += post[static_cast<std::size_t>(i)];
    }
    if (mass <= 0.0) continue;
    double best_post = -1e300;
    for (int j = 0; j < p; ++j) {
      double u = 0.0;
      for (int i = 0; i < n; ++i)
        u += post[static_cast<std::size_t>(i)] / mass * bpr::perf_mean(kb.perf(i, j));
      if (u > best_post) best_post = u;
    }
    acc += mass * best_post;
    total += mass;
  }
  return acc / total - best_now;
}

}  // namespace oracle
