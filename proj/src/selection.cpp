#include "bpr/selection.hpp"

#include <cmath>
#include <cstdio>

#include "bpr/errors.hpp"
#include "bpr/signal_space.hpp"

namespace bpr {
namespace {

int argmax(const Eigen::VectorXd& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

int argmin(const Eigen::VectorXd& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}

void check_belief(const KnowledgeBase& kb, const Belief& b) {
  if (b.size() != kb.num_types())
    throw DimensionMismatch("selection: belief length != type count");
}

double entropy_of(const Eigen::VectorXd& w) {
  double h = 0.0;
  for (int i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) h -= w[i] * std::log(w[i]);
  return h;
}

}  // namespace

std::string strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::kGreedy: return "greedy";
    case StrategyKind::kEpsGreedy: return "eps_greedy";
    case StrategyKind::kSampleBelief: return "sample";
    case StrategyKind::kPi: return "pi";
    case StrategyKind::kEi: return "ei";
    case StrategyKind::kBe: return "be";
    case StrategyKind::kKg: return "kg";
    case StrategyKind::kFixed: return "fixed";
    case StrategyKind::kUcb1: return "ucb1";
    case StrategyKind::kGpUcb: return "gpucb";
  }
  return "?";
}

StrategyKind parse_strategy(const std::string& name) {
  if (name == "greedy") return StrategyKind::kGreedy;
  if (name == "eps_greedy") return StrategyKind::kEpsGreedy;
  if (name == "sample") return StrategyKind::kSampleBelief;
  if (name == "pi") return StrategyKind::kPi;
  if (name == "ei") return StrategyKind::kEi;
  if (name == "be") return StrategyKind::kBe;
  if (name == "kg") return StrategyKind::kKg;
  if (name == "fixed") return StrategyKind::kFixed;
  if (name == "ucb1") return StrategyKind::kUcb1;
  if (name == "gpucb") return StrategyKind::kGpUcb;
  throw ConfigError("unknown strategy: " + name);
}

PolicyId select_greedy(const KnowledgeBase& kb, const Belief& b) {
  check_belief(kb, b);
  return {argmax(kb.mean_utility().transpose() * b.weights)};
}

PolicyId select_eps_greedy(const KnowledgeBase& kb, const Belief& b, double epsilon,
                           SplitRng& rng) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("eps_greedy: epsilon outside [0, 1]");
  if (rng.uniform() < epsilon) return {rng.uniform_int(kb.num_policies())};
  return select_greedy(kb, b);
}

PolicyId select_sample_belief(const KnowledgeBase& kb, const Belief& b, SplitRng& rng) {
  check_belief(kb, b);
  const double u = rng.uniform();
  double acc = 0.0;
  int type = kb.num_types() - 1;
  for (int i = 0; i < kb.num_types(); ++i) {
    acc += b.weights[i];
    if (u < acc) {
      type = i;
      break;
    }
  }
  return {argmax(kb.mean_utility().row(type).transpose())};
}

PolicyId select_pi(const KnowledgeBase& kb, const Belief& b, double u_plus) {
  check_belief(kb, b);
  Eigen::VectorXd score(kb.num_policies());
  for (int p = 0; p < kb.num_policies(); ++p) {
    double s = 0.0;
    for (int t = 0; t < kb.num_types(); ++t)
      if (b.weights[t] > 0.0) s += b.weights[t] * (1.0 - perf_cdf(kb.perf(t, p), u_plus));
    score[p] = s;
  }
  return {argmax(score)};
}

PolicyId select_ei(const KnowledgeBase& kb, const Belief& b) {
  check_belief(kb, b);
  const double u_bar = (kb.mean_utility().transpose() * b.weights).maxCoeff();
  Eigen::VectorXd score(kb.num_policies());
  for (int p = 0; p < kb.num_policies(); ++p) {
    double s = 0.0;
    for (int t = 0; t < kb.num_types(); ++t)
      if (b.weights[t] > 0.0) s += b.weights[t] * perf_cdf(kb.perf(t, p), u_bar);
    score[p] = s;
  }
  return {argmin(score)};
}

Belief expected_posterior(const KnowledgeBase& kb, const Belief& b, PolicyId pi) {
  check_belief(kb, b);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(kb.num_types());
  for_each_signal_outcome(kb, b, pi,
                          [&](double weight, const Eigen::VectorXd& lik) {
                            const Eigen::VectorXd post = b.weights.cwiseProduct(lik);
                            const double mass = post.sum();
                            if (mass > 0.0 && weight > 0.0) acc += (weight / mass) * post;
                          });
  return Belief::from_unnormalized(acc);
}

double expected_posterior_entropy(const KnowledgeBase& kb, const Belief& b, PolicyId pi) {
  check_belief(kb, b);
  double total_weight = 0.0;
  double acc = 0.0;
  for_each_signal_outcome(kb, b, pi,
                          [&](double weight, const Eigen::VectorXd& lik) {
                            const Eigen::VectorXd post = b.weights.cwiseProduct(lik);
                            const double mass = post.sum();
                            if (mass <= 0.0 || weight <= 0.0) return;
                            acc += weight * entropy_of(post / mass);
                            total_weight += weight;
                          });
  return total_weight > 0.0 ? acc / total_weight : 0.0;
}

PolicyId select_be(const KnowledgeBase& kb, const Belief& b, double kappa,
                   BeEntropyMode mode) {
  if (!(kappa > 0.0)) throw std::invalid_argument("select_be: kappa must be positive");
  check_belief(kb, b);
  const Eigen::VectorXd utilities = kb.mean_utility().transpose() * b.weights;
  Eigen::VectorXd score(kb.num_policies());
  for (int p = 0; p < kb.num_policies(); ++p) {
    const double h = mode == BeEntropyMode::kExpectedPerSignal
                         ? expected_posterior_entropy(kb, b, {p})
                         : belief_entropy(expected_posterior(kb, b, {p}));
    score[p] = utilities[p] - kappa * h;
  }
  return {argmax(score)};
}

double knowledge_gradient(const KnowledgeBase& kb, const Belief& b, PolicyId pi, int t,
                          int horizon) {
  if (t < 1 || t > horizon) throw std::invalid_argument("knowledge_gradient: t outside [1, K]");
  check_belief(kb, b);
  const double current_best = (kb.mean_utility().transpose() * b.weights).maxCoeff();
  double total_weight = 0.0;
  double acc = 0.0;
  const Eigen::MatrixXd& mean = kb.mean_utility();
  for_each_signal_outcome(kb, b, pi,
                          [&](double weight, const Eigen::VectorXd& lik) {
                            const Eigen::VectorXd post = b.weights.cwiseProduct(lik);
                            const double mass = post.sum();
                            if (mass <= 0.0 || weight <= 0.0) return;
                            acc += weight * (mean.transpose() * (post / mass)).maxCoeff();
                            total_weight += weight;
                          });
  if (total_weight <= 0.0) return 0.0;
  return acc / total_weight - current_best;
}

PolicyId select_kg(const KnowledgeBase& kb, const Belief& b, int t, int horizon) {
  check_belief(kb, b);
  const Eigen::VectorXd utilities = kb.mean_utility().transpose() * b.weights;
  Eigen::VectorXd score(kb.num_policies());
  for (int p = 0; p < kb.num_policies(); ++p)
    score[p] = utilities[p] +
               static_cast<double>(horizon - t) * knowledge_gradient(kb, b, {p}, t, horizon);
  return {argmax(score)};
}

PolicyId select_policy(const KnowledgeBase& kb, const Belief& b, const StrategyConfig& cfg,
                       int t, int horizon, const UtilityRange& range, SplitRng& rng) {
  switch (cfg.kind) {
    case StrategyKind::kGreedy:
      return select_greedy(kb, b);
    case StrategyKind::kEpsGreedy:
      if (!cfg.epsilon) throw ConfigError("eps_greedy requires epsilon");
      return select_eps_greedy(kb, b, *cfg.epsilon, rng);
    case StrategyKind::kSampleBelief:
      return select_sample_belief(kb, b, rng);
    case StrategyKind::kPi: {
      const double u_bar = (kb.mean_utility().transpose() * b.weights).maxCoeff();
      const double u_plus = cfg.u_plus ? *cfg.u_plus : u_bar + 0.5 * (range.max - u_bar);
      if (cfg.u_plus && *cfg.u_plus <= u_bar) {
        static bool warned = false;
        if (!warned) {
          std::fprintf(stderr, "bpr: PI target U+ (%g) is not above the best expected utility (%g)\n",
                       *cfg.u_plus, u_bar);
          warned = true;
        }
      }
      return select_pi(kb, b, u_plus);
    }
    case StrategyKind::kEi:
      return select_ei(kb, b);
    case StrategyKind::kBe: {
      // Scale kappa so the entropy range is commensurate with utilities.
      const double n = static_cast<double>(kb.num_types());
      const double scale = n > 1.0 ? (range.max - range.min) / std::log(n) : 1.0;
      return select_be(kb, b, cfg.kappa * scale, cfg.be_mode);
    }
    case StrategyKind::kKg:
      return select_kg(kb, b, t, horizon);
    case StrategyKind::kFixed:
      return {cfg.fixed_policy};
    default:
      throw ConfigError("select_policy: stateful strategy needs a selector");
  }
}

}  // namespace bpr
