#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bpr/selection.hpp"
#include "bpr/signal_space.hpp"
#include "oracles.hpp"

using namespace bpr;

namespace {

// Uninformative observation models: every type emits the same distribution.
std::vector<std::vector<std::vector<double>>> flat_obs(int n, int p, int bins) {
  return std::vector<std::vector<std::vector<double>>>(
      n, std::vector<std::vector<double>>(
             p, std::vector<double>(bins, 1.0 / static_cast<double>(bins))));
}

KnowledgeBase gaussian_pair_kb() {
  // Point of interest: two policies N(0,1) and N(1,1) on a single type.
  return oracle::make_categorical_kb({{0.0, 1.0}}, flat_obs(1, 2, 2));
}

Belief belief_of(std::initializer_list<double> w) {
  Eigen::VectorXd v(static_cast<long>(w.size()));
  int i = 0;
  for (double x : w) v[i++] = x;
  return Belief::from_unnormalized(v);
}

}  // namespace

TEST_CASE("greedy argmax with tie to the lowest index") {
  const KnowledgeBase kb =
      oracle::make_categorical_kb({{-1.0, 5.0, 2.0}}, flat_obs(1, 3, 2));
  CHECK(select_greedy(kb, Belief::point_mass(1, 0)).value == 1);

  const KnowledgeBase dominant = oracle::make_categorical_kb(
      {{1.0, 3.0}, {0.0, 2.0}, {-1.0, 0.5}}, flat_obs(3, 2, 2));
  CHECK(select_greedy(dominant, Belief::uniform(3)).value == 1);

  const KnowledgeBase tied =
      oracle::make_categorical_kb({{2.0, 2.0, 1.0}}, flat_obs(1, 3, 2));
  CHECK(select_greedy(tied, Belief::point_mass(1, 0)).value == 0);
}

TEST_CASE("greedy choice is invariant under a constant utility shift") {
  SplitRng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::vector<double>> means(3, std::vector<double>(4));
    std::vector<std::vector<double>> shifted = means;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) {
        means[i][j] = rng.normal(0.0, 5.0);
        shifted[i][j] = means[i][j] + 123.25;
      }
    const KnowledgeBase a = oracle::make_categorical_kb(means, flat_obs(3, 4, 2));
    const KnowledgeBase b = oracle::make_categorical_kb(shifted, flat_obs(3, 4, 2));
    Eigen::VectorXd w(3);
    for (int i = 0; i < 3; ++i) w[i] = rng.uniform_pos();
    const Belief belief = Belief::from_unnormalized(w);
    CHECK(select_greedy(a, belief).value == select_greedy(b, belief).value);
  }
}

TEST_CASE("eps-greedy frequencies") {
  const KnowledgeBase kb =
      oracle::make_categorical_kb({{0.0, 3.0, 1.0, 2.0}}, flat_obs(1, 4, 2));
  const Belief b = Belief::point_mass(1, 0);

  SplitRng rng(101);
  for (int i = 0; i < 200; ++i)
    CHECK(select_eps_greedy(kb, b, 0.0, rng).value == select_greedy(kb, b).value);

  int counts[4] = {0, 0, 0, 0};
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) counts[select_eps_greedy(kb, b, 1.0, rng).value]++;
  for (int c : counts)
    CHECK(std::abs(c / static_cast<double>(draws) - 0.25) < 0.01);

  int greedy_hits = 0;
  for (int i = 0; i < draws; ++i)
    if (select_eps_greedy(kb, b, 0.3, rng).value == 1) greedy_hits++;
  const double expected = 0.7 + 0.3 / 4.0;  // mixture of exploit and uniform
  CHECK(std::abs(greedy_hits / static_cast<double>(draws) - expected) < 0.01);
}

TEST_CASE("sampling the belief") {
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{5.0, 0.0}, {0.0, 5.0}}, flat_obs(2, 2, 2));
  SplitRng rng(7);
  // Point mass: deterministic best response.
  for (int i = 0; i < 50; ++i)
    CHECK(select_sample_belief(kb, Belief::point_mass(2, 1), rng).value == 1);

  int first = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i)
    if (select_sample_belief(kb, Belief::uniform(2), rng).value == 0) first++;
  CHECK(std::abs(first / static_cast<double>(draws) - 0.5) < 0.01);

  // All types share one best policy.
  const KnowledgeBase shared = oracle::make_categorical_kb(
      {{1.0, 4.0}, {2.0, 9.0}, {0.0, 3.0}}, flat_obs(3, 2, 2));
  for (int i = 0; i < 100; ++i)
    CHECK(select_sample_belief(shared, Belief::uniform(3), rng).value == 1);
}

TEST_CASE("probability of improvement against the normal-cdf oracle") {
  const KnowledgeBase kb = gaussian_pair_kb();
  const Belief b = Belief::point_mass(1, 0);
  CHECK(select_pi(kb, b, 2.0).value == 1);
  // Tails straight from the oracle: 0.1587 beats 0.0228.
  CHECK(1.0 - oracle::normal_cdf(2.0, 1.0, 1.0) == doctest::Approx(0.1587).epsilon(1e-3));
  CHECK(1.0 - oracle::normal_cdf(2.0, 0.0, 1.0) == doctest::Approx(0.0228).epsilon(1e-2));

  // Both tails saturate at 1 below the support: tie to the lowest index.
  std::vector<TypeInfo> types = {{"t0", 0}};
  std::vector<PolicyInfo> policies = {{"p0", 0}, {"p1", 1}};
  std::vector<PerfModel> prow;
  prow.emplace_back(DiscreteValues::fit({4.0, 6.0}, 0.01, {4.0, 6.0}));
  prow.emplace_back(DiscreteValues::fit({5.0, 7.0}, 0.01, {5.0, 7.0}));
  SignalSpaceInfo space;
  space.kind = SignalKind::kCategoryBin;
  space.category_bins = 2;
  std::vector<ObsModel> orow;
  orow.emplace_back(Categorical::fit(2, 1.0, {0}));
  orow.emplace_back(Categorical::fit(2, 1.0, {0}));
  const KnowledgeBase discrete(types, policies, {prow}, {orow}, Belief::uniform(1), space);
  CHECK(select_pi(discrete, Belief::point_mass(1, 0), 0.0).value == 0);

  // Point mass just under U+ loses to any positive tail.
  std::vector<PerfModel> prow2;
  prow2.emplace_back(DiscreteValues::fit({1.9}, 0.01, {1.9}));
  prow2.emplace_back(Gaussian(2.0, 1.0));
  const KnowledgeBase mixed(types, policies, {prow2}, {orow}, Belief::uniform(1), space);
  CHECK(select_pi(mixed, Belief::point_mass(1, 0), 2.0).value == 1);
}

TEST_CASE("expected improvement against the normal-cdf oracle") {
  const KnowledgeBase kb = gaussian_pair_kb();
  const Belief b = Belief::point_mass(1, 0);
  // U_bar = 1; F(1|N(0,1)) = 0.8413 vs F(1|N(1,1)) = 0.5.
  CHECK(oracle::normal_cdf(1.0, 0.0, 1.0) == doctest::Approx(0.8413).epsilon(1e-3));
  CHECK(select_ei(kb, b).value == 1);

  const KnowledgeBase single = oracle::make_categorical_kb({{2.0}}, flat_obs(1, 1, 2));
  CHECK(select_ei(single, Belief::point_mass(1, 0)).value == 0);

  const KnowledgeBase twins =
      oracle::make_categorical_kb({{1.0, 1.0}}, flat_obs(1, 2, 2));
  CHECK(select_ei(twins, Belief::point_mass(1, 0)).value == 0);
}

TEST_CASE("pi and ei match brute-force score sums on random libraries") {
  SplitRng rng(515);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + rng.uniform_int(9);
    const int p = 2 + rng.uniform_int(9);
    std::vector<std::vector<double>> means(n, std::vector<double>(p));
    std::vector<std::vector<double>> sds(n, std::vector<double>(p));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < p; ++j) {
        means[i][j] = rng.normal(0.0, 3.0);
        sds[i][j] = 0.5 + rng.uniform() * 2.0;
      }
    std::vector<TypeInfo> types;
    std::vector<PolicyInfo> policies;
    std::vector<std::vector<PerfModel>> perf;
    std::vector<std::vector<ObsModel>> obs;
    for (int i = 0; i < n; ++i) types.push_back({"t", i});
    for (int j = 0; j < p; ++j) policies.push_back({"p", j});
    for (int i = 0; i < n; ++i) {
      std::vector<PerfModel> prow;
      std::vector<ObsModel> orow;
      for (int j = 0; j < p; ++j) {
        prow.emplace_back(Gaussian(means[i][j], sds[i][j]));
        orow.emplace_back(Categorical::fit(2, 1.0, {0, 1}));
      }
      perf.push_back(std::move(prow));
      obs.push_back(std::move(orow));
    }
    SignalSpaceInfo space;
    space.kind = SignalKind::kCategoryBin;
    space.category_bins = 2;
    const KnowledgeBase kb(types, policies, perf, obs, Belief::uniform(n), space);
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.uniform_pos();
    const Belief belief = Belief::from_unnormalized(w);

    const double u_plus = rng.normal(2.0, 1.0);
    int best_pi = 0, best_ei = 0;
    double best_tail = -1.0, best_cdf = 2.0;
    double u_bar = -1e300;
    for (int j = 0; j < p; ++j) {
      double util = 0.0;
      for (int i = 0; i < n; ++i) util += belief.weights[i] * means[i][j];
      u_bar = std::max(u_bar, util);
    }
    for (int j = 0; j < p; ++j) {
      double tail = 0.0, cdf = 0.0;
      for (int i = 0; i < n; ++i) {
        tail += belief.weights[i] * (1.0 - oracle::normal_cdf(u_plus, means[i][j], sds[i][j]));
        cdf += belief.weights[i] * oracle::normal_cdf(u_bar, means[i][j], sds[i][j]);
      }
      if (tail > best_tail) {
        best_tail = tail;
        best_pi = j;
      }
      if (cdf < best_cdf) {
        best_cdf = cdf;
        best_ei = j;
      }
    }
    CHECK(select_pi(kb, belief, u_plus).value == best_pi);
    CHECK(select_ei(kb, belief).value == best_ei);
  }
}

TEST_CASE("expected posterior") {
  // Point mass is preserved under any signal.
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, {{{0.9, 0.1}, {0.5, 0.5}}, {{0.1, 0.9}, {0.5, 0.5}}});
  const Belief pm = Belief::point_mass(2, 1);
  const Belief post_pm = expected_posterior(kb, pm, {0});
  CHECK(post_pm.weights[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(post_pm.weights[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Identical observation models leave the belief untouched.
  const Belief b = belief_of({0.3, 0.7});
  const Belief post_flat = expected_posterior(kb, b, {1});
  CHECK(post_flat.weights[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(post_flat.weights[1] == doctest::Approx(0.7).epsilon(1e-12));

  // Disjoint supports: each signal resolves fully but the mixture averages
  // back to the prior.
  const KnowledgeBase disjoint = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, {{{1.0, 0.0}, {0.5, 0.5}}, {{0.0, 1.0}, {0.5, 0.5}}});
  const Belief post_dis = expected_posterior(disjoint, belief_of({0.5, 0.5}), {0});
  CHECK(post_dis.weights[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(post_dis.weights[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(post_dis.is_valid(1e-9));
}

TEST_CASE("posterior predictive sums to one on discrete spaces") {
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, {{{0.9, 0.1}, {0.2, 0.8}}, {{0.4, 0.6}, {0.5, 0.5}}});
  for (int p = 0; p < 2; ++p) {
    double total = 0.0;
    for (const auto& [sig, prob] : posterior_predictive(kb, belief_of({0.25, 0.75}), {p}))
      total += prob;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("belief-entropy heuristic") {
  // Point mass: H = 0 for every policy, so BE reduces to greedy.
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{2.0, 5.0}, {1.0, 0.0}}, flat_obs(2, 2, 2));
  CHECK(select_be(kb, Belief::point_mass(2, 0), 3.0).value ==
        select_greedy(kb, Belief::point_mass(2, 0)).value);

  // kappa -> 0 recovers the greedy choice.
  const KnowledgeBase informative = oracle::make_categorical_kb(
      {{2.0, 5.0}, {1.0, 0.0}}, {{{1.0, 0.0}, {0.5, 0.5}}, {{0.0, 1.0}, {0.5, 0.5}}});
  CHECK(select_be(informative, Belief::uniform(2), 1e-12).value ==
        select_greedy(informative, Belief::uniform(2)).value);

  // Equal expected utility: the type-discriminating policy wins for any
  // kappa > 0. Policy 1 discriminates, policy 0 does not.
  const KnowledgeBase equal = oracle::make_categorical_kb(
      {{3.0, 3.0}, {3.0, 3.0}}, {{{0.5, 0.5}, {1.0, 0.0}}, {{0.5, 0.5}, {0.0, 1.0}}});
  for (double kappa : {1e-6, 0.1, 1.0, 50.0})
    CHECK(select_be(equal, Belief::uniform(2), kappa).value == 1);
  // Hand enumeration: the discriminating policy's expected posterior entropy
  // is 0; the flat one keeps H(uniform) = ln 2.
  CHECK(expected_posterior_entropy(equal, Belief::uniform(2), {1}) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(expected_posterior_entropy(equal, Belief::uniform(2), {0}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("knowledge gradient on hand-enumerable instances") {
  // Point-mass belief: no information left to gain.
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, {{{1.0, 0.0}, {0.5, 0.5}}, {{0.0, 1.0}, {0.5, 0.5}}});
  for (int p = 0; p < 2; ++p)
    CHECK(knowledge_gradient(kb, Belief::point_mass(2, 0), {p}, 1, 5) ==
          doctest::Approx(0.0).epsilon(1e-12));

  // Uninformative models: zero gradient.
  const KnowledgeBase flat = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, flat_obs(2, 2, 2));
  CHECK(knowledge_gradient(flat, Belief::uniform(2), {0}, 1, 5) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Disjoint signals, utilities ((1,0),(0,1)), uniform belief:
  // nu = 1*(0.5*1 + 0.5*1) - 0.5 = 0.5 by direct enumeration.
  CHECK(knowledge_gradient(kb, Belief::uniform(2), {0}, 1, 5) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("knowledge gradient matches exhaustive enumeration on random instances") {
  SplitRng rng(808);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + rng.uniform_int(2);  // 2x2 and 3x3 neighbourhood
    const int p = n;
    const int bins = 2 + rng.uniform_int(3);
    std::vector<std::vector<double>> means(n, std::vector<double>(p));
    std::vector<std::vector<std::vector<double>>> obs(
        n, std::vector<std::vector<double>>(p, std::vector<double>(bins)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < p; ++j) {
        means[i][j] = rng.normal(0.0, 2.0);
        double total = 0.0;
        for (int k = 0; k < bins; ++k) {
          obs[i][j][static_cast<std::size_t>(k)] = rng.uniform_pos();
          total += obs[i][j][static_cast<std::size_t>(k)];
        }
        for (int k = 0; k < bins; ++k) obs[i][j][static_cast<std::size_t>(k)] /= total;
      }
    const KnowledgeBase kb = oracle::make_categorical_kb(means, obs);
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.uniform_pos();
    const Belief belief = Belief::from_unnormalized(w);
    for (int j = 0; j < p; ++j) {
      const double nu = knowledge_gradient(kb, belief, {j}, 1, 3);
      CHECK(nu == doctest::Approx(oracle::kg_enumerate(kb, belief.weights, j)).epsilon(1e-9));
      CHECK(nu >= -1e-9);  // information never hurts
    }
  }
}

TEST_CASE("kg selection") {
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 0.0}, {0.0, 1.0}}, {{{1.0, 0.0}, {0.5, 0.5}}, {{0.0, 1.0}, {0.5, 0.5}}});
  // t = K: zero lookahead weight, same as greedy.
  CHECK(select_kg(kb, Belief::uniform(2), 3, 3).value ==
        select_greedy(kb, Belief::uniform(2)).value);
  CHECK(select_kg(kb, Belief::point_mass(2, 1), 1, 9).value ==
        select_greedy(kb, Belief::point_mass(2, 1)).value);
  // Equal expected utilities with K - t = 1: the informative policy wins.
  CHECK(knowledge_gradient(kb, Belief::uniform(2), {0}, 2, 3) >
        knowledge_gradient(kb, Belief::uniform(2), {1}, 2, 3));
  CHECK(select_kg(kb, Belief::uniform(2), 2, 3).value == 0);
}

TEST_CASE("every strategy returns a valid policy id") {
  SplitRng rng(42);
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 2.0, 0.0}, {0.5, 0.1, 3.0}},
      {{{0.7, 0.3}, {0.5, 0.5}, {0.2, 0.8}}, {{0.3, 0.7}, {0.6, 0.4}, {0.9, 0.1}}});
  const UtilityRange range{-5.0, 5.0};
  for (StrategyKind kind : {StrategyKind::kGreedy, StrategyKind::kEpsGreedy,
                            StrategyKind::kSampleBelief, StrategyKind::kPi,
                            StrategyKind::kEi, StrategyKind::kBe, StrategyKind::kKg}) {
    StrategyConfig cfg;
    cfg.kind = kind;
    cfg.epsilon = 0.3;
    for (int rep = 0; rep < 10; ++rep) {
      Eigen::VectorXd w(2);
      w[0] = rng.uniform_pos();
      w[1] = rng.uniform_pos();
      const PolicyId id =
          select_policy(kb, Belief::from_unnormalized(w), cfg, 1, 4, range, rng);
      CHECK(id.value >= 0);
      CHECK(id.value < 3);
    }
  }
}

TEST_CASE("selections are invariant under belief rescaling before normalization") {
  const KnowledgeBase kb = oracle::make_categorical_kb(
      {{1.0, 2.0}, {3.0, 0.5}}, {{{0.8, 0.2}, {0.5, 0.5}}, {{0.3, 0.7}, {0.4, 0.6}}});
  Eigen::VectorXd w(2);
  w << 0.4, 1.2;
  const Belief a = Belief::from_unnormalized(w);
  const Belief c = Belief::from_unnormalized(Eigen::VectorXd(w * 250.0));
  CHECK(select_pi(kb, a, 4.0).value == select_pi(kb, c, 4.0).value);
  CHECK(select_ei(kb, a).value == select_ei(kb, c).value);
  CHECK(select_be(kb, a, 1.0).value == select_be(kb, c, 1.0).value);
  CHECK(select_kg(kb, a, 1, 3).value == select_kg(kb, c, 1, 3).value);
}

TEST_CASE("one-type library: heuristics agree on location-shifted shapes") {
  // Same sd, different means: greedy, sampling, BE, KG and EI all pick the
  // highest mean.
  std::vector<TypeInfo> types = {{"t0", 0}};
  std::vector<PolicyInfo> policies = {{"p0", 0}, {"p1", 1}, {"p2", 2}};
  std::vector<PerfModel> prow;
  prow.emplace_back(Gaussian(1.0, 2.0));
  prow.emplace_back(Gaussian(4.0, 2.0));
  prow.emplace_back(Gaussian(2.5, 2.0));
  std::vector<ObsModel> orow(3, Categorical::fit(2, 1.0, {0, 1}));
  SignalSpaceInfo space;
  space.kind = SignalKind::kCategoryBin;
  space.category_bins = 2;
  const KnowledgeBase kb(types, policies, {prow}, {orow}, Belief::uniform(1), space);
  const Belief b = Belief::point_mass(1, 0);
  SplitRng rng(5);
  CHECK(select_greedy(kb, b).value == 1);
  CHECK(select_sample_belief(kb, b, rng).value == 1);
  CHECK(select_be(kb, b, 1.0).value == 1);
  CHECK(select_kg(kb, b, 1, 3).value == 1);
  CHECK(select_ei(kb, b).value == 1);
}
