#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "bpr/domains/golf.hpp"
#include "bpr/domains/surveillance.hpp"
#include "bpr/domains/telephone.hpp"
#include "bpr/training.hpp"
#include "oracles.hpp"

using namespace bpr;

TEST_CASE("golf bins") {
  CHECK(GolfDomain::bin_of(35.3657) == GolfDomain::bin_from_label("20..50"));
  CHECK(GolfDomain::bin_of(13.1603) == GolfDomain::bin_from_label("5..20"));
  CHECK(GolfDomain::bin_of(4.2821) == GolfDomain::bin_from_label("-5..5"));
  CHECK(GolfDomain::bin_of(-60.0) == 0);
  CHECK(GolfDomain::bin_of(-30.0) == 1);
  CHECK(GolfDomain::bin_of(-10.0) == 2);
  CHECK(GolfDomain::bin_of(0.0) == 3);
  CHECK(GolfDomain::bin_of(10.0) == 4);
  CHECK(GolfDomain::bin_of(30.0) == 5);
  CHECK(GolfDomain::bin_of(80.0) == 6);
}

TEST_CASE("golf zero-noise episode") {
  GolfDomain noiseless({{"3-wood", 215.0, 1e-12},
                        {"3-iron", 180.0, 1e-12},
                        {"6-iron", 150.0, 1e-12},
                        {"9-iron", 115.0, 1e-12}},
                       {110.0, 150.0, 170.0, 220.0});
  SplitRng rng(1);
  const EpisodeOutcome out = noiseless.run_episode({-1, 179.0}, 1, rng);
  CHECK(out.utility == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::get<CategoryBin>(out.signal).bin == GolfDomain::bin_from_label("-5..5"));
}

TEST_CASE("golf mean utility matches the folded-normal closed form") {
  GolfDomain domain;
  SplitRng rng = derive_stream(4, {1});
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += domain.run_episode({-1, 110.0}, 3, rng).utility;
  const double mc = sum / n;
  CHECK(-oracle::folded_normal_mean(5.0, 4.4) == doctest::Approx(-5.57).epsilon(0.002));
  CHECK(mc == doctest::Approx(-oracle::folded_normal_mean(5.0, 4.4)).epsilon(0.009));
  CHECK(mc < 0.0);
}

TEST_CASE("golf: the nearest club wins on a 5yd grid") {
  GolfDomain domain;
  const auto& clubs = domain.clubs();
  int point = 0;
  for (double hole = 110.0; hole <= 225.0; hole += 5.0, ++point) {
    double best_mc = -1e300;
    int best_club = -1, nearest = -1;
    double nearest_gap = 1e300;
    for (int c = 0; c < 4; ++c) {
      SplitRng rng = derive_stream(99, {static_cast<std::uint64_t>(point),
                                        static_cast<std::uint64_t>(c)});
      double sum = 0.0;
      const int n = 100000;
      for (int i = 0; i < n; ++i) sum += domain.run_episode({-1, hole}, c, rng).utility;
      if (sum / n > best_mc) {
        best_mc = sum / n;
        best_club = c;
      }
      const double gap = std::abs(clubs[static_cast<std::size_t>(c)].mean_yardage - hole);
      if (gap < nearest_gap) {
        nearest_gap = gap;
        nearest = c;
      }
    }
    CHECK(best_club == nearest);
  }
}

TEST_CASE("telephone: exact match always succeeds") {
  TelephoneDomain domain(SignalKind::kEpisodicReturn);
  SplitRng rng(3);
  for (int lambda = 0; lambda < 20; ++lambda) {
    for (int rep = 0; rep < 200; ++rep) {
      const EpisodeOutcome out = domain.run_episode({lambda, 0.0}, lambda, rng);
      CHECK(out.utility == 10.0);
    }
  }
}

TEST_CASE("telephone: utilities are exactly +10 or -3") {
  TelephoneDomain domain(SignalKind::kTransitionTrace);
  SplitRng rng(17);
  int successes = 0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const int lambda = rng.uniform_int(20);
    const int pi = rng.uniform_int(20);
    const EpisodeOutcome out = domain.run_episode({lambda, 0.0}, pi, rng);
    const bool ok = out.utility == 10.0 || out.utility == -3.0;
    if (!ok) CHECK(ok);
    if (out.utility == 10.0) successes++;
    // The episodic return signal always equals the utility.
    const auto& trace = std::get<TransitionTrace>(out.signal);
    CHECK(trace.steps.size() >= 1);
    CHECK(trace.steps.size() <= 3);
  }
  CHECK(successes > 0);
}

TEST_CASE("telephone: zero rho never succeeds") {
  SplitRng rng(23);
  for (int rep = 0; rep < 20000; ++rep) {
    const CallResult call = simulate_call(0.0, TelephoneDomain::kEta, rng);
    CHECK(call.utility == -3.0);
    const int last = call.transitions.steps.back().next_state;
    CHECK((last == call_state::kHangUp || last == call_state::kAngry));
  }
}

TEST_CASE("telephone: success frequency matches the absorption oracle") {
  SplitRng rng(29);
  // rho = 0.5 via |pi - lambda| = 10.
  TelephoneDomain domain(SignalKind::kEpisodicReturn);
  const double expected = oracle::call_success_probability(0.5, TelephoneDomain::kEta);
  int hits = 0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i)
    if (domain.run_episode({0, 0.0}, 10, rng).utility == 10.0) hits++;
  CHECK(std::abs(hits / static_cast<double>(n) - expected) < 0.002);
}

TEST_CASE("telephone: success frequency is non-decreasing in rho") {
  SplitRng rng(31);
  double prev = -1.0;
  for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double eta = rho == 1.0 ? 0.0 : TelephoneDomain::kEta;
    int hits = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
      if (simulate_call(rho, eta, rng).utility == 10.0) hits++;
    const double freq = hits / static_cast<double>(n);
    CHECK(freq >= prev);
    prev = freq;
  }
  CHECK(prev == 1.0);  // rho = 1, eta = 0 resolves immediately
}

TEST_CASE("telephone: signal informativeness ordering across model families") {
  // Average pairwise total-variation distance between types, per policy,
  // computed over the enumerable outcome classes of each trained model.
  TrainingOptions opts;
  opts.episodes_per_pair = 3000;
  std::vector<int> subset = {0, 4, 8, 12, 16};

  auto avg_tv = [&](SignalKind kind) {
    TelephoneDomain domain(kind);
    const KnowledgeBase kb = train_offline(domain, subset, subset, opts, 5150);
    double acc = 0.0;
    int pairs = 0;
    for (int p = 0; p < kb.num_policies(); ++p) {
      // Collect the union of outcome signals for this policy.
      std::vector<Signal> outcomes;
      if (kind == SignalKind::kEpisodicReturn) {
        outcomes.push_back(EpisodicReturn{-3.0});
        outcomes.push_back(EpisodicReturn{10.0});
      } else {
        std::set<std::string> seen;
        for (int i = 0; i < kb.num_types(); ++i) {
          const auto& tm = std::get<MarkovTraceModel>(kb.obs(i, p));
          for (const auto& cl : tm.observed_classes())
            if (seen.insert(summarize(cl.trace)).second) outcomes.push_back(cl.trace);
        }
      }
      for (int i = 0; i < kb.num_types(); ++i) {
        for (int j = i + 1; j < kb.num_types(); ++j) {
          double tv = 0.0;
          for (const Signal& s : outcomes)
            tv += std::abs(std::exp(kb.log_likelihood(i, p, s)) -
                           std::exp(kb.log_likelihood(j, p, s)));
          acc += 0.5 * tv;
          pairs++;
        }
      }
    }
    return acc / pairs;
  };

  const double tv_sas = avg_tv(SignalKind::kTransitionTrace);
  const double tv_sar = avg_tv(SignalKind::kRewardTrace);
  const double tv_u = avg_tv(SignalKind::kEpisodicReturn);
  CHECK(tv_sas > tv_sar);
  CHECK(tv_sar > tv_u);
}

TEST_CASE("surveillance map construction") {
  const SurveillanceMap map = generate_surveillance_map(1);
  CHECK(map.locations.size() == 68);
  int hills = 0;
  std::set<std::pair<int, int>> distinct;
  for (std::size_t i = 0; i < map.locations.size(); ++i) {
    const GridCell c = map.locations[i];
    CHECK(c.x >= 0);
    CHECK(c.x < 26);
    CHECK(c.y >= 0);
    CHECK(c.y < 26);
    distinct.insert({c.x, c.y});
    if (map.is_hilltop[i]) hills++;
  }
  CHECK(distinct.size() == 68);
  CHECK(hills == 4);

  // Ring members sit at Chebyshev radius 3-5 of their hill.
  for (int h = 0; h < 4; ++h) {
    const GridCell hill = map.locations[static_cast<std::size_t>(h * 17)];
    CHECK(map.is_hilltop[static_cast<std::size_t>(h * 17)]);
    for (int k = 1; k < 17; ++k) {
      const int d = chebyshev(map.locations[static_cast<std::size_t>(h * 17 + k)], hill);
      CHECK(d >= 3);
      CHECK(d <= 5);
    }
  }

  // Determinism in the seed.
  const SurveillanceMap again = generate_surveillance_map(1);
  for (std::size_t i = 0; i < map.locations.size(); ++i)
    CHECK(map.locations[i] == again.locations[i]);
  const SurveillanceMap other = generate_surveillance_map(2);
  bool differs = false;
  for (std::size_t i = 0; i < map.locations.size(); ++i)
    differs |= !(map.locations[i] == other.locations[i]);
  CHECK(differs);
}

TEST_CASE("surveillance signal statistics") {
  SurveillanceDomain domain(1);
  const int n = 200000;

  auto stats = [&](int type, int policy, std::uint64_t seed) {
    SplitRng rng(seed);
    std::vector<double> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i)
      xs.push_back(domain.run_episode({type, 0.0}, policy, rng).utility);
    return std::pair<double, double>(oracle::mean(xs), oracle::sample_sd(xs));
  };

  // Surveying the poacher's own (non-hill) cell: R ~ N(210, 20).
  const auto [m0, sd0] = stats(1, 1, 11);
  CHECK(m0 == doctest::Approx(210.0).epsilon(0.001));
  CHECK(sd0 == doctest::Approx(20.0).epsilon(0.01));

  // Out of range: pure noise, mean 10 and variance 400.
  int far_type = -1, probe = -1;
  for (int i = 0; i < domain.num_types() && far_type < 0; ++i)
    for (int j = 0; j < domain.num_policies(); ++j) {
      if (domain.map().is_hilltop[static_cast<std::size_t>(j)]) continue;
      if (chebyshev(domain.map().locations[static_cast<std::size_t>(i)],
                    domain.map().locations[static_cast<std::size_t>(j)]) > 3) {
        far_type = i;
        probe = j;
        break;
      }
    }
  REQUIRE(far_type >= 0);
  const auto [m1, sd1] = stats(far_type, probe, 12);
  CHECK(m1 == doctest::Approx(10.0).epsilon(0.02));
  CHECK(sd1 * sd1 == doctest::Approx(400.0).epsilon(0.02));

  // Hilltop survey at d = 10: mean 200 - 300 + 10 = -90.
  int hill = -1, ten_away = -1;
  for (int j = 0; j < domain.num_policies() && hill < 0; ++j) {
    if (!domain.map().is_hilltop[static_cast<std::size_t>(j)]) continue;
    for (int i = 0; i < domain.num_types(); ++i) {
      if (chebyshev(domain.map().locations[static_cast<std::size_t>(i)],
                    domain.map().locations[static_cast<std::size_t>(j)]) == 10) {
        hill = j;
        ten_away = i;
        break;
      }
    }
  }
  REQUIRE(hill >= 0);
  const auto [m2, sd2] = stats(ten_away, hill, 13);
  CHECK(m2 == doctest::Approx(-90.0).epsilon(0.002));
  CHECK(sd2 == doctest::Approx(20.0).epsilon(0.01));
}
