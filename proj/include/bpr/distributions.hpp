#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "bpr/rng.hpp"
#include "bpr/signal.hpp"

namespace bpr {

// Lower bound applied to every density/probability evaluation so a single
// observation can never zero out a type permanently.
inline constexpr double kMinLikelihood = 1e-300;

// Gaussian utility / scalar-signal model.
class Gaussian {
 public:
  Gaussian(double mean, double sd);

  // Sample mean and Bessel-corrected sd, clamped at sd_floor. Samples are
  // sorted before accumulation so the fit is order-independent.
  static Gaussian fit(std::vector<double> samples, double sd_floor);

  double mean() const { return mean_; }
  double sd() const { return sd_; }
  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double sample(SplitRng& rng) const { return rng.normal(mean_, sd_); }

 private:
  double mean_;
  double sd_;
};

// Laplace-smoothed counts over a fixed set of category bins.
class Categorical {
 public:
  Categorical(int num_bins, double alpha);
  Categorical(std::vector<std::int64_t> counts, double alpha);

  static Categorical fit(int num_bins, double alpha, const std::vector<int>& bins);

  void add(int bin) { counts_[static_cast<std::size_t>(bin)]++; total_++; }
  // (count + alpha) / (total + alpha * bins)
  double probability(int bin) const;
  double log_probability(int bin) const;
  int sample(SplitRng& rng) const;

  int num_bins() const { return static_cast<int>(counts_.size()); }
  double alpha() const { return alpha_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t total() const { return total_; }

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
  double alpha_;
};

// Smoothed counts over a declared, sorted set of real values. Doubles as a
// performance model (mean, cdf) and an observation model for episodic
// returns over a discrete outcome set.
class DiscreteValues {
 public:
  DiscreteValues(std::vector<double> values, double alpha);

  static DiscreteValues fit(std::vector<double> values, double alpha,
                            const std::vector<double>& samples);

  double mean() const;
  double cdf(double u) const;
  double pmf(double value) const;       // FamilyMismatch off the declared set
  double log_pmf(double value) const;
  double sample(SplitRng& rng) const;

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  double alpha() const { return alpha_; }

 private:
  int index_of(double value) const;
  std::vector<double> values_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
  double alpha_;
};

// Per-(state, action) categorical conditionals over either next states or
// discretized rewards; the empirical transition / reward function of a
// (type, policy) pair. Trace likelihoods are products over steps, kept in
// log space. Distinct observed traces are retained so selection heuristics
// can enumerate the outcome classes of this model.
class MarkovTraceModel {
 public:
  enum class Target { kNextState, kReward };

  MarkovTraceModel(Target target, int num_states, int num_actions,
                   std::vector<double> reward_values, double alpha);

  static MarkovTraceModel fit_transitions(int num_states, int num_actions, double alpha,
                                          const std::vector<TransitionTrace>& traces);
  static MarkovTraceModel fit_rewards(int num_states, int num_actions,
                                      std::vector<double> reward_values, double alpha,
                                      const std::vector<RewardTrace>& traces);

  double log_likelihood(const TransitionTrace& t) const;
  double log_likelihood(const RewardTrace& t) const;

  // Empirical draw over the distinct traces seen in training.
  Signal sample(SplitRng& rng) const;

  Target target() const { return target_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double alpha() const { return alpha_; }
  const std::vector<double>& reward_values() const { return reward_values_; }

  struct Conditional {
    int state = 0;
    int action = 0;
    std::vector<int> targets;                // observed target ids
    std::vector<std::int64_t> counts;        // parallel to targets
    std::int64_t total = 0;
  };
  const std::vector<Conditional>& conditionals() const { return conditionals_; }

  struct TraceClass {
    Signal trace;
    std::int64_t count = 0;
  };
  const std::vector<TraceClass>& observed_classes() const { return classes_; }

  // Mutation used by fitting and deserialization.
  void set_conditionals(std::vector<Conditional> c);
  void set_classes(std::vector<TraceClass> c);

 private:
  int target_count() const;
  double log_step(int state, int action, int target) const;
  const Conditional* find(int state, int action) const;
  int reward_index(double r) const;

  Target target_;
  int num_states_;
  int num_actions_;
  std::vector<double> reward_values_;
  double alpha_;
  std::vector<Conditional> conditionals_;
  std::vector<TraceClass> classes_;
  std::int64_t num_traces_ = 0;
};

// Marker: the observation model is the performance model itself, as is the
// case when the episodic return is used as the signal.
struct SameAsPerf {
  friend bool operator==(const SameAsPerf&, const SameAsPerf&) { return true; }
};

using PerfModel = std::variant<Gaussian, DiscreteValues>;
using ObsModel = std::variant<Categorical, Gaussian, DiscreteValues, MarkovTraceModel, SameAsPerf>;

double perf_mean(const PerfModel& m);
double perf_cdf(const PerfModel& m, double u);
double perf_sample(const PerfModel& m, SplitRng& rng);

double obs_log_likelihood(const ObsModel& obs, const PerfModel& perf, const Signal& s);
Signal obs_sample(const ObsModel& obs, const PerfModel& perf, SignalKind kind, SplitRng& rng);

}  // namespace bpr
