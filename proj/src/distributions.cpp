#include "bpr/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kLogMinLikelihood = -690.77552789821368;  // log(1e-300)

}  // namespace

Gaussian::Gaussian(double mean, double sd) : mean_(mean), sd_(sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("Gaussian: sd must be positive");
}

Gaussian Gaussian::fit(std::vector<double> samples, double sd_floor) {
  if (samples.empty()) throw EmptySequence("Gaussian::fit: no samples");
  std::sort(samples.begin(), samples.end());
  double sum = 0.0;
  for (double v : samples) sum += v;
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  const double sd = samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return Gaussian(mean, std::max(sd, sd_floor));
}

double Gaussian::pdf(double x) const { return std::exp(log_pdf(x)); }

double Gaussian::log_pdf(double x) const {
  const double z = (x - mean_) / sd_;
  const double lp = -0.5 * z * z - std::log(sd_) - kLogSqrt2Pi;
  return std::max(lp, kLogMinLikelihood);
}

double Gaussian::cdf(double x) const {
  const double z = (x - mean_) / (sd_ * 1.4142135623730950488);
  return 0.5 * std::erfc(-z);
}

Categorical::Categorical(int num_bins, double alpha)
    : counts_(static_cast<std::size_t>(num_bins), 0), alpha_(alpha) {
  if (num_bins <= 0) throw std::invalid_argument("Categorical: need at least one bin");
  if (!(alpha > 0.0)) throw std::invalid_argument("Categorical: alpha must be positive");
}

Categorical::Categorical(std::vector<std::int64_t> counts, double alpha)
    : counts_(std::move(counts)), alpha_(alpha) {
  if (counts_.empty()) throw std::invalid_argument("Categorical: need at least one bin");
  if (!(alpha > 0.0)) throw std::invalid_argument("Categorical: alpha must be positive");
  for (std::int64_t c : counts_) total_ += c;
}

Categorical Categorical::fit(int num_bins, double alpha, const std::vector<int>& bins) {
  Categorical m(num_bins, alpha);
  for (int b : bins) {
    if (b < 0 || b >= num_bins) throw FamilyMismatch("Categorical::fit: bin out of range");
    m.add(b);
  }
  return m;
}

double Categorical::probability(int bin) const {
  if (bin < 0 || bin >= num_bins())
    throw FamilyMismatch("Categorical: bin outside the declared space");
  const double denom =
      static_cast<double>(total_) + alpha_ * static_cast<double>(num_bins());
  return (static_cast<double>(counts_[static_cast<std::size_t>(bin)]) + alpha_) / denom;
}

double Categorical::log_probability(int bin) const { return std::log(probability(bin)); }

int Categorical::sample(SplitRng& rng) const {
  double u = rng.uniform();
  double acc = 0.0;
  for (int b = 0; b < num_bins(); ++b) {
    acc += probability(b);
    if (u < acc) return b;
  }
  return num_bins() - 1;
}

DiscreteValues::DiscreteValues(std::vector<double> values, double alpha)
    : values_(std::move(values)),
      counts_(values_.size(), 0),
      alpha_(alpha) {
  if (values_.empty()) throw std::invalid_argument("DiscreteValues: empty value set");
  if (!(alpha > 0.0)) throw std::invalid_argument("DiscreteValues: alpha must be positive");
  if (!std::is_sorted(values_.begin(), values_.end()))
    throw std::invalid_argument("DiscreteValues: values must be sorted");
}

DiscreteValues DiscreteValues::fit(std::vector<double> values, double alpha,
                                   const std::vector<double>& samples) {
  DiscreteValues m(std::move(values), alpha);
  for (double s : samples) {
    m.counts_[static_cast<std::size_t>(m.index_of(s))]++;
    m.total_++;
  }
  return m;
}

int DiscreteValues::index_of(double value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value - 1e-9);
  if (it == values_.end() || std::abs(*it - value) > 1e-9)
    throw FamilyMismatch("DiscreteValues: value outside the declared set");
  return static_cast<int>(it - values_.begin());
}

double DiscreteValues::mean() const {
  const double denom =
      static_cast<double>(total_) + alpha_ * static_cast<double>(values_.size());
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    m += values_[i] * (static_cast<double>(counts_[i]) + alpha_) / denom;
  return m;
}

double DiscreteValues::cdf(double u) const {
  const double denom =
      static_cast<double>(total_) + alpha_ * static_cast<double>(values_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size() && values_[i] <= u; ++i)
    acc += (static_cast<double>(counts_[i]) + alpha_) / denom;
  return acc;
}

double DiscreteValues::pmf(double value) const {
  const int i = index_of(value);
  const double denom =
      static_cast<double>(total_) + alpha_ * static_cast<double>(values_.size());
  return (static_cast<double>(counts_[static_cast<std::size_t>(i)]) + alpha_) / denom;
}

double DiscreteValues::log_pmf(double value) const { return std::log(pmf(value)); }

double DiscreteValues::sample(SplitRng& rng) const {
  double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += pmf(values_[i]);
    if (u < acc) return values_[i];
  }
  return values_.back();
}

MarkovTraceModel::MarkovTraceModel(Target target, int num_states, int num_actions,
                                   std::vector<double> reward_values, double alpha)
    : target_(target),
      num_states_(num_states),
      num_actions_(num_actions),
      reward_values_(std::move(reward_values)),
      alpha_(alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("MarkovTraceModel: alpha must be positive");
  if (target_ == Target::kReward && reward_values_.empty())
    throw std::invalid_argument("MarkovTraceModel: reward target needs a value set");
}

int MarkovTraceModel::target_count() const {
  return target_ == Target::kNextState ? num_states_
                                       : static_cast<int>(reward_values_.size());
}

int MarkovTraceModel::reward_index(double r) const {
  auto it = std::lower_bound(reward_values_.begin(), reward_values_.end(), r - 1e-9);
  if (it == reward_values_.end() || std::abs(*it - r) > 1e-9)
    throw FamilyMismatch("MarkovTraceModel: reward outside the declared set");
  return static_cast<int>(it - reward_values_.begin());
}

const MarkovTraceModel::Conditional* MarkovTraceModel::find(int state, int action) const {
  for (const auto& c : conditionals_)
    if (c.state == state && c.action == action) return &c;
  return nullptr;
}

double MarkovTraceModel::log_step(int state, int action, int target) const {
  if (state < 0 || state >= num_states_ || action < 0 || action >= num_actions_)
    throw FamilyMismatch("MarkovTraceModel: state/action outside the declared space");
  const double tc = static_cast<double>(target_count());
  const Conditional* c = find(state, action);
  if (c == nullptr) return -std::log(tc);  // never observed: uniform
  std::int64_t count = 0;
  for (std::size_t i = 0; i < c->targets.size(); ++i)
    if (c->targets[i] == target) count = c->counts[i];
  return std::log((static_cast<double>(count) + alpha_) /
                  (static_cast<double>(c->total) + alpha_ * tc));
}

double MarkovTraceModel::log_likelihood(const TransitionTrace& t) const {
  if (target_ != Target::kNextState)
    throw FamilyMismatch("MarkovTraceModel: transition trace on a reward model");
  double lp = 0.0;  // empty trace: empty product = 1
  for (const auto& st : t.steps) lp += log_step(st.state, st.action, st.next_state);
  return lp;
}

double MarkovTraceModel::log_likelihood(const RewardTrace& t) const {
  if (target_ != Target::kReward)
    throw FamilyMismatch("MarkovTraceModel: reward trace on a transition model");
  double lp = 0.0;
  for (const auto& st : t.steps) lp += log_step(st.state, st.action, reward_index(st.reward));
  return lp;
}

namespace {

std::vector<int> trace_key(const TransitionTrace& t) {
  std::vector<int> k;
  k.reserve(t.steps.size() * 3);
  for (const auto& s : t.steps) {
    k.push_back(s.state);
    k.push_back(s.action);
    k.push_back(s.next_state);
  }
  return k;
}

std::vector<int> trace_key(const RewardTrace& t, const MarkovTraceModel& m) {
  std::vector<int> k;
  k.reserve(t.steps.size() * 3);
  for (const auto& s : t.steps) {
    k.push_back(s.state);
    k.push_back(s.action);
    auto it = std::lower_bound(m.reward_values().begin(), m.reward_values().end(),
                               s.reward - 1e-9);
    k.push_back(static_cast<int>(it - m.reward_values().begin()));
  }
  return k;
}

}  // namespace

MarkovTraceModel MarkovTraceModel::fit_transitions(
    int num_states, int num_actions, double alpha,
    const std::vector<TransitionTrace>& traces) {
  MarkovTraceModel m(Target::kNextState, num_states, num_actions, {}, alpha);
  std::map<std::pair<int, int>, std::vector<std::int64_t>> cond;
  std::map<std::vector<int>, std::pair<std::int64_t, TransitionTrace>> classes;
  for (const auto& t : traces) {
    for (const auto& st : t.steps) {
      auto& counts = cond[{st.state, st.action}];
      if (counts.empty()) counts.assign(static_cast<std::size_t>(num_states), 0);
      counts[static_cast<std::size_t>(st.next_state)]++;
    }
    auto& cls = classes[trace_key(t)];
    cls.first++;
    cls.second = t;
  }
  std::vector<Conditional> conds;
  for (const auto& [key, counts] : cond) {
    Conditional c;
    c.state = key.first;
    c.action = key.second;
    for (int v = 0; v < num_states; ++v) {
      if (counts[static_cast<std::size_t>(v)] > 0) {
        c.targets.push_back(v);
        c.counts.push_back(counts[static_cast<std::size_t>(v)]);
        c.total += counts[static_cast<std::size_t>(v)];
      }
    }
    conds.push_back(std::move(c));
  }
  m.set_conditionals(std::move(conds));
  std::vector<TraceClass> cls;
  for (auto& [key, val] : classes) cls.push_back({Signal(val.second), val.first});
  m.set_classes(std::move(cls));
  m.num_traces_ = static_cast<std::int64_t>(traces.size());
  return m;
}

MarkovTraceModel MarkovTraceModel::fit_rewards(int num_states, int num_actions,
                                               std::vector<double> reward_values,
                                               double alpha,
                                               const std::vector<RewardTrace>& traces) {
  MarkovTraceModel m(Target::kReward, num_states, num_actions, std::move(reward_values),
                     alpha);
  std::map<std::pair<int, int>, std::vector<std::int64_t>> cond;
  std::map<std::vector<int>, std::pair<std::int64_t, RewardTrace>> classes;
  const int tc = m.target_count();
  for (const auto& t : traces) {
    for (const auto& st : t.steps) {
      auto& counts = cond[{st.state, st.action}];
      if (counts.empty()) counts.assign(static_cast<std::size_t>(tc), 0);
      counts[static_cast<std::size_t>(m.reward_index(st.reward))]++;
    }
    auto& cls = classes[trace_key(t, m)];
    cls.first++;
    cls.second = t;
  }
  std::vector<Conditional> conds;
  for (const auto& [key, counts] : cond) {
    Conditional c;
    c.state = key.first;
    c.action = key.second;
    for (int v = 0; v < tc; ++v) {
      if (counts[static_cast<std::size_t>(v)] > 0) {
        c.targets.push_back(v);
        c.counts.push_back(counts[static_cast<std::size_t>(v)]);
        c.total += counts[static_cast<std::size_t>(v)];
      }
    }
    conds.push_back(std::move(c));
  }
  m.set_conditionals(std::move(conds));
  std::vector<TraceClass> cls;
  for (auto& [key, val] : classes) cls.push_back({Signal(val.second), val.first});
  m.set_classes(std::move(cls));
  m.num_traces_ = static_cast<std::int64_t>(traces.size());
  return m;
}

void MarkovTraceModel::set_conditionals(std::vector<Conditional> c) {
  conditionals_ = std::move(c);
}

void MarkovTraceModel::set_classes(std::vector<TraceClass> c) {
  classes_ = std::move(c);
  num_traces_ = 0;
  for (const auto& cl : classes_) num_traces_ += cl.count;
}

Signal MarkovTraceModel::sample(SplitRng& rng) const {
  if (classes_.empty()) throw DomainFailure("MarkovTraceModel: no observed traces");
  double u = rng.uniform() * static_cast<double>(num_traces_);
  double acc = 0.0;
  for (const auto& c : classes_) {
    acc += static_cast<double>(c.count);
    if (u < acc) return c.trace;
  }
  return classes_.back().trace;
}

double perf_mean(const PerfModel& m) {
  return std::visit([](const auto& d) { return d.mean(); }, m);
}

double perf_cdf(const PerfModel& m, double u) {
  return std::visit([u](const auto& d) { return d.cdf(u); }, m);
}

double perf_sample(const PerfModel& m, SplitRng& rng) {
  return std::visit([&rng](const auto& d) { return d.sample(rng); }, m);
}

namespace {

double scalar_of(const Signal& s) {
  if (const auto* u = std::get_if<EpisodicReturn>(&s)) return u->value;
  if (const auto* x = std::get_if<ScalarReal>(&s)) return x->value;
  throw FamilyMismatch("expected a scalar signal");
}

}  // namespace

double obs_log_likelihood(const ObsModel& obs, const PerfModel& perf, const Signal& s) {
  if (const auto* cat = std::get_if<Categorical>(&obs)) {
    const auto* bin = std::get_if<CategoryBin>(&s);
    if (bin == nullptr) throw FamilyMismatch("categorical model expects a category bin");
    return cat->log_probability(bin->bin);
  }
  if (const auto* g = std::get_if<Gaussian>(&obs)) return g->log_pdf(scalar_of(s));
  if (const auto* dv = std::get_if<DiscreteValues>(&obs)) return dv->log_pmf(scalar_of(s));
  if (const auto* tm = std::get_if<MarkovTraceModel>(&obs)) {
    if (const auto* t = std::get_if<TransitionTrace>(&s)) return tm->log_likelihood(*t);
    if (const auto* r = std::get_if<RewardTrace>(&s)) return tm->log_likelihood(*r);
    throw FamilyMismatch("trace model expects a trace signal");
  }
  // SameAsPerf: evaluate the realized return under the performance model.
  const double v = scalar_of(s);
  if (const auto* g = std::get_if<Gaussian>(&perf)) return g->log_pdf(v);
  return std::get<DiscreteValues>(perf).log_pmf(v);
}

Signal obs_sample(const ObsModel& obs, const PerfModel& perf, SignalKind kind,
                  SplitRng& rng) {
  if (const auto* cat = std::get_if<Categorical>(&obs)) return CategoryBin{cat->sample(rng)};
  if (const auto* g = std::get_if<Gaussian>(&obs)) {
    const double v = g->sample(rng);
    if (kind == SignalKind::kEpisodicReturn) return EpisodicReturn{v};
    return ScalarReal{v};
  }
  if (const auto* dv = std::get_if<DiscreteValues>(&obs)) {
    const double v = dv->sample(rng);
    if (kind == SignalKind::kScalarReal) return ScalarReal{v};
    return EpisodicReturn{v};
  }
  if (const auto* tm = std::get_if<MarkovTraceModel>(&obs)) return tm->sample(rng);
  const double v = perf_sample(perf, rng);
  if (kind == SignalKind::kScalarReal) return ScalarReal{v};
  return EpisodicReturn{v};
}

}  // namespace bpr
