#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "bpr/knowledge_base.hpp"
#include "bpr/rng.hpp"
#include "bpr/selection.hpp"
#include "bpr/signal.hpp"

namespace bpr {

// One task instance. Discrete domains use `index`; the golf domain carries
// the hole distance in `param`.
struct Task {
  int index = -1;
  double param = 0.0;
};

// Which family the performance model is fitted with.
enum class PerfFamily { kGaussian, kDiscreteValues };

// A simulated environment: type list, task sampling, policy library and
// episode execution. Immutable after construction; episode execution is pure
// given (task, policy, rng stream).
class Domain {
 public:
  virtual ~Domain() = default;

  virtual std::string name() const = 0;
  virtual int num_types() const = 0;
  virtual int num_policies() const = 0;
  virtual SignalKind signal_kind() const = 0;
  virtual SignalSpaceInfo signal_space() const = 0;
  virtual PerfFamily perf_family() const = 0;
  virtual std::vector<double> return_values() const { return {}; }
  virtual UtilityRange utility_range() const = 0;
  virtual int default_horizon() const = 0;

  virtual Task training_task(int type_index) const = 0;
  virtual Task sample_task(SplitRng& rng) const = 0;
  virtual EpisodeOutcome run_episode(const Task& task, int policy_index,
                                     SplitRng& rng) const = 0;

  virtual std::string type_name(int type_index) const;
  virtual std::string policy_name(int policy_index) const;

  // Stable cache key for per-task memoization.
  virtual std::uint64_t task_key(const Task& task) const;
};

struct DomainOptions {
  SignalKind telephone_signal = SignalKind::kTransitionTrace;
  std::uint64_t surveillance_map_seed = 1;
};

// Domains selectable by name: "golf", "telephone", "surveillance".
std::unique_ptr<Domain> make_domain(const std::string& name, const DomainOptions& opts);

}  // namespace bpr
