#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpr/domains/domain.hpp"
#include "bpr/knowledge_base.hpp"

namespace bpr {

struct TrainingOptions {
  int episodes_per_pair = 1000;
  double smoothing_alpha = 0.01;
  double sd_floor = 1e-3;
};

struct TrainingReport {
  int episodes_per_pair = 0;
  std::vector<std::vector<int>> sample_counts;     // [type][policy]
  std::map<std::string, std::size_t> storage_bytes;  // per model family
  friend bool operator==(const TrainingReport&, const TrainingReport&) = default;
};

// Offline phase: run every library policy on every type's canonical task,
// fit the observation-model family configured by the domain's signal kind
// and a performance model per pair. When the signal is the episodic return,
// one fitted model serves both roles. Per-pair rng streams are derived from
// (seed, type, policy), so pairs can be trained in any order.
KnowledgeBase train_offline(const Domain& domain, const std::vector<int>& type_indices,
                            const std::vector<int>& policy_indices,
                            const TrainingOptions& opts, std::uint64_t seed,
                            TrainingReport* report = nullptr);

// Full library convenience overload.
KnowledgeBase train_offline(const Domain& domain, const TrainingOptions& opts,
                            std::uint64_t seed, TrainingReport* report = nullptr);

}  // namespace bpr
