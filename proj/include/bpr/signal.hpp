#pragma once

#include <string>
#include <variant>
#include <vector>

namespace bpr {

// Identifies a previously-solved task type tau.
struct TypeId {
  int value = 0;
  friend bool operator==(TypeId a, TypeId b) { return a.value == b.value; }
};

// Identifies a policy pi in the library.
struct PolicyId {
  int value = 0;
  friend bool operator==(PolicyId a, PolicyId b) { return a.value == b.value; }
};

struct TransitionStep {
  int state = 0;
  int action = 0;
  int next_state = 0;
  friend bool operator==(const TransitionStep&, const TransitionStep&) = default;
};

struct RewardStep {
  int state = 0;
  int action = 0;
  double reward = 0.0;
  friend bool operator==(const RewardStep&, const RewardStep&) = default;
};

// Full (s, a, s') history of one episode.
struct TransitionTrace {
  std::vector<TransitionStep> steps;
  friend bool operator==(const TransitionTrace&, const TransitionTrace&) = default;
};

// Full (s, a, r) history of one episode.
struct RewardTrace {
  std::vector<RewardStep> steps;
  friend bool operator==(const RewardTrace&, const RewardTrace&) = default;
};

// Total episode return used directly as the observation signal.
struct EpisodicReturn {
  double value = 0.0;
  friend bool operator==(const EpisodicReturn&, const EpisodicReturn&) = default;
};

// Real-valued scalar signal that is not necessarily the return.
struct ScalarReal {
  double value = 0.0;
  friend bool operator==(const ScalarReal&, const ScalarReal&) = default;
};

// Categorical signal identified by a bin id.
struct CategoryBin {
  int bin = 0;
  friend bool operator==(const CategoryBin&, const CategoryBin&) = default;
};

using Signal =
    std::variant<TransitionTrace, RewardTrace, EpisodicReturn, ScalarReal, CategoryBin>;

enum class SignalKind { kTransitionTrace, kRewardTrace, kEpisodicReturn, kScalarReal, kCategoryBin };

SignalKind kind_of(const Signal& s);
std::string signal_kind_name(SignalKind k);
SignalKind parse_signal_kind(const std::string& name);

// Short human-readable form for trace files.
std::string summarize(const Signal& s);

// One policy execution on one task instance.
struct EpisodeOutcome {
  Signal signal;
  double utility = 0.0;
};

}  // namespace bpr
