#pragma once

#include "bpr/domains/domain.hpp"

namespace bpr {

struct GridCell {
  int x = 0;
  int y = 0;
  friend bool operator==(GridCell a, GridCell b) { return a.x == b.x && a.y == b.y; }
};

inline int chebyshev(GridCell a, GridCell b) {
  int dx = a.x >= b.x ? a.x - b.x : b.x - a.x;
  int dy = a.y >= b.y ? a.y - b.y : b.y - a.y;
  return dx >= dy ? dx : dy;
}

struct SurveillanceMap {
  int grid = 26;
  GridCell base{0, 0};
  std::vector<GridCell> locations;  // 68 target locations
  std::vector<bool> is_hilltop;     // parallel to locations
};

// Deterministic layout for a given seed: 4 hilltops at (6,6), (6,19), (19,6)
// and (19,19), plus 16 locations per hill on the Chebyshev radius 3-5 ring
// around its hilltop.
SurveillanceMap generate_surveillance_map(std::uint64_t seed);

// Poacher monitoring on a 26x26 grid. Types are poacher locations, policy i
// deploys the drone to survey location i, and the scalar signal
//   R = 200 - 30 d + psi   surveying a hilltop, d <= 15
//   R = 200 - 20 d + psi   surveying any other location, d <= 3
//   R =            psi     otherwise
// with psi ~ N(10, 20^2) doubles as the utility.
class SurveillanceDomain : public Domain {
 public:
  explicit SurveillanceDomain(std::uint64_t map_seed);

  std::string name() const override { return "surveillance"; }
  int num_types() const override { return static_cast<int>(map_.locations.size()); }
  int num_policies() const override { return static_cast<int>(map_.locations.size()); }
  SignalKind signal_kind() const override { return SignalKind::kScalarReal; }
  SignalSpaceInfo signal_space() const override;
  PerfFamily perf_family() const override { return PerfFamily::kGaussian; }
  UtilityRange utility_range() const override { return {-250.0, 250.0}; }
  int default_horizon() const override { return 50; }

  Task training_task(int type_index) const override { return {type_index, 0.0}; }
  Task sample_task(SplitRng& rng) const override;
  EpisodeOutcome run_episode(const Task& task, int policy_index,
                             SplitRng& rng) const override;

  std::string type_name(int type_index) const override;
  std::string policy_name(int policy_index) const override;

  const SurveillanceMap& map() const { return map_; }

  static constexpr double kNoiseMean = 10.0;
  static constexpr double kNoiseSd = 20.0;

 private:
  SurveillanceMap map_;
};

}  // namespace bpr
