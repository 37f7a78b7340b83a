#pragma once

#include <array>

#include "bpr/domains/domain.hpp"

namespace bpr {

struct GolfClub {
  std::string name;
  double mean_yardage = 0.0;
  double sd_yardage = 0.0;
};

// Club selection on an unknown hole. A shot with club c lands at
// N(mean_c, sd_c^2) yards; utility is the negative absolute distance to the
// hole, and the signal is the coarse category of the signed error
// (landing - hole) with bin edges at +-5, +-20 and +-50 yards.
class GolfDomain : public Domain {
 public:
  GolfDomain();
  explicit GolfDomain(std::vector<GolfClub> clubs, std::vector<double> training_holes);

  std::string name() const override { return "golf"; }
  int num_types() const override { return static_cast<int>(training_holes_.size()); }
  int num_policies() const override { return static_cast<int>(clubs_.size()); }
  SignalKind signal_kind() const override { return SignalKind::kCategoryBin; }
  SignalSpaceInfo signal_space() const override;
  PerfFamily perf_family() const override { return PerfFamily::kGaussian; }
  UtilityRange utility_range() const override { return {-150.0, 0.0}; }
  int default_horizon() const override { return 3; }

  Task training_task(int type_index) const override;
  Task sample_task(SplitRng& rng) const override;  // hole uniform in [120, 220]
  EpisodeOutcome run_episode(const Task& task, int policy_index,
                             SplitRng& rng) const override;

  std::string type_name(int type_index) const override;
  std::string policy_name(int policy_index) const override;
  std::uint64_t task_key(const Task& task) const override;

  const std::vector<GolfClub>& clubs() const { return clubs_; }

  // Bin index of a signed error; 7 bins with edges -50,-20,-5,5,20,50.
  static int bin_of(double signed_error);
  static int num_bins() { return 7; }
  static std::string bin_label(int bin);
  // Bin from a Table-style label such as "20..50" or "-5..5".
  static int bin_from_label(const std::string& label);

 private:
  std::vector<GolfClub> clubs_;
  std::vector<double> training_holes_;
};

}  // namespace bpr
