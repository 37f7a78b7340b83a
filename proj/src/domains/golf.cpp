#include "bpr/domains/golf.hpp"

#include <bit>
#include <cmath>

#include "bpr/errors.hpp"

namespace bpr {
namespace {

// Signed-error bin edges in yards; 7 bins overall, outer bins unbounded.
constexpr double kEdges[6] = {-50.0, -20.0, -5.0, 5.0, 20.0, 50.0};

}  // namespace

GolfDomain::GolfDomain()
    : GolfDomain({{"3-wood", 215.0, 8.0},
                  {"3-iron", 180.0, 7.2},
                  {"6-iron", 150.0, 6.0},
                  {"9-iron", 115.0, 4.4}},
                 {110.0, 150.0, 170.0, 220.0}) {}

GolfDomain::GolfDomain(std::vector<GolfClub> clubs, std::vector<double> training_holes)
    : clubs_(std::move(clubs)), training_holes_(std::move(training_holes)) {}

SignalSpaceInfo GolfDomain::signal_space() const {
  SignalSpaceInfo s;
  s.kind = SignalKind::kCategoryBin;
  s.category_bins = num_bins();
  return s;
}

Task GolfDomain::training_task(int type_index) const {
  return {type_index, training_holes_[static_cast<std::size_t>(type_index)]};
}

Task GolfDomain::sample_task(SplitRng& rng) const {
  return {-1, 120.0 + 100.0 * rng.uniform()};
}

EpisodeOutcome GolfDomain::run_episode(const Task& task, int policy_index,
                                       SplitRng& rng) const {
  const GolfClub& club = clubs_[static_cast<std::size_t>(policy_index)];
  const double landing = rng.normal(club.mean_yardage, club.sd_yardage);
  const double error = landing - task.param;
  return {CategoryBin{bin_of(error)}, -std::abs(error)};
}

std::string GolfDomain::type_name(int type_index) const {
  return "hole" + std::to_string(static_cast<int>(training_holes_[type_index]));
}

std::string GolfDomain::policy_name(int policy_index) const {
  return clubs_[static_cast<std::size_t>(policy_index)].name;
}

std::uint64_t GolfDomain::task_key(const Task& task) const {
  return std::bit_cast<std::uint64_t>(task.param);
}

int GolfDomain::bin_of(double signed_error) {
  int bin = 0;
  while (bin < 6 && signed_error >= kEdges[bin]) ++bin;
  return bin;
}

std::string GolfDomain::bin_label(int bin) {
  static const char* kLabels[7] = {"<-50", "-50..-20", "-20..-5", "-5..5",
                                   "5..20", "20..50",  ">50"};
  if (bin < 0 || bin >= 7) throw FamilyMismatch("golf: bin out of range");
  return kLabels[bin];
}

int GolfDomain::bin_from_label(const std::string& label) {
  for (int b = 0; b < 7; ++b)
    if (bin_label(b) == label) return b;
  throw FamilyMismatch("golf: unknown bin label " + label);
}

}  // namespace bpr
