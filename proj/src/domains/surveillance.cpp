#include "bpr/domains/surveillance.hpp"

#include <algorithm>
#include <cstdlib>

#include "bpr/errors.hpp"

namespace bpr {

SurveillanceMap generate_surveillance_map(std::uint64_t seed) {
  SurveillanceMap map;
  const GridCell hills[4] = {{6, 6}, {6, 19}, {19, 6}, {19, 19}};
  SplitRng rng = derive_stream(seed, {stream::kMap});
  const bool fixed_radius = std::getenv("BPR_MAP_FIXED_RADIUS") != nullptr;
  for (const GridCell& hill : hills) {
    map.locations.push_back(hill);
    map.is_hilltop.push_back(true);
    const int radius = fixed_radius ? 3 + rng.uniform_int(3) : 0;
    std::vector<GridCell> band;
    for (int x = 0; x < map.grid; ++x) {
      for (int y = 0; y < map.grid; ++y) {
        const int d = chebyshev({x, y}, hill);
        if (fixed_radius ? d == radius : (d >= 3 && d <= 5)) band.push_back({x, y});
      }
    }
    // Deterministic draw of 16 ring cells per hill.
    for (int k = 0; k < 16; ++k) {
      const int pick = rng.uniform_int(static_cast<int>(band.size()));
      map.locations.push_back(band[static_cast<std::size_t>(pick)]);
      map.is_hilltop.push_back(false);
      band.erase(band.begin() + pick);
    }
  }
  return map;
}

SurveillanceDomain::SurveillanceDomain(std::uint64_t map_seed)
    : map_(generate_surveillance_map(map_seed)) {}

SignalSpaceInfo SurveillanceDomain::signal_space() const {
  SignalSpaceInfo s;
  s.kind = SignalKind::kScalarReal;
  return s;
}

Task SurveillanceDomain::sample_task(SplitRng& rng) const {
  return {rng.uniform_int(num_types()), 0.0};
}

EpisodeOutcome SurveillanceDomain::run_episode(const Task& task, int policy_index,
                                               SplitRng& rng) const {
  if (task.index < 0 || task.index >= num_types())
    throw DomainFailure("surveillance: poacher location out of range");
  if (policy_index < 0 || policy_index >= num_policies())
    throw DomainFailure("surveillance: survey location out of range");
  const GridCell poacher = map_.locations[static_cast<std::size_t>(task.index)];
  const GridCell survey = map_.locations[static_cast<std::size_t>(policy_index)];
  const int d = chebyshev(survey, poacher);
  const double psi = rng.normal(kNoiseMean, kNoiseSd);
  double r = psi;
  if (map_.is_hilltop[static_cast<std::size_t>(policy_index)]) {
    if (d <= 15) r = 200.0 - 30.0 * d + psi;
  } else if (d <= 3) {
    r = 200.0 - 20.0 * d + psi;
  }
  return {ScalarReal{r}, r};
}

std::string SurveillanceDomain::type_name(int type_index) const {
  const GridCell c = map_.locations[static_cast<std::size_t>(type_index)];
  return "poacher(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::string SurveillanceDomain::policy_name(int policy_index) const {
  const GridCell c = map_.locations[static_cast<std::size_t>(policy_index)];
  const bool hill = map_.is_hilltop[static_cast<std::size_t>(policy_index)];
  return std::string(hill ? "hill(" : "survey(") + std::to_string(c.x) + "," +
         std::to_string(c.y) + ")";
}

}  // namespace bpr
