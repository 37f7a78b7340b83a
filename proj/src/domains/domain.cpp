#include "bpr/domains/domain.hpp"

#include <bit>

#include "bpr/domains/golf.hpp"
#include "bpr/domains/surveillance.hpp"
#include "bpr/domains/telephone.hpp"
#include "bpr/errors.hpp"

namespace bpr {

std::string Domain::type_name(int type_index) const {
  return "type" + std::to_string(type_index);
}

std::string Domain::policy_name(int policy_index) const {
  return "policy" + std::to_string(policy_index);
}

std::uint64_t Domain::task_key(const Task& task) const {
  if (task.index >= 0) return static_cast<std::uint64_t>(task.index);
  return std::bit_cast<std::uint64_t>(task.param);
}

std::unique_ptr<Domain> make_domain(const std::string& name, const DomainOptions& opts) {
  if (name == "golf") return std::make_unique<GolfDomain>();
  if (name == "telephone") return std::make_unique<TelephoneDomain>(opts.telephone_signal);
  if (name == "surveillance")
    return std::make_unique<SurveillanceDomain>(opts.surveillance_map_seed);
  throw ConfigError("unknown domain: " + name);
}

}  // namespace bpr
