#include "bpr/signal.hpp"

#include <sstream>

#include "bpr/errors.hpp"

namespace bpr {

SignalKind kind_of(const Signal& s) {
  switch (s.index()) {
    case 0: return SignalKind::kTransitionTrace;
    case 1: return SignalKind::kRewardTrace;
    case 2: return SignalKind::kEpisodicReturn;
    case 3: return SignalKind::kScalarReal;
    default: return SignalKind::kCategoryBin;
  }
}

std::string signal_kind_name(SignalKind k) {
  switch (k) {
    case SignalKind::kTransitionTrace: return "sas";
    case SignalKind::kRewardTrace: return "sar";
    case SignalKind::kEpisodicReturn: return "u";
    case SignalKind::kScalarReal: return "scalar";
    case SignalKind::kCategoryBin: return "category";
  }
  return "?";
}

SignalKind parse_signal_kind(const std::string& name) {
  if (name == "sas") return SignalKind::kTransitionTrace;
  if (name == "sar") return SignalKind::kRewardTrace;
  if (name == "u") return SignalKind::kEpisodicReturn;
  if (name == "scalar") return SignalKind::kScalarReal;
  if (name == "category") return SignalKind::kCategoryBin;
  throw ConfigError("unknown signal kind: " + name);
}

std::string summarize(const Signal& s) {
  std::ostringstream os;
  if (const auto* t = std::get_if<TransitionTrace>(&s)) {
    os << "sas[" << t->steps.size() << "]";
    for (const auto& st : t->steps) os << ":" << st.next_state;
  } else if (const auto* r = std::get_if<RewardTrace>(&s)) {
    os << "sar[" << r->steps.size() << "]";
    for (const auto& st : r->steps) os << ":" << st.reward;
  } else if (const auto* u = std::get_if<EpisodicReturn>(&s)) {
    os << "u:" << u->value;
  } else if (const auto* x = std::get_if<ScalarReal>(&s)) {
    os << "r:" << x->value;
  } else {
    os << "bin:" << std::get<CategoryBin>(s).bin;
  }
  return os.str();
}

}  // namespace bpr
