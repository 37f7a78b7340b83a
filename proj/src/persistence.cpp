#include <fstream>
#include <nlohmann/json.hpp>

#include "bpr/errors.hpp"
#include "bpr/knowledge_base.hpp"

namespace bpr {
namespace {

using nlohmann::json;

json to_json(const Gaussian& g) {
  return {{"family", "gaussian"}, {"mean", g.mean()}, {"sd", g.sd()}};
}

json to_json(const Categorical& c) {
  return {{"family", "categorical"},
          {"alpha", c.alpha()},
          {"counts", c.counts()}};
}

json to_json(const DiscreteValues& d) {
  return {{"family", "discrete_values"},
          {"alpha", d.alpha()},
          {"values", d.values()},
          {"counts", d.counts()}};
}

json to_json(const MarkovTraceModel& m) {
  json conds = json::array();
  for (const auto& c : m.conditionals()) {
    conds.push_back({{"s", c.state},
                     {"a", c.action},
                     {"targets", c.targets},
                     {"counts", c.counts}});
  }
  json classes = json::array();
  for (const auto& cl : m.observed_classes()) {
    json flat = json::array();
    if (const auto* t = std::get_if<TransitionTrace>(&cl.trace)) {
      for (const auto& st : t->steps) {
        flat.push_back(st.state);
        flat.push_back(st.action);
        flat.push_back(st.next_state);
      }
    } else {
      const auto& rt = std::get<RewardTrace>(cl.trace);
      for (const auto& st : rt.steps) {
        flat.push_back(st.state);
        flat.push_back(st.action);
        flat.push_back(st.reward);
      }
    }
    classes.push_back({{"n", cl.count}, {"trace", flat}});
  }
  return {{"family", m.target() == MarkovTraceModel::Target::kNextState ? "trace_sas"
                                                                        : "trace_sar"},
          {"states", m.num_states()},
          {"actions", m.num_actions()},
          {"alpha", m.alpha()},
          {"reward_values", m.reward_values()},
          {"cond", conds},
          {"classes", classes}};
}

json to_json(const PerfModel& m) {
  return std::visit([](const auto& d) { return to_json(d); }, m);
}

json to_json(const ObsModel& m) {
  if (std::holds_alternative<SameAsPerf>(m)) return {{"family", "same_as_perf"}};
  return std::visit(
      [](const auto& d) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, SameAsPerf>)
          return {{"family", "same_as_perf"}};
        else
          return to_json(d);
      },
      m);
}

Gaussian gaussian_from(const json& j) {
  return Gaussian(j.at("mean").get<double>(), j.at("sd").get<double>());
}

Categorical categorical_from(const json& j) {
  return Categorical(j.at("counts").get<std::vector<std::int64_t>>(),
                     j.at("alpha").get<double>());
}

DiscreteValues discrete_from(const json& j) {
  DiscreteValues d(j.at("values").get<std::vector<double>>(), j.at("alpha").get<double>());
  auto counts = j.at("counts").get<std::vector<std::int64_t>>();
  std::vector<double> samples;  // rebuild via fit to keep a single code path
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::int64_t k = 0; k < counts[i]; ++k) samples.push_back(d.values()[i]);
  return DiscreteValues::fit(d.values(), d.alpha(), samples);
}

MarkovTraceModel trace_from(const json& j) {
  const bool sas = j.at("family").get<std::string>() == "trace_sas";
  MarkovTraceModel m(sas ? MarkovTraceModel::Target::kNextState
                         : MarkovTraceModel::Target::kReward,
                     j.at("states").get<int>(), j.at("actions").get<int>(),
                     j.at("reward_values").get<std::vector<double>>(),
                     j.at("alpha").get<double>());
  std::vector<MarkovTraceModel::Conditional> conds;
  for (const auto& cj : j.at("cond")) {
    MarkovTraceModel::Conditional c;
    c.state = cj.at("s").get<int>();
    c.action = cj.at("a").get<int>();
    c.targets = cj.at("targets").get<std::vector<int>>();
    c.counts = cj.at("counts").get<std::vector<std::int64_t>>();
    for (auto v : c.counts) c.total += v;
    conds.push_back(std::move(c));
  }
  m.set_conditionals(std::move(conds));
  std::vector<MarkovTraceModel::TraceClass> classes;
  for (const auto& cj : j.at("classes")) {
    MarkovTraceModel::TraceClass cl;
    cl.count = cj.at("n").get<std::int64_t>();
    const auto& flat = cj.at("trace");
    if (sas) {
      TransitionTrace t;
      for (std::size_t i = 0; i + 2 < flat.size(); i += 3)
        t.steps.push_back({flat[i].get<int>(), flat[i + 1].get<int>(), flat[i + 2].get<int>()});
      cl.trace = t;
    } else {
      RewardTrace t;
      for (std::size_t i = 0; i + 2 < flat.size(); i += 3)
        t.steps.push_back(
            {flat[i].get<int>(), flat[i + 1].get<int>(), flat[i + 2].get<double>()});
      cl.trace = t;
    }
    classes.push_back(std::move(cl));
  }
  m.set_classes(std::move(classes));
  return m;
}

PerfModel perf_from(const json& j) {
  const auto family = j.at("family").get<std::string>();
  if (family == "gaussian") return gaussian_from(j);
  if (family == "discrete_values") return discrete_from(j);
  throw SchemaVersionMismatch("unknown performance model family: " + family);
}

ObsModel obs_from(const json& j) {
  const auto family = j.at("family").get<std::string>();
  if (family == "gaussian") return gaussian_from(j);
  if (family == "categorical") return categorical_from(j);
  if (family == "discrete_values") return discrete_from(j);
  if (family == "trace_sas" || family == "trace_sar") return trace_from(j);
  if (family == "same_as_perf") return SameAsPerf{};
  throw SchemaVersionMismatch("unknown observation model family: " + family);
}

json space_to_json(const SignalSpaceInfo& s) {
  return {{"kind", signal_kind_name(s.kind)},
          {"category_bins", s.category_bins},
          {"return_values", s.return_values},
          {"num_states", s.num_states},
          {"num_actions", s.num_actions},
          {"reward_values", s.reward_values}};
}

SignalSpaceInfo space_from_json(const json& j) {
  SignalSpaceInfo s;
  s.kind = parse_signal_kind(j.at("kind").get<std::string>());
  s.category_bins = j.at("category_bins").get<int>();
  s.return_values = j.at("return_values").get<std::vector<double>>();
  s.num_states = j.at("num_states").get<int>();
  s.num_actions = j.at("num_actions").get<int>();
  s.reward_values = j.at("reward_values").get<std::vector<double>>();
  return s;
}

json kb_to_json(const KnowledgeBase& kb) {
  json types = json::array();
  for (const auto& t : kb.types())
    types.push_back({{"name", t.name}, {"domain_index", t.domain_index}});
  json policies = json::array();
  for (const auto& p : kb.policies())
    policies.push_back({{"name", p.name}, {"domain_index", p.domain_index}});
  std::vector<double> prior(kb.prior().weights.data(),
                            kb.prior().weights.data() + kb.prior().weights.size());
  json models = json::array();
  for (int i = 0; i < kb.num_types(); ++i) {
    json row = json::array();
    for (int j = 0; j < kb.num_policies(); ++j)
      row.push_back({{"perf", to_json(kb.perf(i, j))}, {"obs", to_json(kb.obs(i, j))}});
    models.push_back(std::move(row));
  }
  return {{"schema_version", kKbSchemaVersion},
          {"signal_kind", signal_kind_name(kb.signal_space().kind)},
          {"signal_space", space_to_json(kb.signal_space())},
          {"types", types},
          {"policies", policies},
          {"prior", prior},
          {"models", models}};
}

}  // namespace

void save_kb(const KnowledgeBase& kb, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kb_to_json(kb).dump(1) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaVersionMismatch(std::string("not a knowledge-base file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") ||
      j.at("schema_version").get<std::string>() != kKbSchemaVersion)
    throw SchemaVersionMismatch("unsupported knowledge-base schema");
  try {
    std::vector<TypeInfo> types;
    for (const auto& tj : j.at("types"))
      types.push_back({tj.at("name").get<std::string>(), tj.at("domain_index").get<int>()});
    std::vector<PolicyInfo> policies;
    for (const auto& pj : j.at("policies"))
      policies.push_back({pj.at("name").get<std::string>(), pj.at("domain_index").get<int>()});
    auto prior_vec = j.at("prior").get<std::vector<double>>();
    Belief prior;
    prior.weights = Eigen::Map<Eigen::VectorXd>(prior_vec.data(),
                                                static_cast<long>(prior_vec.size()));
    std::vector<std::vector<PerfModel>> perf;
    std::vector<std::vector<ObsModel>> obs;
    for (const auto& row : j.at("models")) {
      std::vector<PerfModel> prow;
      std::vector<ObsModel> orow;
      for (const auto& cell : row) {
        prow.push_back(perf_from(cell.at("perf")));
        orow.push_back(obs_from(cell.at("obs")));
      }
      perf.push_back(std::move(prow));
      obs.push_back(std::move(orow));
    }
    return KnowledgeBase(std::move(types), std::move(policies), std::move(perf),
                         std::move(obs), std::move(prior),
                         space_from_json(j.at("signal_space")));
  } catch (const json::exception& e) {
    throw SchemaVersionMismatch(std::string("malformed knowledge-base file: ") + e.what());
  }
}

StorageSizes storage_size(const KnowledgeBase& kb) {
  StorageSizes sizes;
  for (int i = 0; i < kb.num_types(); ++i) {
    for (int j = 0; j < kb.num_policies(); ++j) {
      const json pj = to_json(kb.perf(i, j));
      const std::size_t pbytes = pj.dump().size();
      sizes.by_family["perf:" + pj.at("family").get<std::string>()] += pbytes;
      sizes.perf_bytes += pbytes;
      std::size_t obytes;
      std::string ofam;
      if (std::holds_alternative<SameAsPerf>(kb.obs(i, j))) {
        // Alias: the observation model's cost is the shared model itself.
        obytes = pbytes;
        ofam = pj.at("family").get<std::string>();
      } else {
        const json oj = to_json(kb.obs(i, j));
        obytes = oj.dump().size();
        ofam = oj.at("family").get<std::string>();
      }
      sizes.by_family["obs:" + ofam] += obytes;
      sizes.obs_bytes += obytes;
    }
  }
  sizes.total_bytes = kb_to_json(kb).dump().size();
  return sizes;
}

}  // namespace bpr
