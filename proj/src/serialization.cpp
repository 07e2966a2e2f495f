#include "statmon/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "statmon/errors.hpp"

namespace statmon {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("JSON field '") + key + "' has the wrong type");
  }
}

Json optional_number(const std::optional<double>& x) {
  return x ? Json(round12(*x)) : Json(nullptr);
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json state_to_json(const PureState& state) {
  Json amps = Json::array();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    amps.push_back({round12(state.amplitude(i).real()), round12(state.amplitude(i).imag())});
  }
  return Json{{"n", state.n()},
              {"ordering", state.n() == 3 ? "paper3" : "lex"},
              {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  require_supported(n);
  const std::string ordering_name = j.contains("ordering") ? field<std::string>(j, "ordering")
                                                          : (n == 3 ? "paper3" : "lex");
  OrderingKind kind;
  if (ordering_name == "paper3") {
    if (n != 3) throw ValidationError("ordering 'paper3' is only valid for n = 3");
    kind = OrderingKind::kPaper3;
  } else if (ordering_name == "lex") {
    kind = OrderingKind::kLexicographic;
  } else {
    throw ValidationError("unknown ordering '" + ordering_name + "'");
  }
  const BasisOrdering input(n, kind);
  const auto& canonical = BasisOrdering::canonical(n);

  const Json& amps = j.contains("amplitudes") ? j.at("amplitudes") : Json();
  if (!amps.is_array() || amps.size() != input.dimension()) {
    throw ValidationError("'amplitudes' must be an array of " + std::to_string(input.dimension()) + " entries");
  }
  Eigen::VectorXcd raw(static_cast<Eigen::Index>(input.dimension()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Json& a = amps[i];
    std::complex<double> value;
    if (a.is_number()) {
      value = a.get<double>();
    } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
      value = {a[0].get<double>(), a[1].get<double>()};
    } else {
      throw ValidationError("amplitude " + std::to_string(i) + " must be [re, im]");
    }
    raw(static_cast<Eigen::Index>(canonical.index_of(input.word_at(i)))) = value;
  }
  return PureState(n, std::move(raw));
}

Json v_to_json(const VVector& v) {
  Json pairs = Json::array();
  Json values = Json::array();
  for (std::size_t k = 0; k < v.pairs.size(); ++k) {
    pairs.push_back(v.pairs[k].str());
    values.push_back(round12(v.values(static_cast<Eigen::Index>(k))));
  }
  return Json{{"n", v.n}, {"pairs", std::move(pairs)}, {"v", std::move(values)}};
}

Json region_check_to_json(const RegionCheck& check) {
  return Json{{"v", {round12(check.v(0)), round12(check.v(1)), round12(check.v(2))}},
              {"theta_grid", check.theta_grid},
              {"theta_margin", round12(check.theta_margin)},
              {"sqrt_margin", round12(check.sqrt_margin)},
              {"inside", check.inside}};
}

Json audit_to_json(const AuditReport& report) {
  return Json{{"samples", report.samples},
              {"seed", report.seed},
              {"min_margin", round12(report.min_margin)},
              {"violations", report.violations},
              {"mixed_samples", report.mixed_samples}};
}

Json extremal_to_json(const ExtremalResult& result) {
  Json v = Json::array();
  for (Eigen::Index k = 0; k < result.v.values.size(); ++k) v.push_back(round12(result.v.values(k)));
  return Json{{"value", round12(result.value)},
              {"degeneracy", result.degeneracy},
              {"state", state_to_json(result.state)},
              {"v", std::move(v)}};
}

ScenarioGraph scenario_from_json(const Json& j) {
  ScenarioGraph graph;
  graph.n = field<int>(j, "n");
  if (j.contains("fixed")) {
    const Json& fixed = j.at("fixed");
    if (!fixed.is_object()) throw ValidationError("'fixed' must be an object of pair: +-1");
    for (const auto& [key, value] : fixed.items()) {
      if (!value.is_number_integer()) throw ValidationError("fixed value for " + key + " must be +1 or -1");
      const Pair pair = Pair::parse(key);
      if (graph.fixed.contains(pair)) throw ValidationError("pair " + pair.str() + " fixed twice");
      graph.fixed.emplace(pair, sign_from_int(value.get<int>()));
    }
  }
  if (j.contains("free")) {
    const Json& free = j.at("free");
    if (!free.is_array()) throw ValidationError("'free' must be an array of pairs");
    for (const Json& item : free) {
      if (!item.is_string()) throw ValidationError("free pairs must be strings such as \"AC\"");
      graph.free.push_back(Pair::parse(item.get<std::string>()));
    }
  }
  graph.validate();
  return graph;
}

Json scenario_to_json(const ScenarioGraph& graph) {
  Json fixed = Json::object();
  for (const auto& [pair, sign] : graph.fixed) fixed[pair.str()] = to_int(sign);
  Json free = Json::array();
  for (const auto& pair : graph.free) free.push_back(pair.str());
  return Json{{"n", graph.n}, {"fixed", std::move(fixed)}, {"free", std::move(free)}};
}

Json scenario_bound_to_json(const ScenarioGraph& graph, const ScenarioBound& bound) {
  Json v = nullptr;
  if (bound.attaining_v) {
    v = Json::object();
    for (std::size_t k = 0; k < bound.attaining_v->pairs.size(); ++k) {
      v[bound.attaining_v->pairs[k].str()] = round12(bound.attaining_v->values(static_cast<Eigen::Index>(k)));
    }
  }
  return Json{{"scenario", scenario_to_json(graph)},
              {"triangle_bound", optional_number(bound.triangle_bound)},
              {"spectral_bound", optional_number(bound.spectral_bound)},
              {"eigenvalue", round12(bound.eigenvalue)},
              {"degeneracy", bound.degeneracy},
              {"fixed_count", bound.fixed_count},
              {"free_count", bound.free_count},
              {"improvement", bound.improvement},
              {"feasible", bound.feasible},
              {"pattern_attained", bound.pattern_attained},
              {"attaining_v", std::move(v)},
              {"attaining_state", bound.attaining_state ? state_to_json(*bound.attaining_state) : Json(nullptr)}};
}

}  // namespace statmon
