#pragma once

// JSON schemas for states, region checks, audits, extremal results and
// scenarios.  Numbers are written with 12 significant digits.

#include <string>

#include "json.hpp"

#include "statmon/extremal.hpp"
#include "statmon/monogamy.hpp"
#include "statmon/npartite.hpp"
#include "statmon/observables.hpp"
#include "statmon/states.hpp"

namespace statmon {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so the shortest round-trip form printed
// by the JSON writer has at most 12 digits.
double round12(double x);

// {"n": int, "ordering": "paper3"|"lex", "amplitudes": [[re, im], ...]}.
// Writes "paper3" for n = 3 and "lex" otherwise; reads either for n = 3.
Json state_to_json(const PureState& state);
PureState state_from_json(const Json& j);

Json v_to_json(const VVector& v);
Json region_check_to_json(const RegionCheck& check);
// {"samples", "seed", "min_margin", "violations"} plus "mixed_samples".
Json audit_to_json(const AuditReport& report);
// {"value", "degeneracy", "state", "v"}.
Json extremal_to_json(const ExtremalResult& result);

// {"n": 4, "fixed": {"AB": 1, ...}, "free": ["AC", ...]}.
ScenarioGraph scenario_from_json(const Json& j);
Json scenario_to_json(const ScenarioGraph& graph);
Json scenario_bound_to_json(const ScenarioGraph& graph, const ScenarioBound& bound);

}  // namespace statmon
