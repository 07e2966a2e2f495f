#pragma once

// Scenario graphs on n boxes: some pairs fixed to perfect statistics
// (v = +-1), a set of free pairs sharing one value v = -x with 0 < x < 1.
// Bounds on x come from the tripartite relation on every 3-subset and from
// the largest eigenvalue of the scenario's signed exchange sum.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "statmon/extremal.hpp"
#include "statmon/group_core.hpp"
#include "statmon/observables.hpp"
#include "statmon/states.hpp"

namespace statmon {

struct ScenarioGraph {
  int n = 4;
  std::map<Pair, Sign> fixed;
  std::vector<Pair> free;

  // Disjoint fixed/free sets, no repeated free pair, labels below n.
  void validate() const;
};

struct TriangleBound {
  std::array<int, 3> boxes{};
  std::optional<double> x_max;  // absent when the triangle has no free edge
  bool feasible = true;         // some x in [0, 1] satisfies the relation
};

struct TriangleAnalysis {
  std::vector<TriangleBound> triangles;
  // Tightest x_max over all triangles; absent when no free edge exists.
  std::optional<double> x_max;
  bool feasible = true;
};

TriangleAnalysis triangle_bounds(const ScenarioGraph& graph);

struct ScenarioBound {
  std::optional<double> triangle_bound;  // x <= triangle_bound
  std::optional<double> spectral_bound;  // x <= spectral_bound
  double eigenvalue = 0.0;               // largest eigenvalue of the signed sum
  std::size_t degeneracy = 0;
  std::size_t fixed_count = 0;
  std::size_t free_count = 0;
  std::optional<PureState> attaining_state;
  std::optional<VVector> attaining_v;
  // attaining_v matches the scenario pattern (fixed values, free = -bound).
  bool pattern_attained = false;
  // spectral_bound < triangle_bound: tripartite relations are not enough.
  bool improvement = false;
  bool feasible = true;
};

// Objective with +s on a pair fixed to s and -1 on free pairs, so that its
// expectation on a pattern state is fixed_count + free_count * x.
Objective scenario_objective(const ScenarioGraph& graph);

// x <= (lambda_max - fixed_count) / free_count.  Throws UnsupportedError when
// there are no free edges.
ScenarioBound spectral_bound(const ScenarioGraph& graph);

// Both bounds; for graphs without free edges, checks feasibility of the
// fixed edges alone and reports an attaining state.
ScenarioBound scenario_report(const ScenarioGraph& graph);

}  // namespace statmon
