#include "statmon/npartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "statmon/errors.hpp"
#include "statmon/monogamy.hpp"

namespace statmon {

namespace {

constexpr double kFeasibilityTolerance = 1e-12;
// Margins of flat boundary stretches come out as a few ulp below zero.
constexpr double kBisectionTolerance = 1e-14;
constexpr int kSearchIterations = 200;

enum class EdgeKind { kFixed, kFree, kOpen };

struct Edge {
  EdgeKind kind = EdgeKind::kOpen;
  double value = 0.0;  // for kFixed
};

// argmax of a concave function on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < kSearchIterations && b - a > 1e-15; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    }
  }
  return 0.5 * (a + b);
}

// max over the open edges of the triangle margin, concave in (x, open values).
double best_margin(const std::array<Edge, 3>& edges, double x) {
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < 3; ++k) {
    if (edges[k].kind == EdgeKind::kOpen) open.push_back(k);
  }
  const auto margin_at = [&](double u0, double u1) {
    Eigen::Vector3d v;
    std::size_t next_open = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      switch (edges[k].kind) {
        case EdgeKind::kFixed: v(static_cast<Eigen::Index>(k)) = edges[k].value; break;
        case EdgeKind::kFree: v(static_cast<Eigen::Index>(k)) = -x; break;
        case EdgeKind::kOpen: v(static_cast<Eigen::Index>(k)) = next_open++ == 0 ? u0 : u1; break;
      }
    }
    return check_sqrt(v);
  };
  if (open.empty()) return margin_at(0.0, 0.0);
  if (open.size() == 1) {
    const auto f = [&](double u) { return margin_at(u, 0.0); };
    return f(golden_max(f, -1.0, 1.0));
  }
  const auto inner = [&](double u0) {
    const auto f = [&](double u1) { return margin_at(u0, u1); };
    return f(golden_max(f, -1.0, 1.0));
  };
  return inner(golden_max(inner, -1.0, 1.0));
}

Edge edge_of(const ScenarioGraph& graph, Pair pair) {
  if (const auto it = graph.fixed.find(pair); it != graph.fixed.end()) {
    return {EdgeKind::kFixed, to_double(it->second)};
  }
  if (std::find(graph.free.begin(), graph.free.end(), pair) != graph.free.end()) {
    return {EdgeKind::kFree, 0.0};
  }
  return {EdgeKind::kOpen, 0.0};
}

bool matches_pattern(const ScenarioGraph& graph, const VVector& v, double x) {
  for (const auto& [pair, sign] : graph.fixed) {
    if (std::abs(v.at(pair) - to_double(sign)) > kStateTolerance) return false;
  }
  for (const auto& pair : graph.free) {
    if (std::abs(v.at(pair) + x) > kStateTolerance) return false;
  }
  return true;
}

}  // namespace

void ScenarioGraph::validate() const {
  require_supported(n);
  for (const auto& [pair, sign] : fixed) {
    if (pair.y.index >= n) throw ValidationError("fixed pair " + pair.str() + " is not valid for n = " + std::to_string(n));
  }
  std::set<Pair> seen;
  for (const auto& pair : free) {
    if (pair.y.index >= n) throw ValidationError("free pair " + pair.str() + " is not valid for n = " + std::to_string(n));
    if (fixed.contains(pair)) throw ValidationError("pair " + pair.str() + " is both fixed and free");
    if (!seen.insert(pair).second) throw ValidationError("free pair " + pair.str() + " listed twice");
  }
}

TriangleAnalysis triangle_bounds(const ScenarioGraph& graph) {
  graph.validate();
  if (graph.n < 3) throw ValidationError("triangle bounds need at least three boxes");

  TriangleAnalysis out;
  for (int a = 0; a < graph.n; ++a) {
    for (int b = a + 1; b < graph.n; ++b) {
      for (int c = b + 1; c < graph.n; ++c) {
        // Tripartite order (AB, BC, AC) with A, B, C -> a, b, c.
        const std::array<Edge, 3> edges{edge_of(graph, Pair::of(a, b)), edge_of(graph, Pair::of(b, c)),
                                        edge_of(graph, Pair::of(a, c))};
        TriangleBound tri;
        tri.boxes = {a, b, c};
        const bool has_free = std::any_of(edges.begin(), edges.end(),
                                          [](const Edge& e) { return e.kind == EdgeKind::kFree; });
        if (!has_free) {
          tri.feasible = best_margin(edges, 0.0) >= -kFeasibilityTolerance;
        } else {
          const auto g = [&](double x) { return best_margin(edges, x); };
          const double peak = golden_max(g, 0.0, 1.0);
          if (g(peak) < -kFeasibilityTolerance) {
            tri.feasible = false;
          } else if (g(1.0) >= -kFeasibilityTolerance) {
            tri.x_max = 1.0;
          } else {
            double lo = peak;
            double hi = 1.0;
            for (int it = 0; it < kSearchIterations && hi - lo > 1e-15; ++it) {
              const double mid = 0.5 * (lo + hi);
              (g(mid) >= -kBisectionTolerance ? lo : hi) = mid;
            }
            tri.x_max = lo;
          }
        }
        out.feasible = out.feasible && tri.feasible;
        if (tri.x_max && (!out.x_max || *tri.x_max < *out.x_max)) out.x_max = tri.x_max;
        out.triangles.push_back(tri);
      }
    }
  }
  return out;
}

Objective scenario_objective(const ScenarioGraph& graph) {
  std::vector<std::pair<Pair, double>> terms;
  for (const auto& [pair, sign] : graph.fixed) terms.emplace_back(pair, to_double(sign));
  for (const auto& pair : graph.free) terms.emplace_back(pair, -1.0);
  return Objective::from_terms(graph.n, terms);
}

ScenarioBound spectral_bound(const ScenarioGraph& graph) {
  graph.validate();
  if (graph.free.empty()) throw UnsupportedError("scenario has no free edges, nothing to bound");

  const auto top = max_expectation(scenario_objective(graph));
  ScenarioBound out;
  out.fixed_count = graph.fixed.size();
  out.free_count = graph.free.size();
  out.eigenvalue = top.value;
  out.degeneracy = top.degeneracy;
  out.spectral_bound =
      (top.value - static_cast<double>(out.fixed_count)) / static_cast<double>(out.free_count);
  out.pattern_attained = matches_pattern(graph, top.v, *out.spectral_bound);
  out.attaining_v = top.v;
  out.attaining_state = top.state;
  out.feasible = *out.spectral_bound > 0.0;
  return out;
}

ScenarioBound scenario_report(const ScenarioGraph& graph) {
  graph.validate();
  if (graph.free.empty()) {
    ScenarioBound out;
    out.fixed_count = graph.fixed.size();
    if (graph.fixed.empty()) {
      out.feasible = true;
      return out;
    }
    std::vector<Constraint> constraints;
    for (const auto& [pair, sign] : graph.fixed) constraints.push_back({pair, sign});
    try {
      const auto best = constrained_extremal(constraints, scenario_objective(graph));
      out.eigenvalue = best.value;
      out.degeneracy = best.degeneracy;
      out.attaining_state = best.state;
      out.attaining_v = best.v;
      out.pattern_attained = matches_pattern(graph, best.v, 0.0);
      out.feasible = true;
    } catch (const InfeasibleError&) {
      out.feasible = false;
    }
    return out;
  }

  ScenarioBound out = spectral_bound(graph);
  if (graph.n >= 3) {
    const auto triangles = triangle_bounds(graph);
    out.triangle_bound = triangles.x_max;
    out.feasible = out.feasible && triangles.feasible;
  }
  out.improvement = out.triangle_bound && *out.spectral_bound < *out.triangle_bound - kStateTolerance;
  return out;
}

}  // namespace statmon
