#pragma once

// Extremal values of linear objectives sum_XY c_XY <Pi_XY> over states,
// optionally restricted to perfect-statistics eigenspaces.

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "statmon/group_core.hpp"
#include "statmon/observables.hpp"
#include "statmon/states.hpp"

namespace statmon {

// Dense eigen-solves scale as (n!)^3; n = 5 is 120 x 120.
inline constexpr int kMaxDenseBoxes = 5;
// Eigenvalue of the restricted constraint projector counted as 1.
inline constexpr double kRankTolerance = 1e-10;

struct Objective {
  int n = 3;
  Eigen::VectorXd weights;  // canonical_pairs(n) order

  static Objective from_terms(int n, std::span<const std::pair<Pair, double>> terms);
  // "AB:1,BC:-1"; pairs not mentioned get weight 0.
  static Objective parse(int n, std::string_view text);
  // Throws ValidationError or CapacityError.
  void validate() const;
};

// v_pair = +1 or -1; only perfect statistics are eigenspace conditions.
struct Constraint {
  Pair pair;
  Sign value = Sign::kPlus;

  // "AB=1" or "AB=-1".
  static Constraint parse(std::string_view text);
};

// Comma-separated Constraint::parse.
std::vector<Constraint> parse_constraints(std::string_view text);

struct ExtremalResult {
  double value = 0.0;
  std::size_t degeneracy = 0;  // multiplicity of the top eigenvalue
  PureState state;
  VVector v;
};

// Orthonormal basis of the joint eigenspace of every constrained Pi.
struct JointEigenspace {
  int n = 0;
  Eigen::MatrixXd basis;  // d x rank

  std::size_t rank() const { return static_cast<std::size_t>(basis.cols()); }
  Eigen::MatrixXd projector() const { return basis * basis.transpose(); }
};

// Throws InfeasibleError if the intersection is empty.
JointEigenspace joint_eigenspace(int n, std::span<const Constraint> constraints);

// Largest eigenvalue of sum c_XY Pi_XY and its (first) eigenvector.
ExtremalResult max_expectation(const Objective& objective);

// Largest eigenvalue of the objective restricted to the joint eigenspace of
// the constraints.  The returned state meets every constraint within 1e-9.
ExtremalResult constrained_extremal(std::span<const Constraint> constraints,
                                    const Objective& objective);

struct RayExtreme {
  Eigen::Vector3d direction;
  double scale = 0.0;     // scale * direction lies on the boundary
  Eigen::Vector3d point;  // scale * direction
  PureState state;        // attains `point`
  double state_error = 0.0;  // max |v(state) - point|
  // Set when the direction is parallel to (1, 1, -1): error of the
  // catalog state nontransitive_3_5 against `point`.
  std::optional<double> catalog_error;
};

// Farthest boundary point along `direction` (tripartite).  Throws
// DegenerateInputError for the zero vector.
RayExtreme symmetric_ray_extreme(const Eigen::Vector3d& direction);

}  // namespace statmon
