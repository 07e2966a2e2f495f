#pragma once

// The tripartite monogamy region: membership tests, boundary states,
// the surface mesh and Monte Carlo soundness audits.
//
// The region is the double cone |w1.v| + sqrt((w2.v)^2 + (w3.v)^2) <= 1 with
// apexes at +-(1, 1, 1).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "statmon/states.hpp"

namespace statmon {

inline constexpr int kDefaultThetaGrid = 720;
inline constexpr double kMembershipTolerance = 1e-9;

// Throws ValidationError unless every entry is finite and in [-1, 1]
// (up to kStateTolerance).
void require_v_range(const Eigen::Vector3d& v);

// Left-hand side of the theta-family relation; the relation holds when it
// is <= 3:
//   |v_AB + v_BC + v_AC|
//     + |(2 v_AB - v_BC - v_AC) cos(theta) + sqrt(3) (v_BC - v_AC) sin(theta)|
double check_theta(const Eigen::Vector3d& v, double theta);

// 1 - (|w1.v| + sqrt((w2.v)^2 + (w3.v)^2)).  Non-negative iff inside.
double check_sqrt(const Eigen::Vector3d& v);

// Largest amount by which a theta_grid-point grid can underestimate
// max_theta (lhs / 3).
double theta_grid_error_bound(const Eigen::Vector3d& v, int theta_grid);

struct RegionCheck {
  Eigen::Vector3d v;
  int theta_grid = kDefaultThetaGrid;
  double theta_margin = 0.0;  // min over the grid of 3 - check_theta
  double sqrt_margin = 0.0;
  bool inside = false;        // sqrt_margin >= -kMembershipTolerance
};

RegionCheck region_check(const Eigen::Vector3d& v, int theta_grid = kDefaultThetaGrid);

// cos(phi) |s1> + sin(phi) |Psi_theta^{s2}>, where |Psi_theta^{s2}> is the
// first column of the deterministic eigensolver output inside the s2
// eigenspace of W_theta.
PureState boundary_state(const ChiParameters& params);

struct SurfacePoint {
  ChiParameters params;
  PureState state;
  Eigen::Vector3d v;
  bool landmark = false;
};

// Builds the boundary state and checks |<W1>| + |<W_theta>| = 1 and
// sqrt_margin = 0 (both within 1e-9); InternalError otherwise.
SurfacePoint surface_state(double theta, double phi, Sign s1, Sign s2);
SurfacePoint surface_state(const ChiParameters& params);

// Inverse of the surface parametrization for a point on the boundary:
// theta in [0, pi), phi in [0, pi / 2].
ChiParameters surface_parameters(const Eigen::Vector3d& v);

struct SurfaceMesh {
  std::vector<SurfacePoint> points;
  std::size_t grid_points = 0;
  std::size_t landmark_points = 0;
  // Points whose v coincides (within 1e-9) with an earlier point.
  std::size_t duplicates = 0;
};

// Grid theta_k = pi k / theta_steps (k < theta_steps), phi_j = (pi / 2) j /
// (phi_steps - 1), over all four sign combinations.  With `landmarks`, the
// boundary states of the catalog extremal points +-(1, -1/2, -1/2) and
// +-(3/5, 3/5, -3/5) are appended after the grid rows.
SurfaceMesh surface_mesh(int theta_steps, int phi_steps, bool landmarks = true);

// Header v_AB,v_BC,v_AC,theta,phi,s1,s2.
void write_mesh_csv(const SurfaceMesh& mesh, std::ostream& out);

// Rotation of v by `angle` about the w1 axis (1, 1, 1) / sqrt(3).
Eigen::Vector3d rotate_about_w1(const Eigen::Vector3d& v, double angle);

struct AuditOptions {
  std::size_t pure_samples = 0;
  std::size_t mixed_samples = 0;  // random two-component mixtures
  std::uint64_t seed = 0;
};

struct AuditReport {
  std::size_t samples = 0;
  std::size_t mixed_samples = 0;
  std::uint64_t seed = 0;
  double min_margin = 0.0;
  std::size_t violations = 0;  // sqrt_margin < -kMembershipTolerance
  Eigen::Vector3d worst_v = Eigen::Vector3d::Zero();
};

// Results do not depend on the thread count: samples are drawn in fixed-size
// blocks, each with its own generator seeded from (seed, stream, block).
AuditReport region_audit(const AuditOptions& options);

}  // namespace statmon
