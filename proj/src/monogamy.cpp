#include "statmon/monogamy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include "statmon/errors.hpp"
#include "statmon/observables.hpp"
#include "statmon/parallel.hpp"
#include "statmon/spectrum.hpp"

namespace statmon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kAuditBlock = 4096;

struct ThetaEigenvectors {
  Eigen::VectorXd plus;
  Eigen::VectorXd minus;
};

// First +1 and first -1 eigenvectors of W_theta.
ThetaEigenvectors theta_eigenvectors(double theta) {
  const auto spectrum = symmetric_spectrum(w_theta(theta));
  ThetaEigenvectors out;
  for (const auto& cluster : spectrum.clusters()) {
    const auto column = spectrum.eigenvectors.col(static_cast<Eigen::Index>(cluster.first));
    if (std::abs(cluster.value - 1.0) <= kStateTolerance && out.plus.size() == 0) out.plus = column;
    if (std::abs(cluster.value + 1.0) <= kStateTolerance && out.minus.size() == 0) out.minus = column;
  }
  if (out.plus.size() == 0 || out.minus.size() == 0) {
    throw InternalError("W_theta has no +-1 eigenvector at theta = " + std::to_string(theta));
  }
  return out;
}

void require_chi_range(const ChiParameters& p) {
  if (!std::isfinite(p.theta) || p.theta < 0.0 || p.theta >= 2.0 * kPi) {
    throw ValidationError("theta must lie in [0, 2 pi), got " + std::to_string(p.theta));
  }
  if (!std::isfinite(p.phi) || p.phi < 0.0 || p.phi > kPi / 2.0) {
    throw ValidationError("phi must lie in [0, pi / 2], got " + std::to_string(p.phi));
  }
}

PureState assemble_chi(const ChiParameters& p, const ThetaEigenvectors& eig) {
  const Eigen::VectorXcd base =
      named_state(p.symmetry == Sign::kPlus ? NamedKind::kSymPlus : NamedKind::kAntisymMinus)
          .amplitudes();
  const Eigen::VectorXd& psi = p.branch == Sign::kPlus ? eig.plus : eig.minus;
  const Eigen::VectorXcd chi = std::cos(p.phi) * base + std::sin(p.phi) * psi.cast<std::complex<double>>();
  return normalize(3, chi);
}

SurfacePoint finish_surface_point(const ChiParameters& p, PureState state) {
  const Eigen::Vector3d v = v_vector(state).triple();
  const auto& frame = w_frame();
  const double w1 = expectation(state, frame.W1);
  const double wt = expectation(state, w_theta(p.theta));
  if (std::abs(std::abs(w1) + std::abs(wt) - 1.0) > kStateTolerance ||
      std::abs(check_sqrt(v)) > kStateTolerance) {
    throw InternalError("boundary state is not on the region surface");
  }
  return {p, std::move(state), v, false};
}

std::array<long long, 3> bucket_of(const Eigen::Vector3d& v) {
  constexpr double kBucket = 1e-8;
  return {std::llround(v(0) / kBucket), std::llround(v(1) / kBucket), std::llround(v(2) / kBucket)};
}

std::size_t count_duplicates(const std::vector<SurfacePoint>& points) {
  std::map<std::array<long long, 3>, std::vector<std::size_t>> buckets;
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto key = bucket_of(points[i].v);
    bool found = false;
    for (long long dx = -1; dx <= 1 && !found; ++dx) {
      for (long long dy = -1; dy <= 1 && !found; ++dy) {
        for (long long dz = -1; dz <= 1 && !found; ++dz) {
          const auto it = buckets.find({key[0] + dx, key[1] + dy, key[2] + dz});
          if (it == buckets.end()) continue;
          for (std::size_t j : it->second) {
            if ((points[j].v - points[i].v).cwiseAbs().maxCoeff() <= kStateTolerance) {
              found = true;
              break;
            }
          }
        }
      }
    }
    if (found) ++duplicates;
    buckets[key].push_back(i);
  }
  return duplicates;
}

std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct BlockResult {
  double min_margin = std::numeric_limits<double>::infinity();
  Eigen::Vector3d worst_v = Eigen::Vector3d::Zero();
  std::size_t violations = 0;
};

void record(BlockResult& r, const Eigen::Vector3d& v) {
  const double margin = check_sqrt(v);
  if (margin < -kMembershipTolerance) ++r.violations;
  if (margin < r.min_margin) {
    r.min_margin = margin;
    r.worst_v = v;
  }
}

std::mt19937_64 block_rng(std::uint64_t seed, std::uint32_t stream, std::size_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                    static_cast<std::uint32_t>(block)};
  return std::mt19937_64(seq);
}

}  // namespace

void require_v_range(const Eigen::Vector3d& v) {
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (!std::isfinite(v(i)) || std::abs(v(i)) > 1.0 + kStateTolerance) {
      throw ValidationError("v entries must lie in [-1, 1], got " + std::to_string(v(i)));
    }
  }
}

double check_theta(const Eigen::Vector3d& v, double theta) {
  require_v_range(v);
  const double total = v(0) + v(1) + v(2);
  const double planar = (2.0 * v(0) - v(1) - v(2)) * std::cos(theta) +
                        std::sqrt(3.0) * (v(1) - v(2)) * std::sin(theta);
  return std::abs(total) + std::abs(planar);
}

double check_sqrt(const Eigen::Vector3d& v) {
  require_v_range(v);
  const auto& f = w_frame();
  return 1.0 - (std::abs(f.w1.dot(v)) + std::hypot(f.w2.dot(v), f.w3.dot(v)));
}

double theta_grid_error_bound(const Eigen::Vector3d& v, int theta_grid) {
  if (theta_grid < 1) throw ValidationError("theta grid needs at least one point");
  const auto& f = w_frame();
  const double radial = std::hypot(f.w2.dot(v), f.w3.dot(v));
  const double half_step = kPi / static_cast<double>(theta_grid);
  return radial * (1.0 - std::cos(half_step));
}

RegionCheck region_check(const Eigen::Vector3d& v, int theta_grid) {
  if (theta_grid < 1) throw ValidationError("theta grid needs at least one point");
  RegionCheck out;
  out.v = v;
  out.theta_grid = theta_grid;
  out.sqrt_margin = check_sqrt(v);
  double worst = 0.0;
  for (int k = 0; k < theta_grid; ++k) {
    worst = std::max(worst, check_theta(v, 2.0 * kPi * k / theta_grid));
  }
  out.theta_margin = 3.0 - worst;
  out.inside = out.sqrt_margin >= -kMembershipTolerance;
  return out;
}

PureState boundary_state(const ChiParameters& params) {
  require_chi_range(params);
  return assemble_chi(params, theta_eigenvectors(params.theta));
}

SurfacePoint surface_state(const ChiParameters& params) {
  return finish_surface_point(params, boundary_state(params));
}

SurfacePoint surface_state(double theta, double phi, Sign s1, Sign s2) {
  return surface_state(ChiParameters{theta, phi, s1, s2});
}

ChiParameters surface_parameters(const Eigen::Vector3d& v) {
  if (std::abs(check_sqrt(v)) > kStateTolerance) {
    throw ValidationError("point is not on the region boundary");
  }
  const auto& f = w_frame();
  const double height = f.w1.dot(v);
  const double a = f.w2.dot(v);
  const double b = f.w3.dot(v);

  ChiParameters p;
  p.symmetry = height >= 0.0 ? Sign::kPlus : Sign::kMinus;
  p.phi = std::acos(std::sqrt(std::clamp(std::abs(height), 0.0, 1.0)));
  if (std::hypot(a, b) <= kAlgebraTolerance) {
    p.theta = 0.0;
    p.branch = Sign::kPlus;
    return p;
  }
  const double angle = std::atan2(b, a);  // (-pi, pi]
  if (angle >= 0.0 && angle < kPi) {
    p.theta = angle;
    p.branch = Sign::kPlus;
  } else {
    p.theta = angle < 0.0 ? angle + kPi : angle - kPi;
    p.branch = Sign::kMinus;
  }
  return p;
}

SurfaceMesh surface_mesh(int theta_steps, int phi_steps, bool landmarks) {
  if (theta_steps < 2 || phi_steps < 2) throw ValidationError("mesh needs at least 2 steps per axis");

  const auto rows = static_cast<std::size_t>(theta_steps);
  std::vector<std::vector<SurfacePoint>> by_row(rows);
  parallel_for(rows, [&](std::size_t k) {
    const double theta = kPi * static_cast<double>(k) / theta_steps;
    const auto eig = theta_eigenvectors(theta);
    auto& row = by_row[k];
    row.reserve(4 * static_cast<std::size_t>(phi_steps));
    for (int j = 0; j < phi_steps; ++j) {
      const double phi = (kPi / 2.0) * j / (phi_steps - 1);
      for (Sign s1 : {Sign::kPlus, Sign::kMinus}) {
        for (Sign s2 : {Sign::kPlus, Sign::kMinus}) {
          const ChiParameters p{theta, phi, s1, s2};
          row.push_back(finish_surface_point(p, assemble_chi(p, eig)));
        }
      }
    }
  });

  SurfaceMesh mesh;
  for (auto& row : by_row) {
    for (auto& point : row) mesh.points.push_back(std::move(point));
  }
  mesh.grid_points = mesh.points.size();

  if (landmarks) {
    const Eigen::Vector3d eq5 = v_vector(named_state(NamedKind::kEq5)).triple();
    const Eigen::Vector3d ray = v_vector(named_state(NamedKind::kNontransitive35)).triple();
    for (const Eigen::Vector3d& target : {eq5, Eigen::Vector3d(-eq5), ray, Eigen::Vector3d(-ray)}) {
      auto point = surface_state(surface_parameters(target));
      point.landmark = true;
      mesh.points.push_back(std::move(point));
    }
    mesh.landmark_points = mesh.points.size() - mesh.grid_points;
  }
  mesh.duplicates = count_duplicates(mesh.points);
  return mesh;
}

void write_mesh_csv(const SurfaceMesh& mesh, std::ostream& out) {
  out << "v_AB,v_BC,v_AC,theta,phi,s1,s2\n";
  for (const auto& p : mesh.points) {
    out << fmt12(p.v(0)) << ',' << fmt12(p.v(1)) << ',' << fmt12(p.v(2)) << ','
        << fmt12(p.params.theta) << ',' << fmt12(p.params.phi) << ',' << to_int(p.params.symmetry)
        << ',' << to_int(p.params.branch) << '\n';
  }
}

Eigen::Vector3d rotate_about_w1(const Eigen::Vector3d& v, double angle) {
  return Eigen::AngleAxisd(angle, Eigen::Vector3d(1.0, 1.0, 1.0).normalized()) * v;
}

AuditReport region_audit(const AuditOptions& options) {
  if (options.pure_samples + options.mixed_samples == 0) {
    throw ValidationError("audit needs at least one sample");
  }
  const std::size_t pure_blocks = (options.pure_samples + kAuditBlock - 1) / kAuditBlock;
  const std::size_t mixed_blocks = (options.mixed_samples + kAuditBlock - 1) / kAuditBlock;
  std::vector<BlockResult> results(pure_blocks + mixed_blocks);

  parallel_for(results.size(), [&](std::size_t b) {
    BlockResult& r = results[b];
    if (b < pure_blocks) {
      auto rng = block_rng(options.seed, 0, b);
      const std::size_t end = std::min(options.pure_samples, (b + 1) * kAuditBlock);
      for (std::size_t s = b * kAuditBlock; s < end; ++s) {
        record(r, v_vector(random_pure_state(3, rng)).triple());
      }
    } else {
      const std::size_t mb = b - pure_blocks;
      auto rng = block_rng(options.seed, 1, mb);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const std::size_t end = std::min(options.mixed_samples, (mb + 1) * kAuditBlock);
      for (std::size_t s = mb * kAuditBlock; s < end; ++s) {
        const std::array<PureState, 2> parts{random_pure_state(3, rng), random_pure_state(3, rng)};
        const double p = unit(rng);
        const std::array<double, 2> weights{p, 1.0 - p};
        record(r, v_vector(MixedState::mixture(weights, parts)).triple());
      }
    }
  });

  AuditReport report;
  report.samples = options.pure_samples;
  report.mixed_samples = options.mixed_samples;
  report.seed = options.seed;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    report.violations += r.violations;
    if (r.min_margin < report.min_margin) {
      report.min_margin = r.min_margin;
      report.worst_v = r.worst_v;
    }
  }
  return report;
}

}  // namespace statmon
