#include "statmon/extremal.hpp"

#include <cmath>
#include <string>

#include "statmon/errors.hpp"
#include "statmon/monogamy.hpp"
#include "statmon/spectrum.hpp"

namespace statmon {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    std::string_view item = text.substr(start, stop - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(value)) throw ValidationError("not a number: '" + s + "'");
  return value;
}

void orthonormalize(Eigen::MatrixXd& basis) {
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < j; ++k) basis.col(j) -= basis.col(k).dot(basis.col(j)) * basis.col(k);
    }
    basis.col(j).normalize();
  }
}

bool parallel_to(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return a.normalized().dot(b.normalized()) >= 1.0 - kAlgebraTolerance;
}

}  // namespace

Objective Objective::from_terms(int n, std::span<const std::pair<Pair, double>> terms) {
  require_supported(n);
  Objective out;
  out.n = n;
  out.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(canonical_pairs(n).size()));
  for (const auto& [pair, weight] : terms) out.weights(static_cast<Eigen::Index>(pair_index(n, pair))) += weight;
  out.validate();
  return out;
}

Objective Objective::parse(int n, std::string_view text) {
  std::vector<std::pair<Pair, double>> terms;
  for (auto item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("objective term must look like AB:1, got '" + std::string(item) + "'");
    }
    terms.emplace_back(Pair::parse(item.substr(0, colon)), parse_number(item.substr(colon + 1)));
  }
  if (terms.empty()) throw ValidationError("objective has no terms");
  return from_terms(n, terms);
}

void Objective::validate() const {
  require_supported(n);
  if (n > kMaxDenseBoxes) {
    throw CapacityError("extremal problems are limited to n <= " + std::to_string(kMaxDenseBoxes));
  }
  if (static_cast<std::size_t>(weights.size()) != canonical_pairs(n).size()) {
    throw ValidationError("objective weight count does not match n");
  }
  if (!weights.allFinite()) throw ValidationError("objective weights must be finite");
  if (weights.cwiseAbs().maxCoeff() == 0.0) throw ValidationError("objective needs a nonzero weight");
}

Constraint Constraint::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("constraint must look like AB=1, got '" + std::string(text) + "'");
  }
  const double value = parse_number(text.substr(eq + 1));
  if (value != 1.0 && value != -1.0) {
    throw ValidationError("constraint values are restricted to +1 or -1 (perfect statistics)");
  }
  return {Pair::parse(text.substr(0, eq)), value > 0 ? Sign::kPlus : Sign::kMinus};
}

std::vector<Constraint> parse_constraints(std::string_view text) {
  std::vector<Constraint> out;
  for (auto item : split(text, ',')) out.push_back(Constraint::parse(item));
  return out;
}

JointEigenspace joint_eigenspace(int n, std::span<const Constraint> constraints) {
  require_supported(n);
  if (n > kMaxDenseBoxes) {
    throw CapacityError("eigenspace projection is limited to n <= " + std::to_string(kMaxDenseBoxes));
  }
  const auto d = static_cast<Eigen::Index>(factorial(n));
  JointEigenspace out;
  out.n = n;
  out.basis = Eigen::MatrixXd::Identity(d, d);
  for (const auto& c : constraints) {
    const Eigen::MatrixXd pi = exchange_operator(n, c.pair).dense();
    const Eigen::MatrixXd projector = 0.5 * (Eigen::MatrixXd::Identity(d, d) + to_double(c.value) * pi);
    // Vectors of the current subspace lying inside range(projector) are the
    // eigenvalue-1 eigenvectors of the compressed projector.
    Eigen::MatrixXd compressed = out.basis.transpose() * projector * out.basis;
    compressed = 0.5 * (compressed + compressed.transpose()).eval();
    const auto spectrum = symmetric_spectrum(compressed);
    Eigen::Index keep = 0;
    while (keep < spectrum.eigenvalues.size() && spectrum.eigenvalues(keep) >= 1.0 - kRankTolerance) ++keep;
    if (keep == 0) {
      throw InfeasibleError("constraints have an empty joint eigenspace (failed at " + c.pair.str() + ")");
    }
    Eigen::MatrixXd next = out.basis * spectrum.eigenvectors.leftCols(keep);
    orthonormalize(next);
    out.basis = std::move(next);
  }
  return out;
}

ExtremalResult constrained_extremal(std::span<const Constraint> constraints, const Objective& objective) {
  objective.validate();
  const int n = objective.n;
  const auto space = joint_eigenspace(n, constraints);
  const Eigen::MatrixXd m = pair_operator_sum(n, objective.weights);

  Eigen::MatrixXd reduced = space.basis.transpose() * m * space.basis;
  reduced = 0.5 * (reduced + reduced.transpose()).eval();
  const auto spectrum = symmetric_spectrum(reduced);
  const double top = spectrum.eigenvalues(0);
  const std::size_t degeneracy = spectrum.clusters().front().multiplicity;

  const Eigen::VectorXd vec = space.basis * spectrum.eigenvectors.col(0);
  PureState state = normalize(n, vec.cast<std::complex<double>>());
  if (std::abs(expectation(state, m) - top) > kStateTolerance) {
    throw InternalError("extremal state does not attain the reported eigenvalue");
  }
  for (const auto& c : constraints) {
    if (std::abs(expectation(state, exchange_operator(n, c.pair)) - to_double(c.value)) > kStateTolerance) {
      throw InternalError("extremal state violates constraint " + c.pair.str());
    }
  }
  VVector v = v_vector(state);
  return {top, degeneracy, std::move(state), std::move(v)};
}

ExtremalResult max_expectation(const Objective& objective) { return constrained_extremal({}, objective); }

RayExtreme symmetric_ray_extreme(const Eigen::Vector3d& direction) {
  if (!direction.allFinite()) throw ValidationError("direction must be finite");
  if (direction.norm() == 0.0) throw DegenerateInputError("direction must be nonzero");

  const auto& f = w_frame();
  // The margin is 1 - t * g(direction) with g positively homogeneous.
  const double g = std::abs(f.w1.dot(direction)) + std::hypot(f.w2.dot(direction), f.w3.dot(direction));
  const double scale = 1.0 / g;
  const Eigen::Vector3d point = scale * direction;

  PureState chi = boundary_state(surface_parameters(point));
  const double chi_error = (v_vector(chi).triple() - point).cwiseAbs().maxCoeff();
  if (chi_error > kStateTolerance) throw InternalError("boundary state misses the ray extreme");

  std::optional<double> catalog_error;
  if (parallel_to(direction, Eigen::Vector3d(1.0, 1.0, -1.0))) {
    PureState catalog = named_state(NamedKind::kNontransitive35);
    catalog_error = (v_vector(catalog).triple() - point).cwiseAbs().maxCoeff();
    if (*catalog_error > kStateTolerance) throw InternalError("catalog state misses the ray extreme");
    return {direction, scale, point, std::move(catalog), *catalog_error, catalog_error};
  }
  return {direction, scale, point, std::move(chi), chi_error, catalog_error};
}

}  // namespace statmon
