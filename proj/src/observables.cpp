#include "statmon/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "statmon/errors.hpp"
#include "statmon/spectrum.hpp"

namespace statmon {

namespace {

double real_checked(std::complex<double> value) {
  if (std::abs(value.imag()) > kImaginaryResidue) {
    throw InternalError("expectation of a Hermitian operator has imaginary part " +
                        std::to_string(value.imag()));
  }
  return value.real();
}

void require_hermitian(const BasisPermutation& op) {
  if (!op.is_involution()) {
    throw ContractError("basis permutation is not Hermitian (not an involution)");
  }
}

void require_symmetric(const Eigen::MatrixXd& op, std::size_t dimension) {
  if (static_cast<std::size_t>(op.rows()) != dimension ||
      static_cast<std::size_t>(op.cols()) != dimension) {
    throw ContractError("operator dimension does not match the state");
  }
  const double scale = std::max(1.0, max_abs_entry(op));
  if (max_abs_entry(op - op.transpose()) > kSymmetryTolerance * scale) {
    throw ContractError("operator is not Hermitian");
  }
}

template <typename State>
VVector v_vector_impl(const State& state) {
  VVector v;
  v.n = state.n();
  v.pairs = canonical_pairs(v.n);
  v.values.resize(static_cast<Eigen::Index>(v.pairs.size()));
  for (std::size_t k = 0; k < v.pairs.size(); ++k) {
    v.values(static_cast<Eigen::Index>(k)) = expectation(state, exchange_operator(v.n, v.pairs[k]));
  }
  return v;
}

}  // namespace

double VVector::at(Pair pair) const {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k] == pair) return values(static_cast<Eigen::Index>(k));
  }
  throw ValidationError("pair " + pair.str() + " is not part of this v-vector");
}

Eigen::Vector3d VVector::triple() const {
  if (n != 3) throw UnsupportedError("v-vector triple is defined for n = 3 only");
  return {values(0), values(1), values(2)};
}

double expectation(const PureState& state, const BasisPermutation& op) {
  if (op.dimension() != state.dimension()) throw ContractError("operator and state dimensions differ");
  require_hermitian(op);
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    sum += std::conj(state.amplitude(op[i])) * state.amplitude(i);
  }
  return real_checked(sum);
}

double expectation(const PureState& state, const ExchangeOperator& op) {
  if (op.n != state.n()) throw ContractError("operator and state have different n");
  return expectation(state, op.mapping);
}

double expectation(const PureState& state, const Eigen::MatrixXd& op) {
  require_symmetric(op, state.dimension());
  const Eigen::VectorXcd image = op.cast<std::complex<double>>() * state.amplitudes();
  return real_checked(state.amplitudes().dot(image));
}

double expectation(const MixedState& state, const BasisPermutation& op) {
  if (op.dimension() != state.dimension()) throw ContractError("operator and state dimensions differ");
  require_hermitian(op);
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    sum += state.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(op[i]));
  }
  return real_checked(sum);
}

double expectation(const MixedState& state, const ExchangeOperator& op) {
  if (op.n != state.n()) throw ContractError("operator and state have different n");
  return expectation(state, op.mapping);
}

double expectation(const MixedState& state, const Eigen::MatrixXd& op) {
  require_symmetric(op, state.dimension());
  return real_checked((state.matrix() * op.cast<std::complex<double>>()).trace());
}

VVector v_vector(const PureState& state) { return v_vector_impl(state); }
VVector v_vector(const MixedState& state) { return v_vector_impl(state); }

const WFrame& w_frame() {
  static const WFrame frame = [] {
    WFrame f;
    const double r3 = std::sqrt(3.0);
    f.w1 = Eigen::Vector3d(1.0, 1.0, 1.0) / 3.0;
    f.w2 = Eigen::Vector3d(2.0, -1.0, -1.0) / 3.0;
    f.w3 = Eigen::Vector3d(0.0, 1.0 / r3, -1.0 / r3);
    f.W1 = pair_operator_sum(3, f.w1);
    f.W2 = pair_operator_sum(3, f.w2);
    f.W3 = pair_operator_sum(3, f.w3);
    return f;
  }();
  return frame;
}

Eigen::Vector3d w_theta_vector(double theta) {
  const auto& f = w_frame();
  return f.w2 * std::cos(theta) + f.w3 * std::sin(theta);
}

Eigen::MatrixXd w_theta(double theta) {
  if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
  const auto& f = w_frame();
  return f.W2 * std::cos(theta) + f.W3 * std::sin(theta);
}

Eigen::MatrixXd pair_operator_sum(int n, const Eigen::VectorXd& weights) {
  const auto pairs = canonical_pairs(n);
  if (static_cast<std::size_t>(weights.size()) != pairs.size()) {
    throw ValidationError("expected " + std::to_string(pairs.size()) + " pair weights for n = " +
                          std::to_string(n));
  }
  const auto d = static_cast<Eigen::Index>(factorial(n));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double c = weights(static_cast<Eigen::Index>(k));
    if (c == 0.0) continue;
    const auto op = exchange_operator(n, pairs[k]);
    for (std::size_t i = 0; i < op.mapping.dimension(); ++i) {
      m(op.mapping[i], static_cast<Eigen::Index>(i)) += c;
    }
  }
  return m;
}

CyclicSpectrum cyclic_spectrum(const BasisPermutation& s) {
  const std::size_t d = s.dimension();
  if (power(s, 3) != BasisPermutation::identity(d)) throw ContractError("operator does not satisfy S^3 = I");
  if (s == BasisPermutation::identity(d)) throw ContractError("operator is the identity");

  // a + 2b = d and a - b = trace(S), where a counts eigenvalue 1 and b each
  // of the complex pair.
  const std::size_t trace = s.fixed_points();
  if ((d - trace) % 3 != 0) throw InternalError("inconsistent trace for an order-3 permutation");
  const std::size_t pair_multiplicity = (d - trace) / 3;
  const std::size_t unit_multiplicity = d - 2 * pair_multiplicity;

  const Eigen::MatrixXd dense = s.dense();
  const auto hermitian_part = symmetric_spectrum(0.5 * (dense + dense.transpose()));
  if (hermitian_part.multiplicity(1.0) != unit_multiplicity ||
      hermitian_part.multiplicity(-0.5) != 2 * pair_multiplicity) {
    throw InternalError("Hermitian part of S disagrees with the trace multiplicities");
  }

  const double angle = 2.0 * std::numbers::pi / 3.0;
  CyclicSpectrum out;
  out.entries.push_back({{1.0, 0.0}, unit_multiplicity});
  out.entries.push_back({std::polar(1.0, angle), pair_multiplicity});
  out.entries.push_back({std::polar(1.0, -angle), pair_multiplicity});
  return out;
}

HomProbabilities bunching_probability(double v) {
  if (!std::isfinite(v) || v < -1.0 - kStateTolerance || v > 1.0 + kStateTolerance) {
    throw ValidationError("exchange expectation must lie in [-1, 1], got " + std::to_string(v));
  }
  return {(1.0 + v) / 2.0, (1.0 - v) / 2.0};
}

}  // namespace statmon
