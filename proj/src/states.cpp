#include "statmon/states.hpp"

#include <cmath>
#include <string>

#include "statmon/errors.hpp"
#include "statmon/spectrum.hpp"

namespace statmon {

PureState::PureState(int n, Eigen::VectorXcd amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
  require_supported(n);
  if (static_cast<std::size_t>(amplitudes_.size()) != factorial(n)) {
    throw ValidationError("state for n = " + std::to_string(n) + " needs " +
                          std::to_string(factorial(n)) + " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw ValidationError("state is not normalized (norm = " + std::to_string(norm) + ")");
  }
}

std::complex<double> PureState::amplitude(const OccupationWord& word) const {
  return amplitude(BasisOrdering::canonical(n_).index_of(word));
}

PureState normalize(int n, const Eigen::VectorXcd& raw) {
  const double norm = raw.norm();
  if (!std::isfinite(norm)) throw ValidationError("amplitudes must be finite");
  if (norm == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
  return PureState(n, raw / norm);
}

PureState normalize(const PureState& state) { return normalize(state.n(), state.amplitudes()); }

MixedState::MixedState(int n, Eigen::MatrixXcd matrix) : n_(n), matrix_(std::move(matrix)) {
  require_supported(n);
  const auto d = static_cast<Eigen::Index>(factorial(n));
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw ValidationError("density matrix for n = " + std::to_string(n) + " must be " +
                          std::to_string(d) + " x " + std::to_string(d));
  }
  const double asymmetry = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kStateTolerance) throw ValidationError("density matrix is not Hermitian");
  const std::complex<double> trace = matrix_.trace();
  if (std::abs(trace - 1.0) > kStateTolerance) {
    throw ValidationError("density matrix trace is " + std::to_string(trace.real()) + ", not 1");
  }
  const Eigen::VectorXd eigenvalues = hermitian_eigenvalues(matrix_);
  if (eigenvalues.minCoeff() < -kStateTolerance) {
    throw ValidationError("density matrix has a negative eigenvalue " +
                          std::to_string(eigenvalues.minCoeff()));
  }
}

MixedState MixedState::from_pure(const PureState& state) {
  return MixedState(state.n(), state.amplitudes() * state.amplitudes().adjoint());
}

MixedState MixedState::mixture(std::span<const double> weights, std::span<const PureState> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw ValidationError("mixture needs one weight per state and at least one state");
  }
  const int n = states.front().n();
  const auto d = static_cast<Eigen::Index>(states.front().dimension());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  double total = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].n() != n) throw ValidationError("mixture components differ in n");
    if (weights[k] < 0.0) throw ValidationError("mixture weights must be non-negative");
    rho += weights[k] * states[k].amplitudes() * states[k].amplitudes().adjoint();
    total += weights[k];
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw ValidationError("mixture weights must sum to 1");
  return MixedState(n, std::move(rho));
}

double overlap_modulus(const PureState& a, const PureState& b) {
  if (a.n() != b.n()) throw ContractError("states live in different spaces");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  return a.n() == b.n() && overlap_modulus(a, b) >= 1.0 - tol;
}

PureState random_pure_state(int n, std::mt19937_64& rng) {
  require_supported(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(factorial(n));
  Eigen::VectorXcd raw(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    raw(i) = {re, im};
  }
  return normalize(n, raw);
}

PureState random_pure_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(n, rng);
}

PureState apply(const BasisPermutation& op, const PureState& state) {
  if (op.dimension() != state.dimension()) throw ContractError("operator and state dimensions differ");
  Eigen::VectorXcd out(state.amplitudes().size());
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    out(static_cast<Eigen::Index>(op[i])) = state.amplitude(i);
  }
  return PureState(state.n(), std::move(out));
}

PureState apply(const ExchangeOperator& op, const PureState& state) {
  if (op.n != state.n()) throw ContractError("operator and state have different n");
  return apply(op.mapping, state);
}

int word_sign(const OccupationWord& word) {
  int inversions = 0;
  const auto boxes = word.boxes();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes[j] < boxes[i]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace statmon
