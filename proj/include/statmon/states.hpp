#pragma once

// Pure and mixed states over the occupation-word basis, plus the catalog of
// named tripartite states.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "statmon/group_core.hpp"

namespace statmon {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kStateTolerance = 1e-9;

// Unit-norm amplitude vector of length n! in BasisOrdering::canonical(n).
class PureState {
 public:
  // Throws ValidationError on wrong dimension or |norm - 1| > kNormTolerance.
  PureState(int n, Eigen::VectorXcd amplitudes);

  int n() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(std::size_t index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }
  std::complex<double> amplitude(const OccupationWord& word) const;

 private:
  int n_;
  Eigen::VectorXcd amplitudes_;
};

// Rescales raw amplitudes to unit norm.  Throws DegenerateInputError for
// the zero vector.
PureState normalize(int n, const Eigen::VectorXcd& raw);
PureState normalize(const PureState& state);

// Hermitian, unit-trace, positive semidefinite density matrix.
class MixedState {
 public:
  // Throws ValidationError if any invariant fails beyond kStateTolerance.
  MixedState(int n, Eigen::MatrixXcd matrix);

  static MixedState from_pure(const PureState& state);
  // sum_k weights[k] |psi_k><psi_k|; weights must be non-negative and sum to 1.
  static MixedState mixture(std::span<const double> weights, std::span<const PureState> states);

  int n() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  int n_;
  Eigen::MatrixXcd matrix_;
};

// |<a|b>|.
double overlap_modulus(const PureState& a, const PureState& b);
// True when the states agree up to a global phase.
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = kStateTolerance);

// Independent standard complex Gaussians, normalized.  Same seed, same state.
PureState random_pure_state(int n, std::uint64_t seed);
PureState random_pure_state(int n, std::mt19937_64& rng);

// Output amplitude at mapping[i] equals input amplitude at i.
PureState apply(const BasisPermutation& op, const PureState& state);
PureState apply(const ExchangeOperator& op, const PureState& state);

enum class NamedKind {
  kSymPlus,
  kAntisymMinus,
  kEq5,
  kEq6,
  kPhiEq23,
  kNontransitive35,
  kChi,
};

struct ChiParameters {
  double theta = 0.0;  // [0, 2 pi)
  double phi = 0.0;    // [0, pi / 2]
  Sign symmetry = Sign::kPlus;  // selects |+> or |->
  Sign branch = Sign::kPlus;    // +1 or -1 eigenvector of W_theta
};

struct NamedState {
  NamedKind kind = NamedKind::kSymPlus;
  ChiParameters chi;

  // sym_plus, antisym_minus, eq5, eq6, phi_eq23, nontransitive_3_5, or
  // chi:theta,phi,s1,s2 with s1, s2 in {+, -}.
  static NamedState parse(std::string_view name);
  std::string str() const;
};

// Exact n = 3 catalog state; chi is built from the W_theta eigensolver.
PureState named_state(const NamedState& name);
PureState named_state(NamedKind kind);

// Parity of the word as a permutation, with ABC... as the identity.
int word_sign(const OccupationWord& word);

}  // namespace statmon
