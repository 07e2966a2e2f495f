#pragma once

// Exchange expectations, the v-vector, the W-operator frame and the
// Hong-Ou-Mandel reading of v.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "statmon/group_core.hpp"
#include "statmon/states.hpp"

namespace statmon {

inline constexpr double kAlgebraTolerance = 1e-12;
// Imaginary part allowed on <psi|Op|psi> for Hermitian Op before it is dropped.
inline constexpr double kImaginaryResidue = 1e-9;

// Pairwise exchange expectations in canonical_pairs(n) order; for n = 3 this
// is (v_AB, v_BC, v_AC).
struct VVector {
  int n = 0;
  std::vector<Pair> pairs;
  Eigen::VectorXd values;

  double at(Pair pair) const;
  // n = 3 only.
  Eigen::Vector3d triple() const;
};

double expectation(const PureState& state, const BasisPermutation& op);
double expectation(const PureState& state, const ExchangeOperator& op);
double expectation(const PureState& state, const Eigen::MatrixXd& op);
double expectation(const MixedState& state, const BasisPermutation& op);
double expectation(const MixedState& state, const ExchangeOperator& op);
double expectation(const MixedState& state, const Eigen::MatrixXd& op);

VVector v_vector(const PureState& state);
VVector v_vector(const MixedState& state);

// W_i = w_i . (Pi_AB, Pi_BC, Pi_AC) on the six-dimensional tripartite space.
struct WFrame {
  Eigen::Vector3d w1;
  Eigen::Vector3d w2;
  Eigen::Vector3d w3;
  Eigen::MatrixXd W1;
  Eigen::MatrixXd W2;
  Eigen::MatrixXd W3;
};

const WFrame& w_frame();

// w2 cos(theta) + w3 sin(theta).
Eigen::Vector3d w_theta_vector(double theta);
// W2 cos(theta) + W3 sin(theta).
Eigen::MatrixXd w_theta(double theta);

// Dense sum_k weights[k] * Pi_{pairs[k]} for canonical_pairs(n).
Eigen::MatrixXd pair_operator_sum(int n, const Eigen::VectorXd& weights);

inline Eigen::MatrixXd commutator(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a * b - b * a;
}
inline Eigen::MatrixXd anticommutator(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a * b + b * a;
}

struct CyclicSpectrum {
  struct Entry {
    std::complex<double> value;
    std::size_t multiplicity = 0;
  };
  std::vector<Entry> entries;  // 1, exp(+2 pi i / 3), exp(-2 pi i / 3)
};

// Spectrum of an order-3 basis permutation.  S^3 = I with S != I confines
// the spectrum to cube roots of unity; multiplicities follow from trace(S)
// and are cross-checked against the Jacobi spectrum of (S + S^T) / 2.
// Throws ContractError if S^3 != I or S = I.
CyclicSpectrum cyclic_spectrum(const BasisPermutation& s);

// Hong-Ou-Mandel reading of an exchange expectation v in [-1, 1].
struct HomProbabilities {
  double bunching = 0.0;      // (1 + v) / 2
  double antibunching = 0.0;  // (1 - v) / 2
};

// Bunching above this probability violates the noncontextuality-like
// beam-splitter inequality.
inline constexpr double kContextualityThreshold = 0.75;

HomProbabilities bunching_probability(double v);
inline bool exceeds_contextuality_threshold(double probability) {
  return probability > kContextualityThreshold;
}

}  // namespace statmon
