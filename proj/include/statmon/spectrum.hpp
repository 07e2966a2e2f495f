#pragma once

// Dense real-symmetric eigensolver (cyclic Jacobi).  The matrices in this
// library are at most 120 x 120, usually 6 x 6 or 24 x 24.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace statmon {

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyGap = 1e-8;

struct EigenCluster {
  double value = 0.0;
  std::size_t first = 0;  // column of the first eigenvector in the cluster
  std::size_t multiplicity = 0;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
  int sweeps = 0;

  std::vector<EigenCluster> clusters(double gap = kDegeneracyGap) const;
  // Number of eigenvalues within `tol` of `value`.
  std::size_t multiplicity(double value, double tol = kDegeneracyGap) const;
  Eigen::MatrixXd reconstruct() const;
};

// Full decomposition of a real symmetric matrix.  Deterministic: fixed
// sweep order, degenerate clusters re-orthonormalized, and each eigenvector
// signed so that its largest-magnitude component is positive.
// Throws ContractError if |M - M^T| exceeds kSymmetryTolerance.
SpectralDecomposition symmetric_spectrum(const Eigen::MatrixXd& m);

// Eigenvalues (descending) of a complex Hermitian matrix, computed
// via the real symmetric embedding [[Re, -Im], [Im, Re]].
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h);

double max_abs_entry(const Eigen::MatrixXd& m);

}  // namespace statmon
