#include "statmon/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "statmon/errors.hpp"

namespace statmon {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p) {
    for (Eigen::Index q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
  }
  return std::sqrt(2.0 * sum);
}

// One Jacobi rotation annihilating a(p, q); accumulates into v.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void orthonormalize_columns(Eigen::MatrixXd& v, Eigen::Index first, Eigen::Index count) {
  for (Eigen::Index j = first; j < first + count; ++j) {
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = first; k < j; ++k) v.col(j) -= v.col(k).dot(v.col(j)) * v.col(k);
    }
    const double norm = v.col(j).norm();
    if (norm == 0.0) throw InternalError("eigenvector cluster lost rank");
    v.col(j) /= norm;
  }
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> column) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    // Ties go to the lowest index.
    if (std::abs(column(i)) > best_abs + 1e-12) {
      best_abs = std::abs(column(i));
      best = i;
    }
  }
  if (column(best) < 0.0) column = -column;
}

}  // namespace

double max_abs_entry(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::vector<EigenCluster> SpectralDecomposition::clusters(double gap) const {
  std::vector<EigenCluster> out;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (!out.empty() && std::abs(eigenvalues(i - 1) - eigenvalues(i)) < gap) {
      ++out.back().multiplicity;
    } else {
      out.push_back({eigenvalues(i), static_cast<std::size_t>(i), 1});
    }
  }
  return out;
}

std::size_t SpectralDecomposition::multiplicity(double value, double tol) const {
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (std::abs(eigenvalues(i) - value) <= tol) ++count;
  }
  return count;
}

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
}

SpectralDecomposition symmetric_spectrum(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ContractError("eigensolver needs a square matrix");
  const double asymmetry = max_abs_entry(m - m.transpose());
  if (asymmetry > kSymmetryTolerance) {
    throw ContractError("matrix is not symmetric (max |M - M^T| = " + std::to_string(asymmetry) +
                        ")");
  }

  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  int sweeps = 0;
  while (off_diagonal_norm(a) > kJacobiOffDiagonalThreshold * scale) {
    if (sweeps == kJacobiMaxSweeps) {
      throw InternalError("Jacobi eigensolver did not converge in " +
                          std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Stable so equal eigenvalues keep sweep order.
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  SpectralDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  for (const auto& cluster : out.clusters()) {
    if (cluster.multiplicity > 1) {
      orthonormalize_columns(out.eigenvectors, static_cast<Eigen::Index>(cluster.first),
                             static_cast<Eigen::Index>(cluster.multiplicity));
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) fix_sign(out.eigenvectors.col(k));
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw ContractError("Hermitian eigenvalues need a square matrix");
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd embedded(2 * n, 2 * n);
  embedded << h.real(), -h.imag(), h.imag(), h.real();
  embedded = 0.5 * (embedded + embedded.transpose()).eval();
  const auto spectrum = symmetric_spectrum(embedded);
  // Each eigenvalue of h appears twice in the embedding.
  Eigen::VectorXd values(n);
  for (Eigen::Index k = 0; k < n; ++k) values(k) = spectrum.eigenvalues(2 * k);
  return values;
}

}  // namespace statmon
