#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "statmon/errors.hpp"
#include "statmon/group_core.hpp"
#include "statmon/observables.hpp"
#include "statmon/spectrum.hpp"

namespace statmon {
namespace {

Eigen::MatrixXd random_symmetric(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = g(rng);
  return (a + a.transpose()) / 2.0;
}

TEST(SymmetricSpectrum, AgreesWithEigenOracle) {
  std::mt19937_64 rng(11);
  for (int d : {1, 2, 3, 6, 13, 24}) {
    const Eigen::MatrixXd m = random_symmetric(d, rng);
    const auto ours = symmetric_spectrum(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(m);
    Eigen::VectorXd expected = oracle.eigenvalues().reverse();
    EXPECT_LT((ours.eigenvalues - expected).cwiseAbs().maxCoeff(), 1e-10) << "d = " << d;
    EXPECT_LT(max_abs_entry(ours.reconstruct() - m), 1e-10);
    const Eigen::MatrixXd gram = ours.eigenvectors.transpose() * ours.eigenvectors;
    EXPECT_LT(max_abs_entry(gram - Eigen::MatrixXd::Identity(d, d)), 1e-10);
  }
}

TEST(SymmetricSpectrum, DescendingAndSignConvention) {
  std::mt19937_64 rng(5);
  const auto s = symmetric_spectrum(random_symmetric(8, rng));
  for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) EXPECT_GE(s.eigenvalues(i - 1), s.eigenvalues(i));
  for (Eigen::Index c = 0; c < s.eigenvectors.cols(); ++c) {
    Eigen::Index k = 0;
    s.eigenvectors.col(c).cwiseAbs().maxCoeff(&k);
    EXPECT_GT(s.eigenvectors(k, c), 0.0);
  }
}

TEST(SymmetricSpectrum, Deterministic) {
  std::mt19937_64 rng(9);
  const Eigen::MatrixXd m = random_symmetric(10, rng);
  const auto a = symmetric_spectrum(m);
  const auto b = symmetric_spectrum(m);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(SymmetricSpectrum, IdentityIsSixfoldOne) {
  const auto s = symmetric_spectrum(Eigen::MatrixXd::Identity(6, 6));
  EXPECT_EQ(s.multiplicity(1.0), 6u);
  EXPECT_EQ(s.clusters().size(), 1u);
}

TEST(SymmetricSpectrum, ExchangeOperatorHalfAndHalf) {
  const auto s = symmetric_spectrum(exchange_operator(3, Pair::parse("AB")).dense());
  EXPECT_EQ(s.multiplicity(1.0), 3u);
  EXPECT_EQ(s.multiplicity(-1.0), 3u);
  // Brute force: trace counts +1 minus -1 eigenvalues.
  EXPECT_EQ(exchange_operator(3, Pair::parse("AB")).dense().trace(), 0.0);
}

TEST(SymmetricSpectrum, W1SpectrumWithFourZeros) {
  const auto s = symmetric_spectrum(w_frame().W1);
  EXPECT_EQ(s.multiplicity(1.0), 1u);
  EXPECT_EQ(s.multiplicity(-1.0), 1u);
  EXPECT_EQ(s.multiplicity(0.0), 4u);
}

TEST(SymmetricSpectrum, DegenerateClustersAreOrthonormal) {
  const Eigen::MatrixXd p = exchange_operator(4, Pair::parse("AB")).dense() +
                            exchange_operator(4, Pair::parse("CD")).dense();
  const auto s = symmetric_spectrum(p);
  for (const auto& c : s.clusters()) {
    const auto block = s.eigenvectors.middleCols(static_cast<Eigen::Index>(c.first),
                                                 static_cast<Eigen::Index>(c.multiplicity));
    EXPECT_LT(max_abs_entry(p * block - c.value * block), 1e-10);
  }
  EXPECT_EQ(s.multiplicity(2.0), 6u);
  EXPECT_EQ(s.multiplicity(0.0), 12u);
  EXPECT_EQ(s.multiplicity(-2.0), 6u);
}

TEST(SymmetricSpectrum, RejectsAsymmetricAndEmpty) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(0, 1) = 1e-6;
  EXPECT_THROW(symmetric_spectrum(m), ContractError);
  EXPECT_THROW(symmetric_spectrum(Eigen::MatrixXd(2, 3)), ContractError);
}

TEST(HermitianEigenvalues, AgreesWithComplexOracle) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = {g(rng), g(rng)};
  const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(h);
  const Eigen::VectorXd ours = hermitian_eigenvalues(h);
  ASSERT_EQ(ours.size(), 5);
  EXPECT_LT((ours - oracle.eigenvalues().reverse()).cwiseAbs().maxCoeff(), 1e-10);
}

}  // namespace
}  // namespace statmon
