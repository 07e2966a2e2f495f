#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "statmon/errors.hpp"
#include "statmon/observables.hpp"
#include "statmon/states.hpp"

namespace statmon {
namespace {

Eigen::Vector3d triple(const PureState& s) { return v_vector(s).triple(); }

TEST(PureState, ValidatesDimensionAndNorm) {
  EXPECT_THROW(PureState(3, Eigen::VectorXcd::Zero(5)), ValidationError);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(6);
  amps(0) = 2.0;
  EXPECT_THROW(PureState(3, amps), ValidationError);
  amps(0) = 1.0;
  EXPECT_NO_THROW(PureState(3, amps));
}

TEST(Normalize, ScalesToUnitNorm) {
  Eigen::VectorXcd raw = Eigen::VectorXcd::Zero(6);
  raw(0) = 2.0;
  const auto s = normalize(3, raw);
  EXPECT_DOUBLE_EQ(s.amplitude(0).real(), 1.0);
  for (std::size_t i = 1; i < 6; ++i) EXPECT_EQ(s.amplitude(i), std::complex<double>(0.0));
}

TEST(Normalize, Idempotent) {
  const auto s = random_pure_state(3, 17);
  EXPECT_LT((normalize(s).amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Normalize, ZeroVectorIsDegenerate) {
  EXPECT_THROW(normalize(3, Eigen::VectorXcd::Zero(6)), DegenerateInputError);
}

TEST(NamedState, CatalogVVectors) {
  EXPECT_LT((triple(named_state(NamedKind::kEq5)) - Eigen::Vector3d(1, -0.5, -0.5)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((triple(named_state(NamedKind::kEq6)) - Eigen::Vector3d(-1, 0.5, 0.5)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((triple(named_state(NamedKind::kNontransitive35)) - Eigen::Vector3d(0.6, 0.6, -0.6)).cwiseAbs().maxCoeff(),
            1e-12);
  EXPECT_LT((triple(named_state(NamedKind::kSymPlus)) - Eigen::Vector3d(1, 1, 1)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((triple(named_state(NamedKind::kAntisymMinus)) + Eigen::Vector3d(1, 1, 1)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NamedState, Eq5Amplitudes) {
  const auto s = named_state(NamedKind::kEq5);
  EXPECT_NEAR(s.amplitude(OccupationWord::parse("ABC")).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationWord::parse("BAC")).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationWord::parse("ACB")).real(), -0.5, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationWord::parse("BCA")).real(), -0.5, 1e-15);
}

TEST(NamedState, ParseAndPrint) {
  for (const char* name : {"sym_plus", "antisym_minus", "eq5", "eq6", "phi_eq23", "nontransitive_3_5"}) {
    EXPECT_EQ(NamedState::parse(name).str(), name);
  }
  const auto chi = NamedState::parse("chi:0.5,0.25,+,-");
  EXPECT_EQ(chi.kind, NamedKind::kChi);
  EXPECT_DOUBLE_EQ(chi.chi.theta, 0.5);
  EXPECT_DOUBLE_EQ(chi.chi.phi, 0.25);
  EXPECT_EQ(chi.chi.symmetry, Sign::kPlus);
  EXPECT_EQ(chi.chi.branch, Sign::kMinus);
  EXPECT_THROW(NamedState::parse("eq7"), ValidationError);
  EXPECT_THROW(NamedState::parse("chi:1,2,+"), ValidationError);
  EXPECT_THROW(NamedState::parse("chi:a,0,+,+"), ValidationError);
  EXPECT_THROW(NamedState::parse("chi:0,0,x,+"), ValidationError);
}

TEST(NamedState, ChiOutOfRangeRejected) {
  EXPECT_THROW(named_state(NamedState::parse("chi:7,0.1,+,+")), ValidationError);
  EXPECT_THROW(named_state(NamedState::parse("chi:0.1,2,+,+")), ValidationError);
}

TEST(NamedState, AllNormalized) {
  for (auto kind : {NamedKind::kSymPlus, NamedKind::kAntisymMinus, NamedKind::kEq5, NamedKind::kEq6,
                    NamedKind::kPhiEq23, NamedKind::kNontransitive35}) {
    EXPECT_NEAR(named_state(kind).amplitudes().norm(), 1.0, 1e-12);
  }
}

TEST(SymmetricStates, AreEigenvectorsOfEveryExchange) {
  for (int n = 2; n <= 5; ++n) {
    const auto& o = BasisOrdering::canonical(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(o.dimension()));
    Eigen::VectorXcd plus(static_cast<Eigen::Index>(o.dimension()));
    Eigen::VectorXcd minus(static_cast<Eigen::Index>(o.dimension()));
    for (std::size_t i = 0; i < o.dimension(); ++i) {
      plus(static_cast<Eigen::Index>(i)) = a;
      minus(static_cast<Eigen::Index>(i)) = a * word_sign(o.word_at(i));
    }
    const PureState p(n, plus);
    const PureState m(n, minus);
    for (const auto& pair : canonical_pairs(n)) {
      const auto op = exchange_operator(n, pair);
      EXPECT_LT((apply(op, p).amplitudes() - plus).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((apply(op, m).amplitudes() + minus).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(WordSign, Parity) {
  EXPECT_EQ(word_sign(OccupationWord::parse("ABC")), 1);
  EXPECT_EQ(word_sign(OccupationWord::parse("BAC")), -1);
  EXPECT_EQ(word_sign(OccupationWord::parse("BCA")), 1);
  EXPECT_EQ(word_sign(OccupationWord::parse("DCBA")), 1);
}

TEST(Apply, CatalogEigenvectors) {
  const auto ab = exchange_operator(3, Pair::parse("AB"));
  const auto e5 = named_state(NamedKind::kEq5);
  const auto e6 = named_state(NamedKind::kEq6);
  EXPECT_EQ(apply(ab, e5).amplitudes(), e5.amplitudes());
  EXPECT_EQ(apply(ab, e6).amplitudes(), -e6.amplitudes());
}

TEST(Apply, TwiceIsIdentity) {
  const auto s = random_pure_state(4, 3);
  for (const auto& p : canonical_pairs(4)) {
    const auto op = exchange_operator(4, p);
    EXPECT_EQ(apply(op, apply(op, s)).amplitudes(), s.amplitudes());
  }
}

TEST(Apply, DimensionMismatch) {
  EXPECT_THROW(apply(exchange_operator(4, Pair::parse("AB")), random_pure_state(3, 1)), ContractError);
}

TEST(RandomPureState, DeterministicAndNormalized) {
  const auto a = random_pure_state(3, 99);
  const auto b = random_pure_state(3, 99);
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
  EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_NE(a.amplitudes(), random_pure_state(3, 100).amplitudes());
}

TEST(RandomPureState, MeanExchangeIsZero) {
  std::mt19937_64 rng(123);
  const int samples = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  const auto ab = exchange_operator(3, Pair::parse("AB"));
  for (int k = 0; k < samples; ++k) {
    const double v = expectation(random_pure_state(3, rng), ab);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / samples;
  const double sigma = std::sqrt((sum_sq / samples - mean * mean) / samples);
  EXPECT_LT(std::abs(mean), 5.0 * sigma);
}

TEST(OverlapModulus, PhaseInvariant) {
  const auto s = random_pure_state(3, 8);
  const PureState t(3, s.amplitudes() * std::polar(1.0, 0.7));
  EXPECT_NEAR(overlap_modulus(s, t), 1.0, 1e-12);
  EXPECT_TRUE(equal_up_to_phase(s, t));
  EXPECT_FALSE(equal_up_to_phase(s, random_pure_state(3, 9)));
}

TEST(MixedState, ValidatesInvariants) {
  const auto s = random_pure_state(3, 4);
  EXPECT_NO_THROW(MixedState::from_pure(s));
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(6, 6);
  EXPECT_THROW(MixedState(3, bad), ValidationError);  // trace 6
  bad = Eigen::MatrixXcd::Zero(6, 6);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  EXPECT_THROW(MixedState(3, bad), ValidationError);  // negative eigenvalue
  bad = Eigen::MatrixXcd::Identity(6, 6) / 6.0;
  bad(0, 1) = std::complex<double>(0.0, 0.1);
  EXPECT_THROW(MixedState(3, bad), ValidationError);  // not Hermitian
}

TEST(MixedState, MixtureOfOppositeSymmetries) {
  const std::vector<PureState> states{named_state(NamedKind::kSymPlus), named_state(NamedKind::kAntisymMinus)};
  const std::vector<double> weights{0.5, 0.5};
  const auto rho = MixedState::mixture(weights, states);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_LT(v_vector(rho).values.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MixedState, MixtureWeightErrors) {
  const std::vector<PureState> states{random_pure_state(3, 1), random_pure_state(3, 2)};
  const std::vector<double> negative{1.5, -0.5};
  const std::vector<double> short_sum{0.3, 0.3};
  EXPECT_THROW(MixedState::mixture(negative, states), ValidationError);
  EXPECT_THROW(MixedState::mixture(short_sum, states), ValidationError);
}

}  // namespace
}  // namespace statmon
