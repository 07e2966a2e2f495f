#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "statmon/errors.hpp"
#include "statmon/extremal.hpp"
#include "statmon/monogamy.hpp"

namespace statmon {
namespace {

double dense_max_eigenvalue(int n, const Eigen::VectorXd& weights) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(pair_operator_sum(n, weights));
  return oracle.eigenvalues().maxCoeff();
}

TEST(Objective, Parse) {
  const auto o = Objective::parse(4, "AB:1, CD:-0.5");
  EXPECT_EQ(o.weights.size(), 6);
  EXPECT_DOUBLE_EQ(o.weights(0), 1.0);
  EXPECT_DOUBLE_EQ(o.weights(5), -0.5);
  EXPECT_DOUBLE_EQ(o.weights(1), 0.0);
  EXPECT_THROW(Objective::parse(3, "AB"), ValidationError);
  EXPECT_THROW(Objective::parse(3, "AB:x"), ValidationError);
  EXPECT_THROW(Objective::parse(3, "AD:1"), ValidationError);
  EXPECT_THROW(Objective::parse(3, ""), ValidationError);
  EXPECT_THROW(Objective::parse(3, "AB:0").validate(), ValidationError);
  EXPECT_THROW(Objective::parse(6, "AB:1").validate(), CapacityError);
}

TEST(Constraint, Parse) {
  const auto cs = parse_constraints("AB=1,CD=-1");
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].pair.str(), "AB");
  EXPECT_EQ(cs[1].value, Sign::kMinus);
  EXPECT_THROW(Constraint::parse("AB=0.5"), ValidationError);
  EXPECT_THROW(Constraint::parse("AB"), ValidationError);
  EXPECT_TRUE(parse_constraints("").empty());
}

TEST(MaxExpectation, CatalogExamples) {
  const auto sym = max_expectation(Objective::parse(3, "AB:1,BC:1,AC:1"));
  EXPECT_NEAR(sym.value, 3.0, 1e-9);
  EXPECT_EQ(sym.degeneracy, 1u);
  EXPECT_TRUE(equal_up_to_phase(sym.state, named_state(NamedKind::kSymPlus)));
  EXPECT_NEAR(max_expectation(Objective::parse(4, "AB:1,CD:1,AC:-1,AD:-1,BC:-1,BD:-1")).value, 4.0, 1e-9);
  EXPECT_NEAR(max_expectation(Objective::parse(4, "AB:1,AC:1,BC:1,AD:-1,BD:-1,CD:-1")).value, 4.0, 1e-9);
}

TEST(MaxExpectation, AgreesWithEigenOracle) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 2; n <= 5; ++n) {
    Eigen::VectorXd c(static_cast<Eigen::Index>(canonical_pairs(n).size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = g(rng);
    const auto r = max_expectation({n, c});
    EXPECT_NEAR(r.value, dense_max_eigenvalue(n, c), 1e-9) << "n = " << n;
    EXPECT_NEAR(c.dot(r.v.values), r.value, 1e-9);
  }
}

TEST(MaxExpectation, SamplesNeverExceedEigenvalue) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::Vector3d c(g(rng), g(rng), g(rng));
    const double lambda = max_expectation({3, c}).value;
    for (int k = 0; k < 2000; ++k) EXPECT_LE(c.dot(v_vector(random_pure_state(3, rng)).values), lambda + 1e-9);
  }
}

TEST(ConstrainedExtremal, FermionUnderBoson) {
  const auto cs = parse_constraints("AB=1");
  const auto r = constrained_extremal(cs, Objective::parse(3, "BC:-1"));
  EXPECT_NEAR(r.value, 0.5, 1e-9);
  EXPECT_LT((r.v.triple() - Eigen::Vector3d(1, -0.5, -0.5)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ConstrainedExtremal, BosonUnderFermion) {
  const auto cs = parse_constraints("AB=-1");
  const auto r = constrained_extremal(cs, Objective::parse(3, "BC:1"));
  EXPECT_NEAR(r.value, 0.5, 1e-9);
  EXPECT_LT((r.v.triple() - Eigen::Vector3d(-1, 0.5, 0.5)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ConstrainedExtremal, TransitivityForcesValue) {
  const auto cs = parse_constraints("AB=1,BC=1");
  EXPECT_NEAR(constrained_extremal(cs, Objective::parse(3, "AC:-1")).value, -1.0, 1e-9);
}

TEST(ConstrainedExtremal, InfeasibleConstraints) {
  EXPECT_THROW(joint_eigenspace(3, parse_constraints("AB=1,BC=1,AC=-1")), InfeasibleError);
  EXPECT_THROW(constrained_extremal(parse_constraints("AB=1,BC=-1"), Objective::parse(3, "AC:1")), InfeasibleError);
}

TEST(ConstrainedExtremal, NeverAboveUnconstrained) {
  const Objective obj{3, Eigen::Vector3d(0.3, -1.0, 0.7)};
  const double free = max_expectation(obj).value;
  for (const char* text : {"AB=1", "AB=-1", "BC=1", "AC=-1"}) {
    const auto cs = parse_constraints(text);
    const auto r = constrained_extremal(cs, obj);
    EXPECT_LE(r.value, free + 1e-9);
    EXPECT_GE(check_sqrt(r.v.triple()), -1e-9);
  }
}

TEST(JointEigenspace, RankAndProjector) {
  const auto cs = parse_constraints("AB=1,CD=1");
  const auto space = joint_eigenspace(4, cs);
  EXPECT_EQ(space.rank(), 6u);
  const Eigen::MatrixXd p = space.projector();
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::MatrixXd ab = exchange_operator(4, Pair::parse("AB")).dense();
  EXPECT_LT((ab * p - p).cwiseAbs().maxCoeff(), 1e-12);
  // Bosonic triangle at n = 4: symmetric in A, B, C leaves four dimensions.
  EXPECT_EQ(joint_eigenspace(4, parse_constraints("AB=1,AC=1,BC=1")).rank(), 4u);
  EXPECT_EQ(joint_eigenspace(3, parse_constraints("AB=-1,BC=-1")).rank(), 1u);
  EXPECT_THROW(joint_eigenspace(6, cs), CapacityError);
}

TEST(RayExtreme, NonTransitiveDirection) {
  const auto r = symmetric_ray_extreme(Eigen::Vector3d(1, 1, -1));
  EXPECT_NEAR(r.scale, 0.6, 1e-9);
  EXPECT_LT((r.point - Eigen::Vector3d(0.6, 0.6, -0.6)).cwiseAbs().maxCoeff(), 1e-9);
  ASSERT_TRUE(r.catalog_error.has_value());
  EXPECT_LT(*r.catalog_error, 1e-9);
  EXPECT_LT(r.state_error, 1e-9);
}

TEST(RayExtreme, OtherDirections) {
  EXPECT_NEAR(symmetric_ray_extreme(Eigen::Vector3d(1, 1, 1)).scale, 1.0, 1e-9);
  const auto neg = symmetric_ray_extreme(Eigen::Vector3d(-1, -1, 1));
  EXPECT_NEAR(neg.scale, 0.6, 1e-9);
  EXPECT_LT((v_vector(neg.state).triple() - Eigen::Vector3d(-0.6, -0.6, 0.6)).cwiseAbs().maxCoeff(), 1e-9);
  const auto generic = symmetric_ray_extreme(Eigen::Vector3d(0.2, -0.7, 0.4));
  EXPECT_NEAR(check_sqrt(generic.point), 0.0, 1e-9);
  EXPECT_FALSE(generic.catalog_error.has_value());
  EXPECT_THROW(symmetric_ray_extreme(Eigen::Vector3d::Zero()), DegenerateInputError);
}

}  // namespace
}  // namespace statmon
