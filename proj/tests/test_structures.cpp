#include <gtest/gtest.h>

#include <random>

#include "crossbial/error.hpp"
#include "crossbial/zoo.hpp"
#include "support.hpp"

using namespace crossbial;
using testing_support::random_map;
using testing_support::Terms;

TEST(Axioms, GroupAlgebrasAndDualsAreHopf) {
  for (int n : {1, 2, 3, 5}) {
    EXPECT_TRUE(check_axioms(group_algebra(n), StructureKind::Hopf).pass()) << n;
    EXPECT_TRUE(check_axioms(dual_group_algebra(n), StructureKind::Hopf).pass()) << n;
  }
  EXPECT_TRUE(check_axioms(group_algebra(std::vector<int>{2, 3}), StructureKind::Hopf).pass());
}

TEST(Axioms, CorruptedProductNamesAxiomAndCounterexample) {
  HopfAlgebraData H = group_algebra(3);
  H.m.add(0, 4, Scalar(1));  // g·g picks up an extra copy of 1
  CheckReport r = check_axioms(H, StructureKind::Bialgebra);
  ASSERT_FALSE(r.pass());
  const AxiomResult* a = r.find("associativity");
  ASSERT_NE(a, nullptr);
  EXPECT_FALSE(a->pass);
  ASSERT_TRUE(a->counterexample);
  EXPECT_FALSE(a->counterexample->lhs == a->counterexample->rhs);
}

TEST(Axioms, TaftFactorIsAnAlgebraAndCoalgebraButNotAVectBialgebra) {
  BiunitalPair T = taft_factor(3, root_of_unity(3, 1));
  EXPECT_TRUE(check_axioms(T, StructureKind::Algebra).pass());
  EXPECT_TRUE(check_axioms(T, StructureKind::Coalgebra).pass());
  EXPECT_FALSE(check_axioms(T, StructureKind::Bialgebra).pass());
}

TEST(Axioms, TensorAndDualPreserveHopf) {
  HopfAlgebraData R = radford({2, 1, 2, 1}).H;
  HopfAlgebraData G = group_algebra(3);
  EXPECT_TRUE(check_axioms(tensor_pair(R, G, "R⊗G"), StructureKind::Hopf).pass());
  EXPECT_TRUE(check_axioms(dual(R, "R*"), StructureKind::Hopf).pass());
  EXPECT_EQ(dual(dual(R, "R*"), R.space.name).m, R.m);
}

TEST(Axioms, ValidatePairRejectsBadCounit) {
  HopfAlgebraData H = group_algebra(2);
  H.eps = H.eps * Scalar(2);
  try {
    validate_pair(H);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Convolution, AntipodeIsInverseOfIdentity) {
  for (const HopfAlgebraData& H : {group_algebra(4), dual_group_algebra(3), radford({3, 1, 3, 1}).H}) {
    LinMap s = convolution_inverse(H.id(), coalgebra_of(H), algebra_of(H));
    EXPECT_EQ(s, *H.S) << H.space.name;
  }
}

TEST(Convolution, InverseIsTwoSidedOnRandomInvertibleMaps) {
  std::mt19937 rng(9);
  HopfAlgebraData H = group_algebra(3);
  const Coalgebra c = coalgebra_of(H);
  const Algebra a = algebra_of(H);
  for (int t = 0; t < 5; ++t) {
    // maps H -> H that are nonzero on each grouplike are invertible; a unit times a grouplike shift
    LinMap f = LinMap::from_columns({H.space}, {H.space}, [&](std::uint64_t g) {
      return Terms{{(g * 2) % 3, Scalar(static_cast<long long>(rng() % 5) + 1)}};
    });
    LinMap inv = convolution_inverse(f, c, a);
    EXPECT_EQ(convolve(f, inv, c, a), convolution_unit(c, a));
    EXPECT_EQ(convolve(inv, f, c, a), convolution_unit(c, a));
  }
  LinMap zero = LinMap::zero({H.space}, {H.space});
  try {
    convolution_inverse(zero, c, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConvolutionInvertible);
  }
}

TEST(Morphisms, CounitIsABialgebraMapToTheGroundField) {
  HopfAlgebraData H = radford({2, 1, 2, 1}).H;
  BiunitalPair k = unit_pair("k");
  MorphismClass c = classify_morphism(H.eps.relabel({H.space}, {k.space}), H, k);
  EXPECT_TRUE(c.is_algebra_morphism);
  EXPECT_TRUE(c.is_coalgebra_morphism);
}

TEST(Morphisms, ScalingIsNeitherMorphism) {
  HopfAlgebraData H = group_algebra(2);
  MorphismClass c = classify_morphism(H.id() * Scalar(2), H, H);
  EXPECT_FALSE(c.is_algebra_morphism);
  EXPECT_FALSE(c.is_coalgebra_morphism);
  EXPECT_FALSE(morphism_report(H.id() * Scalar(2), H, H).pass());
}

TEST(Actions, RegularActionAndCoaction) {
  HopfAlgebraData H = group_algebra(4);
  EXPECT_TRUE(check_action(ActionData{H.space, H, H.m}, ActionKind::ModuleLeft).pass());
  EXPECT_TRUE(check_action(ActionData{H.space, H, H.m}, ActionKind::ModuleRight).pass());
  EXPECT_TRUE(check_action(ActionData{H.space, H, H.delta}, ActionKind::ComoduleLeft).pass());
  CheckReport bad = check_action(ActionData{H.space, H, H.m * Scalar(2)}, ActionKind::ModuleLeft);
  EXPECT_FALSE(bad.pass());
}

TEST(CrossedModules, SweedlerFactorsAreCrossedModules) {
  DoubleBiproductInput in = sweedler_crossed_modules(2);
  EXPECT_TRUE(check_crossed_module(in.B.space, in.B_action, in.B_coaction, in.H, Side::Right).pass());
  EXPECT_TRUE(check_crossed_module(in.C.space, in.C_action, in.C_coaction, in.H, Side::Left).pass());
}

TEST(CrossedModules, MismatchedGradingFails) {
  // g swaps the two homogeneous components, so the action does not preserve degree
  HopfAlgebraData H = group_algebra(2);
  const SpaceLabel X{"X", 2};
  LinMap act = LinMap::from_columns(SpaceList{X, H.space}, {X}, [](std::uint64_t c) {
    return (c % 2) ? Terms{{1 - c / 2, 1}} : Terms{{c / 2, 1}};
  });
  LinMap coact = LinMap::from_columns({X}, SpaceList{X, H.space}, [](std::uint64_t x) {
    return Terms{{x * 2 + x, 1}};
  });
  EXPECT_FALSE(check_crossed_module(X, act, coact, H, Side::Right).pass());
}
