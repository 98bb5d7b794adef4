#include <gtest/gtest.h>

#include "fblow/errors.hpp"
#include "fblow/fan.hpp"
#include "fan_check.hpp"

using namespace fblow;

namespace {

struct Case {
  std::vector<oracle::Vec> gens;
  Int p;
};

AffineMonoid make(const std::vector<oracle::Vec>& gens) {
  std::vector<LatticeVector> lv;
  for (const auto& g : gens) lv.emplace_back(g);
  return AffineMonoid(2, lv);
}

void expect_matches_sweep(const Case& c) {
  const AffineMonoid A = make(c.gens);
  const ChamberFan fan = compute_fan(A, FrobeniusLevel(c.p, 1));
  EXPECT_EQ(oracle::compare_with_sweep(A, c.p, fan, 5), "");
}

}  // namespace

TEST(Fan, NumericalSemigroupHasOneChamber) {
  auto fan = compute_fan(AffineMonoid::numerical({8, 9, 10, 11}), FrobeniusLevel(2, 2));
  ASSERT_EQ(fan.chambers.size(), 1u);
  EXPECT_TRUE(fan.certified);
  EXPECT_EQ(fan.chambers[0].chart.generators, (std::vector<LatticeVector>{{2}, {3}}));
}

TEST(Fan, RationalNormalConeMatchesSweep) {
  expect_matches_sweep({{{1, 0}, {1, 1}, {1, 2}}, 2});
  expect_matches_sweep({{{1, 0}, {1, 1}, {1, 2}}, 3});
}

TEST(Fan, PinchPointMatchesSweep) {
  expect_matches_sweep({{{1, 0}, {1, 1}, {0, 2}}, 2});
  expect_matches_sweep({{{1, 0}, {1, 1}, {0, 2}}, 3});
}

TEST(Fan, FurtherPlanarMonoidsMatchSweep) {
  expect_matches_sweep({{{2, 1}, {1, 2}, {1, 1}}, 2});
  expect_matches_sweep({{{1, 0}, {1, 1}, {1, 2}, {1, 3}}, 2});
  expect_matches_sweep({{{1, 0}, {2, 1}, {0, 3}, {1, 1}}, 3});
}

TEST(Fan, InteriorSamplesReproduceStandardSet) {
  AffineMonoid A(2, {{1, 0}, {1, 1}, {0, 2}});
  auto fan = compute_fan(A, FrobeniusLevel(3, 1));
  for (const auto& ch : fan.chambers) {
    auto samples = interior_samples(ch, 5);
    ASSERT_EQ(samples.size(), 5u);
    for (const auto& w : samples) {
      EXPECT_TRUE(ch.cone.strictly_contains(w.covector));
      auto expected = oracle::standard_set(oracle::gens_of(A), 3, w.covector.coords());
      ASSERT_TRUE(expected);
      EXPECT_EQ(ch.standard.elements(), oracle::to_lattice(*expected));
    }
  }
}

TEST(Fan, ChamberAtContainsItsWeight) {
  AffineMonoid A(2, {{1, 0}, {1, 1}, {1, 2}});
  Weight w{LatticeVector{5, 1}};
  Chamber c = chamber_at(A, FrobeniusLevel(2, 1), w);
  EXPECT_TRUE(c.cone.strictly_contains(w.covector));
}

TEST(Fan, ThreeDimensionsUnsupported) {
  AffineMonoid A(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(compute_fan(A, FrobeniusLevel(2, 1)), DimensionUnsupported);
}

TEST(Domination, OcticSemigroupFailsAtFirstStep) {
  auto A = AffineMonoid::numerical({8, 9, 10, 11});
  auto f1 = compute_fan(A, FrobeniusLevel(2, 1));
  auto f2 = compute_fan(A, FrobeniusLevel(2, 2));
  auto v = dominates(f2, f1);
  EXPECT_FALSE(v.value);
  EXPECT_TRUE(v.certified);
  ASSERT_TRUE(v.missing_generator);
  EXPECT_EQ(*v.missing_generator, LatticeVector{1});
  EXPECT_TRUE(dominates(f1, f1).value);
  EXPECT_TRUE(refines(f2, f1));
}

TEST(Domination, PlanarRefinement) {
  AffineMonoid A(2, {{1, 0}, {1, 1}, {1, 2}});
  auto f1 = compute_fan(A, FrobeniusLevel(2, 1));
  auto f2 = compute_fan(A, FrobeniusLevel(2, 2));
  EXPECT_TRUE(refines(f2, f1));
  EXPECT_TRUE(dominates(f2, f1).value);
}

TEST(Domination, UncertifiedFanRejected) {
  auto A = AffineMonoid::numerical({2, 3});
  auto f1 = compute_fan(A, FrobeniusLevel(2, 1));
  auto f2 = f1;
  f2.certified = false;
  EXPECT_THROW(dominates(f2, f1), UncertifiedInput);
  EXPECT_THROW(refines(f2, f1), UncertifiedInput);
}
