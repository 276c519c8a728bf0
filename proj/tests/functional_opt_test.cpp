// Copyright 2026 The nlqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlqubit/optimize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nlqubit/integrate.hpp"

namespace nlqubit {
namespace {

TEST(ClassifyTest, NamedCorners) {
  EXPECT_EQ(classify({1.0, 1.0, {1.0, 0.0}}), Regime::identity);
  EXPECT_EQ(classify({1.0, 1.0, {-1.0, 0.0}}), Regime::pi_rotation);
  EXPECT_EQ(classify({0.0, 0.0, {}}), Regime::bit_flip);
  EXPECT_EQ(classify({1.0, 1.0, std::polar(1.0, 0.7)}), Regime::chi_rotation);
  EXPECT_EQ(classify({1.0, 1.0, {0.5, 0.0}}), Regime::boundary_mixed);
  EXPECT_EQ(classify({0.4, 1.0, {0.3, 0.0}}), Regime::boundary_mixed);
  EXPECT_EQ(classify({1.0 - 1e-10, 1.0, {1.0, 0.0}}), Regime::identity);
}

TEST(MaximizeTest, IdentityMapPrefersIdentity) {
  const Optimum o = maximize(extract_functional(TargetMap::identity(), QuadratureSpec{}));
  EXPECT_NEAR(o.value, 1.0, 1e-12);
  EXPECT_EQ(o.regime, Regime::identity);
}

TEST(MaximizeTest, NegativeCoefficientsPreferBitFlip) {
  const Optimum o = maximize({0.5, -0.2, -0.3, {0.1, 0.0}});
  EXPECT_EQ(o.regime, Regime::bit_flip);
  EXPECT_DOUBLE_EQ(o.value, 0.5);
  EXPECT_EQ(o.chi, 0.0);
}

TEST(MaximizeTest, InteriorFaceOptimum) {
  // Face x = 1: gain(s) = X + Y s^2 + 2|W| s with Y < 0 peaks at s = |W|/|Y|.
  const FidelityFunctional f{0.2, 0.3, -0.5, {0.2, 0.0}};
  const Optimum o = maximize(f);
  EXPECT_DOUBLE_EQ(o.best.x, 1.0);
  EXPECT_NEAR(o.best.y, 0.16, 1e-15);
  EXPECT_NEAR(o.value, 0.2 + 0.3 - 0.5 * 0.16 + 2.0 * 0.2 * 0.4, 1e-15);
  EXPECT_EQ(o.regime, Regime::boundary_mixed);
}

TEST(MaximizeTest, PhaseAlignsWithW) {
  const FidelityFunctional f{0.1, 0.2, 0.2, std::polar(0.15, -0.9)};
  const Optimum o = maximize(f);
  EXPECT_EQ(o.regime, Regime::chi_rotation);
  EXPECT_NEAR(o.chi, 0.9, 1e-14);
  EXPECT_NEAR(o.value, 0.1 + 0.4 + 0.3, 1e-14);
  EXPECT_NEAR(optimal_chi(f), 0.9, 1e-14);
}

TEST(MaximizeTest, TiesGoToSmallerSupport) {
  // Degenerate: every point of the face has the same value as the origin.
  const Optimum o = maximize({0.5, 0.0, 0.0, {}});
  EXPECT_EQ(o.regime, Regime::bit_flip);
  EXPECT_DOUBLE_EQ(o.value, 0.5);
}

TEST(MaximizeTest, BoundaryOptimumForGeneralMap) {
  // Past the departure angle the optimum sits at an interior point of a face.
  const Optimum o = maximize(general_coefficients(1.0));
  EXPECT_EQ(o.regime, Regime::boundary_mixed);
  EXPECT_GT(o.value, std::pow(std::cos(0.5), 2) + 1e-4);
  const Optimum below = maximize(general_coefficients(0.6));
  EXPECT_EQ(below.regime, Regime::identity);
  EXPECT_NEAR(below.value, std::pow(std::cos(0.3), 2), 1e-14);
}

TEST(OptimalChiTest, RequiresFullCorner) {
  EXPECT_THROW(optimal_chi({0.5, -0.2, -0.3, {0.1, 0.0}}), std::domain_error);
  EXPECT_NEAR(optimal_chi({0.1, 0.2, 0.2, {-0.1, 0.0}}), kPi, 1e-15);
  EXPECT_NEAR(optimal_chi({0.1, 0.2, 0.2, {}}), 0.0, 1e-15);
}

TEST(BruteForceTest, AgreesOnKnownCase) {
  const FidelityFunctional f{0.2, 0.3, -0.5, {0.2, 0.0}};
  EXPECT_NEAR(brute_force(f, 101).value, maximize(f).value, 1e-6);
  EXPECT_THROW(brute_force(f, 10), std::invalid_argument);
}

TEST(FindTransitionTest, LocatesBoundary) {
  const auto x = find_transition([](double t) { return t < 0.123456; }, 0.0, 1.0);
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR(*x, 0.123456, 1e-9);
  EXPECT_FALSE(find_transition([](double) { return true; }, 0.0, 1.0).has_value());
}

TEST(FindCrossoverTest, SignChangeAndThreshold) {
  const auto cross = find_crossover([](double t) { return std::cos(t); },
                                    [](double t) { return std::sin(t); }, 0.0, 1.5);
  ASSERT_TRUE(cross.has_value());
  EXPECT_NEAR(*cross, 0.25 * kPi, 1e-9);
  // f touches g on [0, 0.5] and departs afterwards.
  auto f = [](double t) { return t > 0.5 ? (t - 0.5) * (t - 0.5) : 0.0; };
  auto g = [](double) { return 0.0; };
  const auto departure = find_crossover(f, g, 0.0, 1.0, 1e-12);
  ASSERT_TRUE(departure.has_value());
  EXPECT_NEAR(*departure, 0.5, 1e-5);
}

TEST(FindCrossoverTest, NonFiniteDifferenceThrows) {
  EXPECT_THROW(find_crossover([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                              [](double) { return 0.0; }, 0.0, 1.0),
               NumericalError);
}

}  // namespace
}  // namespace nlqubit
