// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <cmath>

#include "pfim/bounds.hpp"

namespace pfim {
namespace {

TEST(BoundTest, UniformValues) {
  EXPECT_NEAR(bound_uniform(1.0), 1.0 - std::exp(-1.0), 1e-12);
  EXPECT_NEAR(bound_uniform(1.0), 0.6321206, 5e-8);
  EXPECT_EQ(bound_uniform(0.0), 0.0);
  EXPECT_NEAR(bound_uniform(0.5), 0.4323324, 5e-8);
}

TEST(BoundTest, UniformIsIncreasing) {
  double previous = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    const double b = bound_uniform(k / 1000.0);
    ASSERT_GT(b, previous);
    previous = b;
  }
}

TEST(BoundTest, NonUniformValues) {
  EXPECT_EQ(bound_nonuniform(0.7, 5.0, 5.0), 0.0);
  EXPECT_NEAR(bound_nonuniform(1.0, 10.0, 2.0), 0.5506710, 5e-8);
  EXPECT_NEAR(bound_nonuniform(0.6, 1e9, 1e-9), bound_uniform(0.6), 1e-12);
}

TEST(BoundTest, EnhancedValues) {
  EXPECT_NEAR(bound_enhanced(1.0), (1.0 - std::exp(-1.0)) / 2, 1e-12);
  EXPECT_NEAR(bound_enhanced(1.0), 0.3160603, 5e-8);
  EXPECT_EQ(bound_enhanced(0.0), 0.0);
  for (double a : {0.1, 0.25, 0.5, 0.9}) EXPECT_EQ(bound_enhanced(a), bound_uniform(a) / 2);
}

TEST(BoundTest, UniformEpsilon) {
  BoundValue b = bound_uniform_eps(1.0, 0.1, 100, 50);
  const double expected = (1 / 1.1) * (1 - std::exp(-0.9)) * 50 - (0.2 / 1.1) * 100;
  EXPECT_NEAR(b.value, expected, 1e-12);
  EXPECT_NEAR(b.value, 8.792288, 5e-7);
  EXPECT_FALSE(b.vacuous());
  BoundValue bad = bound_uniform_eps(1.0, 0.5, 100, 50);
  EXPECT_LT(bad.value, 0.0);
  EXPECT_TRUE(bad.vacuous());
}

TEST(BoundTest, EpsilonZeroReducesToPlainForms) {
  for (double a : {0.2, 0.5, 0.8, 1.0}) {
    EXPECT_NEAR(bound_uniform_eps(a, 0.0, 40, 7.5).value, bound_uniform(a) * 7.5, 1e-12);
    EXPECT_NEAR(bound_nonuniform_eps(a, 0.0, 40, 12, 3, 0.5, 7.5).value,
                bound_nonuniform(a, 12, 3) * 7.5, 1e-12);
    EXPECT_NEAR(bound_enhanced_eps(a, 0.0, 40, 12, 0.5, 7.5).value,
                bound_uniform(a) * 7.5 / 2, 1e-12);
  }
  EXPECT_NEAR(bound_nonuniform_eps(1.0, 0.0, 99, 20, 4, 1, 10).value,
              (1 - std::exp(-16.0 / 20.0)) * 10, 1e-12);
}

TEST(BoundTest, NonUniformEpsilonPenalty) {
  const double a = 0.6, e = 0.05, n = 30, B = 8, cmax = 2, cmin = 0.5, f = 20;
  const double expected = (a / (1 + e)) * (1 - std::exp(-((1 - e) / a) * (B - cmax) / B)) * f -
                          (2 * e / (1 + e)) * (1 / cmin + 1) * n * B;
  EXPECT_NEAR(bound_nonuniform_eps(a, e, n, B, cmax, cmin, f).value, expected, 1e-9);
}

TEST(BoundTest, EnhancedEpsilonAlphaZeroIsNotPositive) {
  EXPECT_LE(bound_enhanced_eps(0.0, 0.0, 10, 5, 1, 4).value, 0.0);
  EXPECT_LE(bound_enhanced_eps(0.0, 0.2, 10, 5, 1, 4).value, 0.0);
}

// Past the point where the bound turns negative, the (1-eps)/(1+eps) prefactor
// shrinks a negative quantity and the curve rises again towards zero, so the
// sweep covers the informative region only.
TEST(BoundTest, EnhancedEpsilonNonIncreasingWhileInformative) {
  for (double a : {0.3, 0.7, 1.0}) {
    double previous = bound_enhanced_eps(a, 0.0, 50, 10, 1, 400).value;
    for (int k = 1; k <= 1000; ++k) {
      const double b = bound_enhanced_eps(a, k * 1e-5, 50, 10, 1, 400).value;
      if (b < 0.0) break;
      ASSERT_LE(b, previous + 1e-12) << "alpha " << a << " step " << k;
      previous = b;
    }
  }
}

}  // namespace
}  // namespace pfim
