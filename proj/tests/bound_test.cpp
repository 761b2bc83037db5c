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

#include "sgl/exact.hpp"

namespace sgl {
namespace {

TEST(BoundFixedPoint, HeadlineParameters) {
  const BoundSolution s = BoundFixedPoint({0.4, 0.4});
  EXPECT_EQ(s.quadratic.a, 6);
  EXPECT_EQ(s.quadratic.b, -2.3984);
  EXPECT_EQ(s.quadratic.c, -0.336);
  EXPECT_GE(s.c, 0.5096);
  EXPECT_LE(s.c, 0.5097);
  EXPECT_NEAR(s.c, 0.5096192848, 1e-9);
  EXPECT_NEAR(s.quadratic(s.c), 0, 1e-12);
}

TEST(BoundFixedPoint, SmallPLimitIsOneHalf) {
  for (double q : {0.01, 0.4, 0.99}) {
    const BoundSolution s = BoundFixedPoint({1e-15, q});
    EXPECT_NEAR(s.c, 0.5, 1e-12) << q;
  }
}

TEST(BoundFixedPoint, RootIsFixedPointOfRatioBound) {
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j < 10; ++j) {
      const BoundSolution s = BoundFixedPoint({i / 10.0, j / 10.0});
      EXPECT_GT(s.c, 0);
      EXPECT_LE(s.c, 1);
      EXPECT_NEAR(RatioLowerBound(s.p, s.q, s.c), s.c, 1e-12);
    }
  }
}

TEST(BoundFixedPoint, RejectsOutOfRange) {
  for (auto [p, q] : {std::pair{0.0, 0.5}, {1.1, 0.5}, {0.5, 0.0}, {0.5, 1.0}, {NAN, 0.5}}) {
    try {
      BoundFixedPoint({p, q});
      ADD_FAILURE() << p << "," << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kOutOfRange);
    }
  }
}

TEST(BoundGridSearch, Resolution100) {
  const BoundSolution s = BoundGridSearch(100);
  EXPECT_GE(s.c, 0.5096);
  EXPECT_NEAR(s.p, 0.4, 0.05);
  EXPECT_NEAR(s.q, 0.4, 0.05);
}

TEST(BoundGridSearch, Resolution2IsSinglePoint) {
  const BoundSolution s = BoundGridSearch(2);
  EXPECT_EQ(s.p, 0.5);
  EXPECT_EQ(s.q, 0.5);
  EXPECT_EQ(s.c, BoundFixedPoint({0.5, 0.5}).c);
  EXPECT_THROW(BoundGridSearch(1), Error);
}

}  // namespace
}  // namespace sgl
