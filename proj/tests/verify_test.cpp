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
#include <memory>
#include <vector>

#include "sgl/builders.hpp"
#include "sgl/verify.hpp"

namespace sgl {
namespace {

TEST(VerifyProperties, SevenTwelfthsExhaustive) {
  const PropertyReport r = VerifyProperties(*BuildInstance7_12().oracle(), ExhaustiveMode{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.queries, 4096u);
  EXPECT_EQ(r.checked.size(), 5u);
}

TEST(VerifyProperties, ModularExhaustive) {
  const ModularOracle f(std::vector<double>(6, 1.0));
  const PropertyReport r = VerifyProperties(f, ExhaustiveMode{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.queries, 64u);
}

TEST(VerifyProperties, SupermodularPairIsRejected) {
  const FunctionOracle f(2, [](const ElementSet& s) { return s.size() == 2 ? 1.0 : 0.0; });
  const PropertyReport r = VerifyProperties(f, ExhaustiveMode{});
  ASSERT_GE(r.CountViolations(property::kSubmodular), 1u);
  const Violation* v = nullptr;
  for (const auto& x : r.violations) {
    if (x.property == property::kSubmodular) {
      v = &x;
      break;
    }
  }
  ASSERT_NE(v, nullptr);
  ASSERT_EQ(v->witnesses.size(), 3u);
  const ElementSet& s = v->witnesses[0];
  const ElementSet& t = v->witnesses[1];
  const ElementSet& u = v->witnesses[2];
  ASSERT_EQ(u.size(), 1u);
  const std::size_t e = u.ToVector()[0];
  EXPECT_TRUE(s.IsSubsetOf(t));
  EXPECT_FALSE(t.contains(e));
  // The witness really breaks diminishing returns.
  EXPECT_GT(f.Marginal(e, t), f.Marginal(e, s));
  EXPECT_EQ(v->values, (std::vector<double>{f.Marginal(e, s), f.Marginal(e, t)}));
}

TEST(VerifyProperties, NegativeAndDecreasingAreRejected) {
  const FunctionOracle f(2, [](const ElementSet& s) { return s.size() == 1 ? -1.0 : 0.0; });
  const PropertyReport r = VerifyProperties(f, ExhaustiveMode{});
  EXPECT_GE(r.CountViolations(property::kNonNegative), 1u);
  const FunctionOracle g(2, [](const ElementSet& s) { return s.size() == 2 ? 0.0 : 1.0; });
  EXPECT_GE(VerifyProperties(g, ExhaustiveMode{}).CountViolations(property::kMonotone), 1u);
}

TEST(VerifyProperties, ExhaustiveCap) {
  const ModularOracle f(std::vector<double>(17, 1.0));
  try {
    VerifyProperties(f, ExhaustiveMode{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_THROW(VerifyProperties(ModularOracle(std::vector<double>(5, 1.0)), ExhaustiveMode{4}), Error);
}

TEST(VerifyProperties, NineteenThirtyThirdsSampled) {
  const PropertyReport r = VerifyProperties(*BuildInstance19_33().oracle(), SampledMode{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.CountViolations(property::kSamplingBound), 0u);
  bool has_sampling = false;
  for (const auto& name : r.checked) has_sampling = has_sampling || name == property::kSamplingBound;
  EXPECT_TRUE(has_sampling);
}

TEST(VerifyProperties, SampledIsSeedDeterministic) {
  const auto f = BuildInstance19_33().oracle();
  const PropertyReport a = VerifyProperties(*f, SampledMode{.trials = 500, .seed = 3});
  const PropertyReport b = VerifyProperties(*f, SampledMode{.trials = 500, .seed = 3});
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.notes, b.notes);
}

// A set function that loses value when the full ground set is sampled
// rarely: f(S) = 1 only for S = N. Sampling at p gives E = p^n, far below
// the linear bound p * f(N).
TEST(VerifyProperties, SamplingBoundCatchesSupermodularity) {
  const FunctionOracle f(4, [](const ElementSet& s) { return s.size() == 4 ? 1.0 : 0.0; });
  const PropertyReport r = VerifyProperties(f, SampledMode{.trials = 2000, .seed = 1});
  EXPECT_GE(r.CountViolations(property::kSamplingBound), 1u);
}

// Seeded random coverage instances never violate anything.
TEST(VerifyProperties, RandomCoverageInstancesPass) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 rng(seed);
    const Instance inst = RandomCoverageInstance({.parts = 1 + rng.Bounded(4), .part_size = 1 + rng.Bounded(3),
                                                  .universe_size = 2 + rng.Bounded(8),
                                                  .max_weight = 1 + rng.Bounded(9), .seed = seed});
    const PropertyReport r = VerifyProperties(*inst.oracle(), ExhaustiveMode{});
    EXPECT_TRUE(r.ok()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace sgl
