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
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sgl/builders.hpp"
#include "sgl/exact.hpp"

namespace sgl {
namespace {

TEST(Instance7_12, Shape) {
  const Instance inst = BuildInstance7_12();
  EXPECT_EQ(inst.name(), "7-12");
  const auto& m = inst.matroid();
  ASSERT_EQ(m.part_count(), 3u);
  const char* letters = "xyz";
  for (std::size_t p = 0; p < 3; ++p) {
    ASSERT_EQ(m.part(p).size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(m.element_name(m.part(p)[k]), std::string(1, letters[p]) + std::to_string(k + 1));
    }
  }
  EXPECT_EQ(inst.Evaluate(inst.Set(m.element_names())), 12);
}

TEST(Instance19_33, Shape) {
  const Instance inst = BuildInstance19_33();
  const auto& m = inst.matroid();
  EXPECT_EQ(m.ground_size(), 32u);
  ASSERT_EQ(m.part_count(), 4u);
  std::size_t o = 0, x = 0, y = 0, z = 0;
  for (const auto& name : m.element_names()) {
    o += name[0] == 'o';
    x += name[0] == 'x';
    y += name[0] == 'y';
    z += name[0] == 'z';
  }
  EXPECT_EQ(o, 4u);
  EXPECT_EQ(x, 4u);
  EXPECT_EQ(y, 12u);
  EXPECT_EQ(z, 12u);
  for (std::size_t p = 0; p < 4; ++p) {
    EXPECT_EQ(m.part(p).size(), 8u);
    const std::string last = std::to_string(p + 1);
    for (std::size_t e : m.part(p)) {
      const auto& name = m.element_name(e);
      EXPECT_EQ(name.substr(name.size() - 1), last) << name;
    }
  }
  const auto cov = std::dynamic_pointer_cast<const WeightedCoverageOracle>(inst.oracle());
  ASSERT_TRUE(cov);
  EXPECT_EQ(cov->point_count(), 28u);
  EXPECT_EQ(cov->total_weight(), 264);
}

TEST(Instance19_33, UnorderedFirstPair) {
  EXPECT_EQ(ZElementName(3, 2, 1), "z231");
  EXPECT_EQ(ZElementName(2, 3, 1), "z231");
  EXPECT_EQ(ZElementName(1, 2, 3), "z123");
  EXPECT_TRUE(BuildInstance19_33().matroid().FindElement("z231").has_value());
  EXPECT_FALSE(BuildInstance19_33().matroid().FindElement("z321").has_value());
}

TEST(ReduceSwm, Shape) {
  const SwmInstance swm = RandomSwmInstance({.items = 3, .bidders = 2, .seed = 1});
  const Instance inst = ReduceSwm(swm);
  EXPECT_EQ(inst.ground_size(), 6u);
  ASSERT_EQ(inst.part_count(), 3u);
  for (std::size_t p = 0; p < 3; ++p) {
    EXPECT_EQ(inst.matroid().part_name(p), swm.items[p]);
    EXPECT_EQ(inst.matroid().part(p).size(), 2u);
  }
  EXPECT_EQ(inst.matroid().element_name(1), "item1@bidder2");
  EXPECT_TRUE(inst.swm_origin().has_value());
}

TEST(ReduceSwm, Singleton) {
  const SwmInstance swm = RandomSwmInstance({.items = 1, .bidders = 1, .universe_size = 3, .seed = 6});
  const Instance inst = ReduceSwm(swm);
  EXPECT_EQ(inst.ground_size(), 1u);
  EXPECT_EQ(inst.Evaluate({"item1@bidder1"}), swm.bidders[0].utility->Evaluate(ElementSet::Full(1)));
}

TEST(ExtendWithDummies, KeepsValues) {
  const Instance base = BuildInstance7_12();
  const Instance ext = ExtendWithDummies(base, 2);
  EXPECT_EQ(ext.part_count(), 5u);
  EXPECT_EQ(ext.matroid().part_name(3), "dummy#1");
  EXPECT_EQ(BruteForceOpt(ext).value, 12);
  SplitMix64 rng(3);
  const auto& m = ext.matroid();
  const ElementSet dummies = ext.Set({"dummy#1", "dummy#2"});
  for (int t = 0; t < 200; ++t) {
    ElementSet s = m.EmptySet();
    for (std::size_t e = 0; e < m.ground_size(); ++e) {
      if (rng.Coin()) s.insert(e);
    }
    EXPECT_EQ(ext.Evaluate(s | dummies), ext.Evaluate(s - dummies));
  }
  EXPECT_EQ(ExtendWithDummies(base, 0).name(), base.name());
}

TEST(ExtendWithDummies, ExpectedFinalUnchanged) {
  const Instance base = BuildInstance7_12();
  const double expected = ExactExpectedValues(base, TieBreakPolicy::LastIndex()).expected_final;
  for (std::size_t d : {1u, 2u}) {
    const auto r = ExactExpectedValues(ExtendWithDummies(base, d), TieBreakPolicy::LastIndex());
    EXPECT_EQ(r.expected_final, expected);
    EXPECT_EQ(r.runs, d == 1 ? 24u : 120u);
  }
}

TEST(ExtendWithDummies, NonCoverageFallsBackToPadding) {
  const Instance inst = Instance::Make("fn", PartitionMatroid::Make({{"P", {"a", "b"}}}),
                                       std::make_shared<const FunctionOracle>(
                                           2, [](const ElementSet& s) { return std::sqrt(1.0 * s.size()); }));
  const Instance ext = ExtendWithDummies(inst, 1);
  EXPECT_EQ(ext.oracle()->kind(), OracleKind::kDummyPadded);
  EXPECT_EQ(ext.Evaluate({"a", "dummy#1"}), 1);
}

TEST(ComposeCopies, SevenTwelfthsSurvives) {
  const Instance base = BuildInstance7_12();
  const Instance two = ComposeCopies(base, 2);
  EXPECT_EQ(two.part_count(), 6u);
  EXPECT_EQ(two.matroid().part_name(3), "P_x#2");
  EXPECT_EQ(BruteForceOpt(two).value, 24);
  const auto r = ExactExpectedValues(two, TieBreakPolicy::LastIndex());
  EXPECT_EQ(r.runs, 720u);
  EXPECT_EQ(r.min_final, 14);
  EXPECT_EQ(r.max_final, 14);
  EXPECT_EQ(r.exact_ratio->ToString(), "7/12");
}

TEST(ComposeCopies, ValueAdditive) {
  const Instance base = RandomCoverageInstance({.parts = 2, .part_size = 3, .universe_size = 6, .seed = 12});
  const Instance three = ComposeCopies(base, 3);
  const std::size_t n = base.ground_size();
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    ElementSet s = three.matroid().EmptySet();
    for (std::size_t e = 0; e < three.ground_size(); ++e) {
      if (rng.Coin()) s.insert(e);
    }
    double sum = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      ElementSet block = base.matroid().EmptySet();
      for (std::size_t e = 0; e < n; ++e) {
        if (s.contains(c * n + e)) block.insert(e);
      }
      sum += base.Evaluate(block);
    }
    EXPECT_EQ(three.Evaluate(s), sum);
  }
}

TEST(ComposeCopies, OneCopyIsIsomorphic) {
  const Instance base = BuildInstance7_12();
  const Instance one = ComposeCopies(base, 1);
  ASSERT_EQ(one.ground_size(), base.ground_size());
  EXPECT_EQ(one.matroid().element_name(0), "x1#1");
  std::vector<std::string> names;
  for (const auto& n : base.matroid().element_names()) names.push_back(n + "#1");
  EXPECT_EQ(one.matroid().element_names(), names);
  EXPECT_EQ(BruteForceOpt(one).value, 12);
  EXPECT_THROW(ComposeCopies(base, 0), Error);
}

TEST(RandomCoverageInstance, Reproducible) {
  const RandomCoverageOptions opt{.parts = 4, .part_size = 3, .universe_size = 7, .max_weight = 9, .seed = 31};
  const Instance a = RandomCoverageInstance(opt);
  const Instance b = RandomCoverageInstance(opt);
  EXPECT_EQ(DescribeCoverage(a), DescribeCoverage(b));
  auto other = opt;
  other.seed = 32;
  EXPECT_NE(DescribeCoverage(a), DescribeCoverage(RandomCoverageInstance(other)));
  EXPECT_THROW(RandomCoverageInstance({.parts = 0}), Error);
}

TEST(CoverageBuilder, RejectsUnknownPoint) {
  CoverageSpec spec{"bad", {{"p", 1}}, {{"P", {{"a", {"q"}}}}}};
  try {
    BuildCoverageInstance(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariantViolation);
  }
}

}  // namespace
}  // namespace sgl
