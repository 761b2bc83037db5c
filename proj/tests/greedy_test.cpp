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

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sgl/builders.hpp"
#include "sgl/exact.hpp"
#include "sgl/greedy.hpp"

namespace sgl {
namespace {

std::vector<std::string> Picks(const Instance& inst, const GreedyTrace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) out.push_back(inst.matroid().element_name(s.element));
  return out;
}

std::vector<double> Gains(const GreedyTrace& t) {
  std::vector<double> out;
  for (const auto& s : t.steps) out.push_back(s.gain);
  return out;
}

const TieBreakPolicy kZBeforeYTie = TieBreakPolicy::Parse("priority:x*,z*,y*,o*");

TEST(Greedy, SevenTwelfthsLastIndex) {
  const Instance inst = BuildInstance7_12();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2}), TieBreakPolicy::LastIndex());
  EXPECT_EQ(Picks(inst, t), (std::vector<std::string>{"x2", "y3", "z4"}));
  EXPECT_EQ(Gains(t), (std::vector<double>{4, 2, 1}));
  EXPECT_EQ(t.final_value, 7);
  EXPECT_EQ(t.PrefixValues(), (std::vector<double>{0, 4, 6, 7}));
}

TEST(Greedy, SevenTwelfthsFirstNameFindsOptimum) {
  const Instance inst = BuildInstance7_12();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2}), TieBreakPolicy::FirstName());
  EXPECT_EQ(Picks(inst, t), (std::vector<std::string>{"x1", "y1", "z1"}));
  EXPECT_EQ(t.final_value, 12);
}

TEST(Greedy, NineteenThirtyThirdsPriorityOrderOneToFour) {
  const Instance inst = BuildInstance19_33();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2, 3}), kZBeforeYTie);
  EXPECT_EQ(Picks(inst, t), (std::vector<std::string>{"x1", "y12", "z123", "x4"}));
  EXPECT_EQ(Gains(t), (std::vector<double>{66, 44, 28, 14}));
  EXPECT_EQ(t.final_value, 152);
  // o4 has the same final gain, so {x1,y12,z123,o4} is worth the same.
  EXPECT_EQ(inst.Evaluate({"x1", "y12", "z123", "o4"}), 152);
}

// With y ranked above z the third step takes y43 instead, which ends far
// above 152.
TEST(Greedy, NineteenThirtyThirdsLetterOrderMatters) {
  const Instance inst = BuildInstance19_33();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2, 3}),
                                   TieBreakPolicy::Parse("priority:x*,y*,z*,o*"));
  EXPECT_EQ(inst.matroid().element_name(t.steps[2].element), "y43");
  EXPECT_EQ(t.final_value, 166);
}

TEST(Greedy, SinglePartTakesBestElement) {
  const Instance inst = Instance::Make(
      "one", PartitionMatroid::Make({{"P", {"a", "b", "c"}}}),
      std::make_shared<const ModularOracle>(std::vector<double>{1, 5, 3}));
  const auto t = RandomOrderGreedy(inst, PermutationSource::Uniform(9), TieBreakPolicy::FirstName());
  EXPECT_EQ(Picks(inst, t), std::vector<std::string>{"b"});
  EXPECT_EQ(t.final_value, 5);
  EXPECT_EQ(t.steps[0].tied, 1u);
}

TEST(TieBreakPolicy, ParseAndPrint) {
  for (const char* text : {"first-name", "last-index", "priority:x*,z*,y*,o*", "random:17", "priority:b,a"}) {
    EXPECT_EQ(TieBreakPolicy::Parse(text).ToString(), text);
  }
  EXPECT_EQ(TieBreakPolicy::Parse("random").ToString(), "random:0");
  EXPECT_TRUE(TieBreakPolicy::LastIndex().deterministic());
  EXPECT_FALSE(TieBreakPolicy::SeededRandom(1).deterministic());
  EXPECT_THROW(TieBreakPolicy::Parse("biggest"), Error);
  EXPECT_THROW(TieBreakPolicy::Parse("priority:"), Error);
  EXPECT_THROW(TieBreakPolicy::Parse("random:abc"), Error);
}

TEST(TieBreakPolicy, Rules) {
  const auto m = PartitionMatroid::Make({{"P", {"b", "c", "a"}}});
  const std::vector<std::size_t> all{0, 1, 2};
  auto choose = [&](const TieBreakPolicy& p, std::vector<std::size_t> tied) {
    TieBreaker t(p, m);
    return m.element_name(t.Choose(tied));
  };
  EXPECT_EQ(choose(TieBreakPolicy::FirstName(), all), "a");
  EXPECT_EQ(choose(TieBreakPolicy::LastIndex(), all), "a");
  EXPECT_EQ(choose(TieBreakPolicy::LastIndex(), {0, 1}), "c");
  EXPECT_EQ(choose(TieBreakPolicy::Parse("priority:c"), all), "c");
  // Unlisted names fall back to name order after the listed ones.
  EXPECT_EQ(choose(TieBreakPolicy::Parse("priority:z*"), {0, 1}), "b");
  EXPECT_EQ(choose(TieBreakPolicy::Parse("priority:c*,b*"), {0, 2}), "b");
}

TEST(TieBreakPolicy, RandomIsSeededAndCoversAllCandidates) {
  const auto m = PartitionMatroid::Make({{"P", {"a", "b", "c"}}});
  const std::vector<std::size_t> all{0, 1, 2};
  std::vector<int> hits(3);
  for (std::uint64_t stream = 0; stream < 300; ++stream) {
    TieBreaker a(TieBreakPolicy::SeededRandom(4), m, stream);
    TieBreaker b(TieBreakPolicy::SeededRandom(4), m, stream);
    const std::size_t pick = a.Choose(all);
    EXPECT_EQ(pick, b.Choose(all));
    ++hits[pick];
  }
  for (int h : hits) EXPECT_GT(h, 50);
}

TEST(PermutationSource, ExplicitAndUniform) {
  EXPECT_EQ(PermutationSource::Explicit({2, 0, 1}).Resolve(3), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_THROW(PermutationSource::Explicit({0, 0, 1}).Resolve(3), Error);
  EXPECT_THROW(PermutationSource::Explicit({0, 1}).Resolve(3), Error);
  EXPECT_EQ(PermutationSource::Uniform(5).Resolve(6), PermutationSource::Uniform(5).Resolve(6));
  auto p = PermutationSource::Uniform(5).Resolve(6);
  std::sort(p.begin(), p.end());
  EXPECT_EQ(p, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(PermutationSource, ByName) {
  const auto m = BuildInstance7_12().matroid();
  const std::vector<std::string> names{"P_z", "P_x", "P_y"};
  EXPECT_EQ(OrderByName(m, names).Resolve(3), (std::vector<std::size_t>{2, 0, 1}));
  const std::vector<std::string> bad{"P_x", "P_y", "P_z", "P_q"};
  try {
    OrderByName(m, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidPermutation);
  }
}

// Uniform permutations hit every order of 3 parts with frequency near 1/6.
TEST(PermutationSource, UniformFrequencies) {
  std::map<std::vector<std::size_t>, int> counts;
  for (std::uint64_t t = 0; t < 6000; ++t) ++counts[UniformPermutation(3, 11, t)];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [order, n] : counts) EXPECT_NEAR(n, 1000, 150);
}

TEST(Greedy, RenderTrace) {
  const Instance inst = BuildInstance7_12();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2}), TieBreakPolicy::LastIndex());
  EXPECT_EQ(RenderTrace(inst, t), "1\tP_x\tx2\t4\t4\n2\tP_y\ty3\t2\t6\n3\tP_z\tz4\t1\t7\n");
}

// Trace invariants and the deterministic half guarantee on seeded random
// instances, over every order.
TEST(Greedy, TraceInvariantsOnRandomInstances) {
  const std::vector<TieBreakPolicy> policies{TieBreakPolicy::FirstName(), TieBreakPolicy::LastIndex(),
                                             TieBreakPolicy::SeededRandom(3)};
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    SplitMix64 rng(seed + 1000);
    const Instance inst = RandomCoverageInstance({.parts = 1 + rng.Bounded(4), .part_size = 1 + rng.Bounded(3),
                                                  .universe_size = 3 + rng.Bounded(6),
                                                  .max_weight = 1 + rng.Bounded(4), .seed = seed});
    const auto& m = inst.matroid();
    const OptResult opt = BruteForceOpt(inst);
    std::vector<std::size_t> order(m.part_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      for (const auto& policy : policies) {
        TieBreaker ties(policy, m);
        const GreedyTrace t = RunGreedy(inst, order, ties);
        ASSERT_TRUE(m.IsBase(t.final_set));
        EXPECT_GE(t.final_value, opt.value / 2 - kValueTolerance);
        double sum = t.initial_value;
        ElementSet prefix = m.EmptySet();
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          const auto& step = t.steps[i];
          EXPECT_EQ(step.part, order[i]);
          EXPECT_EQ(m.part_of(step.element), step.part);
          for (std::size_t v : m.part(step.part)) {
            EXPECT_GE(step.gain, inst.oracle()->Marginal(v, prefix) - kTieTolerance);
          }
          prefix.insert(step.element);
          sum += step.gain;
          EXPECT_NEAR(step.value, sum, 1e-9);
          EXPECT_GE(step.value, (i ? t.steps[i - 1].value : t.initial_value));
        }
        EXPECT_EQ(prefix, t.final_set);
        EXPECT_NEAR(t.final_value, sum, 1e-9);
        // Deterministic policies replay exactly.
        if (policy.deterministic()) {
          TieBreaker again(policy, m);
          EXPECT_EQ(RunGreedy(inst, order, again), t);
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(Potential, SevenTwelfthsAllOrders) {
  const Instance inst = BuildInstance7_12();
  const auto opt = inst.Set({"x1", "y1", "z1"});
  std::vector<std::size_t> order{0, 1, 2};
  do {
    TieBreaker ties(TieBreakPolicy::LastIndex(), inst.matroid());
    const auto t = RunGreedy(inst, order, ties);
    const auto check = CheckPotentialMonotone(inst, t, inst.matroid().EmptySet(), opt);
    EXPECT_TRUE(check.ok());
    EXPECT_EQ(check.potentials.size(), 4u);
    EXPECT_GE(t.final_value, 12.0 / 2);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Potential, SinglePart) {
  const Instance inst = Instance::Make("one", PartitionMatroid::Make({{"P", {"a", "b"}}}),
                                       std::make_shared<const ModularOracle>(std::vector<double>{2, 1}));
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0}), TieBreakPolicy::FirstName());
  EXPECT_TRUE(CheckPotentialMonotone(inst, t, inst.matroid().EmptySet(), inst.Set({"b"})).ok());
}

TEST(Potential, NineteenThirtyThirdsAllOrdersRandomSets) {
  const Instance inst = BuildInstance19_33();
  const auto& m = inst.matroid();
  const auto opt = inst.Set({"o1", "o2", "o3", "o4"});
  SplitMix64 rng(2024);
  std::vector<std::size_t> order{0, 1, 2, 3};
  do {
    TieBreaker ties(kZBeforeYTie, m);
    const auto t = RunGreedy(inst, order, ties);
    EXPECT_TRUE(CheckPotentialMonotone(inst, t, m.EmptySet(), opt).ok());
    for (int k = 0; k < 100; ++k) {
      ElementSet s = m.EmptySet();
      for (std::size_t e = 0; e < m.ground_size(); ++e) {
        if (rng.Coin()) s.insert(e);
      }
      EXPECT_TRUE(CheckPotentialMonotone(inst, t, s, opt).ok());
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Potential, RejectsNonBase) {
  const Instance inst = BuildInstance7_12();
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1, 2}), TieBreakPolicy::LastIndex());
  try {
    CheckPotentialMonotone(inst, t, inst.matroid().EmptySet(), inst.Set({"x1", "y1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotABase);
  }
}

// A set function whose greedy run loses value at some step gets caught.
TEST(Potential, DetectsDrop) {
  // f counts covered elements but a lone "b" is worth 3, overshadowing a
  // pair; not submodular, so the potential can fall.
  const auto m = PartitionMatroid::Make({{"P1", {"a", "b"}}, {"P2", {"c"}}});
  auto f = std::make_shared<const FunctionOracle>(3, [](const ElementSet& s) {
    if (s.contains(1) && !s.contains(2)) return 3.0;
    return static_cast<double>(s.size());
  });
  const Instance inst = Instance::Make("bad", m, f);
  const auto t = RandomOrderGreedy(inst, PermutationSource::Explicit({0, 1}), TieBreakPolicy::FirstName());
  const auto check = CheckPotentialMonotone(inst, t, m.EmptySet(), inst.Set({"a", "c"}));
  EXPECT_FALSE(check.ok());
}

TEST(SwmGreedy, SingleBidderGetsEverything) {
  SwmInstance swm = RandomSwmInstance({.items = 4, .bidders = 1, .universe_size = 5, .seed = 2});
  const auto t = SwmGreedy(swm, PermutationSource::Uniform(1));
  EXPECT_EQ(t.bundles[0].size(), 4u);
  EXPECT_EQ(t.welfare, swm.bidders[0].utility->Evaluate(ElementSet::Full(4)));
}

TEST(SwmGreedy, ModularBiddersTakeTheirBetterItems) {
  const std::vector<std::string> items{"i1", "i2", "i3"};
  auto bidder = [&](std::string name, std::vector<double> weights) {
    std::vector<std::pair<std::string, double>> universe;
    std::map<std::string, std::vector<std::string>> covers;
    for (std::size_t k = 0; k < items.size(); ++k) {
      universe.emplace_back("p" + std::to_string(k), weights[k]);
      covers[items[k]] = {"p" + std::to_string(k)};
    }
    return MakeSwmBidder(std::move(name), items, universe, covers);
  };
  const SwmInstance swm{"modular", items, {bidder("A", {3, 1, 2}), bidder("B", {1, 4, 2})}};
  const auto t = SwmGreedy(swm, PermutationSource::Explicit({2, 0, 1}));
  EXPECT_EQ(t.bundles[0].ToVector(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(t.bundles[1].ToVector(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(t.welfare, 9);
}

TEST(SwmGreedy, StepGainsMatchReducedGreedy) {
  const SwmInstance swm = RandomSwmInstance({.items = 3, .bidders = 3, .universe_size = 4, .seed = 77});
  const Instance reduced = ReduceSwm(swm);
  std::vector<std::string> priority;
  for (const auto& item : swm.items) {
    for (const auto& b : swm.bidders) priority.push_back(item + "@" + b.name);
  }
  std::vector<std::size_t> order{0, 1, 2};
  do {
    const auto direct = SwmGreedy(swm, PermutationSource::Explicit(order));
    const auto via_reduction = RandomOrderGreedy(reduced, PermutationSource::Explicit(order),
                                                TieBreakPolicy::PriorityList(priority));
    ASSERT_EQ(direct.steps.size(), via_reduction.steps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      EXPECT_EQ(direct.steps[i].gain, via_reduction.steps[i].gain);
      EXPECT_EQ(reduced.matroid().element_name(via_reduction.steps[i].element),
                swm.items[direct.steps[i].item] + "@" + swm.bidders[direct.steps[i].bidder].name);
    }
    EXPECT_EQ(direct.welfare, via_reduction.final_value);
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace
}  // namespace sgl
