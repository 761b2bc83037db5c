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

#ifndef SGL_BUILDERS_HPP_
#define SGL_BUILDERS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/ground.hpp"
#include "sgl/instance.hpp"
#include "sgl/oracle.hpp"
#include "sgl/random.hpp"

namespace sgl {

// Plain-data description of a weighted coverage instance, in file order.
struct CoverageSpec {
  struct Element {
    std::string name;
    std::vector<std::string> covers;
    friend bool operator==(const Element&, const Element&) = default;
  };
  struct Part {
    std::string name;
    std::vector<Element> elements;
    friend bool operator==(const Part&, const Part&) = default;
  };

  std::string name;
  std::vector<std::pair<std::string, double>> universe;
  std::vector<Part> parts;

  friend bool operator==(const CoverageSpec&, const CoverageSpec&) = default;
};

namespace detail {

struct Universe {
  std::vector<std::string> names;
  std::vector<double> weights;
  std::unordered_map<std::string, std::size_t> index;
};

inline Universe MakeUniverse(const std::vector<std::pair<std::string, double>>& points) {
  Universe u;
  for (const auto& [name, weight] : points) {
    RequireValidName(name, "universe point");
    if (!u.index.emplace(name, u.names.size()).second) {
      throw Error(ErrorKind::kDuplicateName, "universe point '" + name + "' is declared twice");
    }
    u.names.push_back(name);
    u.weights.push_back(weight);
  }
  return u;
}

inline PointSet ResolvePoints(const Universe& u, const std::vector<std::string>& names,
                              const std::string& owner) {
  PointSet s(u.names.size());
  for (const auto& name : names) {
    auto it = u.index.find(name);
    if (it == u.index.end()) {
      throw Error(ErrorKind::kInvariantViolation,
                  "'" + owner + "' covers undeclared universe point '" + name + "'");
    }
    s.insert(it->second);
  }
  return s;
}

}  // namespace detail

// Validates and builds a coverage instance. Throws the partition errors,
// DuplicateName for repeated points, and InvariantViolation for undeclared
// points or negative weights.
inline Instance BuildCoverageInstance(const CoverageSpec& spec) {
  std::vector<PartSpec> parts;
  for (const auto& part : spec.parts) {
    PartSpec ps{part.name, {}};
    for (const auto& e : part.elements) ps.elements.push_back(e.name);
    parts.push_back(std::move(ps));
  }
  PartitionMatroid matroid = PartitionMatroid::Make(std::move(parts));
  const detail::Universe u = detail::MakeUniverse(spec.universe);
  std::vector<PointSet> covers;
  for (const auto& part : spec.parts) {
    for (const auto& e : part.elements) covers.push_back(detail::ResolvePoints(u, e.covers, e.name));
  }
  auto oracle = std::make_shared<const WeightedCoverageOracle>(u.names, u.weights, std::move(covers));
  return Instance::Make(spec.name, std::move(matroid), std::move(oracle));
}

// Inverse of BuildCoverageInstance for instances whose oracle converts to
// coverage (coverage, modular, SWM-composite over coverage bidders).
// Throws InvariantViolation otherwise.
inline CoverageSpec DescribeCoverage(const Instance& instance) {
  std::vector<std::string> bidders;
  if (instance.swm_origin()) {
    for (const auto& b : instance.swm_origin()->bidders) bidders.push_back(b.name);
  }
  const auto cov = ToCoverage(instance.oracle(), instance.matroid().element_names(), bidders);
  if (!cov) {
    throw Error(ErrorKind::kInvariantViolation,
                std::string("oracle kind '") + std::string(OracleKindName(instance.oracle()->kind())) +
                    "' has no coverage form");
  }
  CoverageSpec spec;
  spec.name = instance.name();
  for (std::size_t i = 0; i < cov->point_count(); ++i) {
    spec.universe.emplace_back(cov->point_name(i), cov->weight(i));
  }
  const auto& m = instance.matroid();
  for (std::size_t p = 0; p < m.part_count(); ++p) {
    CoverageSpec::Part part{m.part_name(p), {}};
    for (std::size_t e : m.part(p)) {
      CoverageSpec::Element el{m.element_name(e), {}};
      cov->covers(e).ForEach([&](std::size_t i) { el.covers.push_back(cov->point_name(i)); });
      part.elements.push_back(std::move(el));
    }
    spec.parts.push_back(std::move(part));
  }
  return spec;
}

// Bidder utility as a coverage function over `items`: covers[item] lists
// the universe points the item brings. Items absent from covers bring none.
inline SwmBidder MakeSwmBidder(std::string name, const std::vector<std::string>& items,
                               const std::vector<std::pair<std::string, double>>& universe,
                               const std::map<std::string, std::vector<std::string>>& covers) {
  const detail::Universe u = detail::MakeUniverse(universe);
  std::set<std::string> known(items.begin(), items.end());
  for (const auto& [item, points] : covers) {
    if (!known.count(item)) {
      throw Error(ErrorKind::kInvariantViolation,
                  "bidder '" + name + "' values unknown item '" + item + "'");
    }
  }
  std::vector<PointSet> sets;
  for (const auto& item : items) {
    auto it = covers.find(item);
    sets.push_back(it == covers.end() ? PointSet(u.names.size())
                                      : detail::ResolvePoints(u, it->second, item));
  }
  return {std::move(name),
          std::make_shared<const WeightedCoverageOracle>(u.names, u.weights, std::move(sets))};
}

// Twelve elements in three parts of four over twelve unit-weight points.
// Greedy with last-index ties earns 4 + 2 + 1 = 7 in every arrival order,
// against an optimum of 12 at {x1, y1, z1}.
inline Instance BuildInstance7_12() {
  CoverageSpec spec;
  spec.name = "7-12";
  for (const char* g : {"alpha", "beta", "gamma"}) {
    for (int i = 1; i <= 4; ++i) spec.universe.emplace_back(g + std::to_string(i), 1.0);
  }
  spec.parts = {
      {"P_x",
       {{"x1", {"alpha1", "alpha2", "alpha3", "alpha4"}},
        {"x2", {"beta1", "beta2", "gamma1", "gamma2"}},
        {"x3", {"beta1", "gamma3"}},
        {"x4", {"beta3", "gamma1"}}}},
      {"P_y",
       {{"y1", {"beta1", "beta2", "beta3", "beta4"}},
        {"y2", {"alpha1", "alpha2", "gamma1", "gamma2"}},
        {"y3", {"alpha1", "gamma3"}},
        {"y4", {"alpha3", "gamma1"}}}},
      {"P_z",
       {{"z1", {"gamma1", "gamma2", "gamma3", "gamma4"}},
        {"z2", {"alpha1", "alpha2", "beta1", "beta2"}},
        {"z3", {"alpha1", "beta3"}},
        {"z4", {"alpha3", "beta1"}}}},
  };
  return BuildCoverageInstance(spec);
}

// Canonical name of z_{ijk}: the unordered pair {i, j} is written in
// increasing order, so z_{321} and z_{231} are both "z231".
inline std::string ZElementName(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  return "z" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

// 32 elements in four parts of eight over 28 weighted points a_i..g_i.
// P_i holds o_i, x_i, y_{ji} (j != i) and z_{jki} ({j, k} not containing i).
// The optimum is {o1, o2, o3, o4} at 264; greedy can be steered by ties to
// 152 in every order (priority:x*,z*,y*,o* does so).
inline Instance BuildInstance19_33() {
  constexpr int kIdx[] = {1, 2, 3, 4};
  const std::map<char, double> weight = {{'a', 14}, {'b', 14}, {'c', 8}, {'d', 5},
                                         {'e', 4},  {'f', 7},  {'g', 14}};
  auto pt = [](char letter, int i) { return std::string(1, letter) + std::to_string(i); };

  CoverageSpec spec;
  spec.name = "19-33";
  for (const auto& [letter, w] : weight) {
    for (int i : kIdx) spec.universe.emplace_back(pt(letter, i), w);
  }
  for (int i : kIdx) {
    CoverageSpec::Part part{"P" + std::to_string(i), {}};
    part.elements.push_back({"o" + std::to_string(i), {}});
    for (char l : std::string("abcdefg")) part.elements.back().covers.push_back(pt(l, i));

    part.elements.push_back({"x" + std::to_string(i), {}});
    for (int j : kIdx) {
      if (j == i) continue;
      part.elements.back().covers.push_back(pt('b', j));
      part.elements.back().covers.push_back(pt('c', j));
    }
    // y_{ji} = {c_j, e_i} ∪ {d_k, e_k, f_k : k ∉ {i, j}}.
    for (int j : kIdx) {
      if (j == i) continue;
      CoverageSpec::Element y{"y" + std::to_string(j) + std::to_string(i), {pt('c', j), pt('e', i)}};
      for (int k : kIdx) {
        if (k == i || k == j) continue;
        for (char l : {'d', 'e', 'f'}) y.covers.push_back(pt(l, k));
      }
      part.elements.push_back(std::move(y));
    }
    // z_{jki} = {f_j, f_k, g_l}, l the index outside {i, j, k}.
    for (int j : kIdx) {
      for (int k : kIdx) {
        if (j == i || k == i || k <= j) continue;
        const int l = 10 - i - j - k;
        part.elements.push_back({ZElementName(j, k, i), {pt('f', j), pt('f', k), pt('g', l)}});
      }
    }
    spec.parts.push_back(std::move(part));
  }
  return BuildCoverageInstance(spec);
}

// One part per item holding the elements "item@bidder" in bidder order;
// the objective is the SWM-composite welfare.
inline Instance ReduceSwm(const SwmInstance& swm) {
  swm.Validate();
  std::vector<PartSpec> parts;
  for (const auto& item : swm.items) {
    PartSpec part{item, {}};
    for (const auto& b : swm.bidders) part.elements.push_back(item + "@" + b.name);
    parts.push_back(std::move(part));
  }
  std::vector<OraclePtr> utilities;
  for (const auto& b : swm.bidders) utilities.push_back(b.utility);
  auto oracle = std::make_shared<const SwmCompositeOracle>(swm.item_count(), std::move(utilities));
  return Instance::Make(swm.name, PartitionMatroid::Make(std::move(parts)), std::move(oracle), swm);
}

// Appends `dummies` singleton parts "dummy#k" whose element never changes f.
// Coverage-convertible oracles stay coverage (dummies cover nothing).
inline Instance ExtendWithDummies(const Instance& instance, std::size_t dummies) {
  if (dummies == 0) return instance;
  auto parts = instance.matroid().parts();
  for (std::size_t k = 1; k <= dummies; ++k) {
    const std::string name = "dummy#" + std::to_string(k);
    parts.push_back({name, {name}});
  }
  const std::string name = instance.name() + "+" + std::to_string(dummies) + "dummies";
  try {
    CoverageSpec spec = DescribeCoverage(instance);
    spec.name = name;
    for (std::size_t p = instance.part_count(); p < parts.size(); ++p) {
      spec.parts.push_back({parts[p].name, {{parts[p].elements.front(), {}}}});
    }
    return BuildCoverageInstance(spec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvariantViolation) throw;
  }
  return Instance::Make(name, PartitionMatroid::Make(std::move(parts)),
                        std::make_shared<const DummyPaddedOracle>(instance.oracle(), dummies));
}

// k disjoint copies; every element, part and universe point of copy j gets
// the suffix "#j". The objective is the sum of the per-copy objectives.
// Throws OutOfRange for k == 0.
inline Instance ComposeCopies(const Instance& instance, std::size_t copies) {
  if (copies == 0) throw Error(ErrorKind::kOutOfRange, "need at least one copy");
  const std::string name = instance.name() + "*" + std::to_string(copies);
  auto suffix = [](const std::string& s, std::size_t j) { return s + "#" + std::to_string(j); };
  std::optional<CoverageSpec> base;
  try {
    base = DescribeCoverage(instance);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvariantViolation) throw;
  }
  if (base) {
    CoverageSpec spec;
    spec.name = name;
    for (std::size_t j = 1; j <= copies; ++j) {
      for (const auto& [pt, w] : base->universe) spec.universe.emplace_back(suffix(pt, j), w);
      for (const auto& part : base->parts) {
        CoverageSpec::Part copy{suffix(part.name, j), {}};
        for (const auto& e : part.elements) {
          CoverageSpec::Element el{suffix(e.name, j), {}};
          for (const auto& pt : e.covers) el.covers.push_back(suffix(pt, j));
          copy.elements.push_back(std::move(el));
        }
        spec.parts.push_back(std::move(copy));
      }
    }
    return BuildCoverageInstance(spec);
  }
  std::vector<PartSpec> parts;
  for (std::size_t j = 1; j <= copies; ++j) {
    for (const auto& part : instance.matroid().parts()) {
      PartSpec copy{suffix(part.name, j), {}};
      for (const auto& e : part.elements) copy.elements.push_back(suffix(e, j));
      parts.push_back(std::move(copy));
    }
  }
  return Instance::Make(name, PartitionMatroid::Make(std::move(parts)),
                        std::make_shared<const CopySumOracle>(instance.oracle(), copies));
}

struct RandomCoverageOptions {
  std::size_t parts = 3;
  std::size_t part_size = 3;
  std::size_t universe_size = 8;
  // Point weights are uniform integers in [1, max_weight].
  std::uint64_t max_weight = 5;
  std::uint64_t seed = 0;
};

// Reproducible random instance: parts "P1".."Pm", elements "e<p>_<k>",
// points "w1".."wU". Each element covers every point with probability 1/2,
// or one random point if that draw came out empty.
inline Instance RandomCoverageInstance(const RandomCoverageOptions& opt) {
  if (opt.parts == 0 || opt.part_size == 0 || opt.universe_size == 0 || opt.max_weight == 0) {
    throw Error(ErrorKind::kOutOfRange, "random instance counts must be at least 1");
  }
  SplitMix64 rng(DeriveSeed(opt.seed, 0));
  CoverageSpec spec;
  spec.name = "random-" + std::to_string(opt.seed);
  for (std::size_t i = 1; i <= opt.universe_size; ++i) {
    spec.universe.emplace_back("w" + std::to_string(i),
                               static_cast<double>(1 + rng.Bounded(opt.max_weight)));
  }
  for (std::size_t p = 1; p <= opt.parts; ++p) {
    CoverageSpec::Part part{"P" + std::to_string(p), {}};
    for (std::size_t k = 1; k <= opt.part_size; ++k) {
      CoverageSpec::Element e{"e" + std::to_string(p) + "_" + std::to_string(k), {}};
      for (const auto& [pt, w] : spec.universe) {
        if (rng.Coin()) e.covers.push_back(pt);
      }
      if (e.covers.empty()) e.covers.push_back(spec.universe[rng.Bounded(opt.universe_size)].first);
      part.elements.push_back(std::move(e));
    }
    spec.parts.push_back(std::move(part));
  }
  return BuildCoverageInstance(spec);
}

struct RandomSwmOptions {
  std::size_t items = 3;
  std::size_t bidders = 2;
  // Points in each bidder's private universe.
  std::size_t universe_size = 4;
  std::uint64_t max_weight = 3;
  std::uint64_t seed = 0;
};

// Items "item1".., bidders "bidder1".. with points "q1".. each; items cover
// every point of a bidder with probability 1/2 (possibly none).
inline SwmInstance RandomSwmInstance(const RandomSwmOptions& opt) {
  if (opt.items == 0 || opt.bidders == 0 || opt.universe_size == 0 || opt.max_weight == 0) {
    throw Error(ErrorKind::kOutOfRange, "random SWM counts must be at least 1");
  }
  SplitMix64 rng(DeriveSeed(opt.seed, 1));
  SwmInstance swm;
  swm.name = "random-swm-" + std::to_string(opt.seed);
  for (std::size_t u = 1; u <= opt.items; ++u) swm.items.push_back("item" + std::to_string(u));
  for (std::size_t b = 1; b <= opt.bidders; ++b) {
    std::vector<std::pair<std::string, double>> universe;
    for (std::size_t i = 1; i <= opt.universe_size; ++i) {
      universe.emplace_back("q" + std::to_string(i), static_cast<double>(1 + rng.Bounded(opt.max_weight)));
    }
    std::map<std::string, std::vector<std::string>> covers;
    for (const auto& item : swm.items) {
      auto& points = covers[item];
      for (const auto& [pt, w] : universe) {
        if (rng.Coin()) points.push_back(pt);
      }
    }
    swm.bidders.push_back(MakeSwmBidder("bidder" + std::to_string(b), swm.items, universe, covers));
  }
  swm.Validate();
  return swm;
}

}  // namespace sgl

#endif  // SGL_BUILDERS_HPP_
