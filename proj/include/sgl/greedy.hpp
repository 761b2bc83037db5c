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

#ifndef SGL_GREEDY_HPP_
#define SGL_GREEDY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/format.hpp"
#include "sgl/ground.hpp"
#include "sgl/index_set.hpp"
#include "sgl/instance.hpp"
#include "sgl/random.hpp"

namespace sgl {

// Candidates whose marginal is within this of the best are tied.
inline constexpr double kTieTolerance = 1e-9;

// How greedy resolves ties among elements with (near-)equal best marginal.
//
//   first-name       lexicographically smallest element name
//   last-index       highest position within its part as constructed
//   priority:LIST    LIST is a comma-separated list of names or prefix
//                    patterns ending in '*'; an element ranks by the first
//                    entry it matches, unmatched elements rank last, and
//                    equal ranks fall back to first-name
//   random[:SEED]    uniform among the tied set, from a seeded stream
class TieBreakPolicy {
 public:
  enum class Kind { kFirstName, kLastIndex, kPriorityList, kSeededRandom };

  static TieBreakPolicy FirstName() { return TieBreakPolicy(Kind::kFirstName); }
  static TieBreakPolicy LastIndex() { return TieBreakPolicy(Kind::kLastIndex); }
  static TieBreakPolicy PriorityList(std::vector<std::string> entries) {
    TieBreakPolicy p(Kind::kPriorityList);
    p.priorities_ = std::move(entries);
    return p;
  }
  static TieBreakPolicy SeededRandom(std::uint64_t seed) {
    TieBreakPolicy p(Kind::kSeededRandom);
    p.seed_ = seed;
    return p;
  }

  // Inverse of ToString(). Throws ParseError.
  static TieBreakPolicy Parse(std::string_view text) {
    if (text == "first-name") return FirstName();
    if (text == "last-index") return LastIndex();
    if (text == "random") return SeededRandom(0);
    if (text.starts_with("random:")) {
      const std::string digits(text.substr(7));
      try {
        std::size_t used = 0;
        const std::uint64_t seed = std::stoull(digits, &used);
        if (used == digits.size()) return SeededRandom(seed);
      } catch (const std::exception&) {
      }
      throw Error(ErrorKind::kParseError, "bad random tie seed '" + digits + "'");
    }
    if (text.starts_with("priority:")) {
      std::vector<std::string> entries;
      std::string_view rest = text.substr(9);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        entries.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (entries.empty() || std::any_of(entries.begin(), entries.end(),
                                         [](const std::string& e) { return e.empty(); })) {
        throw Error(ErrorKind::kParseError, "priority list must be non-empty names or patterns");
      }
      return PriorityList(std::move(entries));
    }
    throw Error(ErrorKind::kParseError, "unknown tie policy '" + std::string(text) + "'");
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& priorities() const noexcept { return priorities_; }
  std::uint64_t seed() const noexcept { return seed_; }
  bool deterministic() const noexcept { return kind_ != Kind::kSeededRandom; }

  std::string ToString() const {
    switch (kind_) {
      case Kind::kFirstName: return "first-name";
      case Kind::kLastIndex: return "last-index";
      case Kind::kSeededRandom: return "random:" + std::to_string(seed_);
      case Kind::kPriorityList: {
        std::string out = "priority:";
        for (std::size_t i = 0; i < priorities_.size(); ++i) {
          if (i > 0) out += ',';
          out += priorities_[i];
        }
        return out;
      }
    }
    return {};
  }

  // Rank of `name` in a priority list (smaller is preferred).
  std::size_t PriorityRank(std::string_view name) const {
    for (std::size_t i = 0; i < priorities_.size(); ++i) {
      const std::string& entry = priorities_[i];
      if (!entry.empty() && entry.back() == '*') {
        if (name.starts_with(std::string_view(entry).substr(0, entry.size() - 1))) return i;
      } else if (name == entry) {
        return i;
      }
    }
    return priorities_.size();
  }

 private:
  explicit TieBreakPolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::string> priorities_;
  std::uint64_t seed_ = 0;
};

// Per-run tie resolution state; keeps a copy of the policy and a reference
// to the matroid. `stream` separates random tie streams of
// different runs sharing one policy seed.
class TieBreaker {
 public:
  TieBreaker(const TieBreakPolicy& policy, const PartitionMatroid& matroid, std::uint64_t stream = 0)
      : policy_(policy), matroid_(matroid), rng_(DeriveSeed(policy.seed(), stream)) {}

  // `tied` is non-empty and lists element indices in part order.
  std::size_t Choose(std::span<const std::size_t> tied) {
    if (tied.size() == 1) return tied.front();
    switch (policy_.kind()) {
      case TieBreakPolicy::Kind::kFirstName:
        return *std::min_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
          return matroid_.element_name(a) < matroid_.element_name(b);
        });
      case TieBreakPolicy::Kind::kLastIndex:
        return *std::max_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
          return matroid_.position_in_part(a) < matroid_.position_in_part(b);
        });
      case TieBreakPolicy::Kind::kPriorityList:
        return *std::min_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
          const auto& na = matroid_.element_name(a);
          const auto& nb = matroid_.element_name(b);
          const auto ra = policy_.PriorityRank(na);
          const auto rb = policy_.PriorityRank(nb);
          return ra != rb ? ra < rb : na < nb;
        });
      case TieBreakPolicy::Kind::kSeededRandom:
        return tied[static_cast<std::size_t>(rng_.Bounded(tied.size()))];
    }
    return tied.front();
  }

 private:
  TieBreakPolicy policy_;
  const PartitionMatroid& matroid_;
  SplitMix64 rng_;
};

// Arrival order of the parts: explicit, or uniform from a seed (see
// random.hpp for the exact shuffle).
class PermutationSource {
 public:
  static PermutationSource Explicit(std::vector<std::size_t> order) {
    PermutationSource s;
    s.order_ = std::move(order);
    return s;
  }
  static PermutationSource Uniform(std::uint64_t seed) {
    PermutationSource s;
    s.seed_ = seed;
    return s;
  }

  bool is_uniform() const noexcept { return !order_.has_value(); }
  std::uint64_t seed() const noexcept { return seed_; }

  // Throws InvalidPermutation if an explicit order is not a permutation of
  // 0..m-1.
  std::vector<std::size_t> Resolve(std::size_t m) const {
    if (!order_) return UniformPermutation(m, seed_);
    RequirePermutation(*order_, m);
    return *order_;
  }

  static void RequirePermutation(std::span<const std::size_t> order, std::size_t m) {
    if (order.size() != m) {
      throw Error(ErrorKind::kInvalidPermutation, "order lists " + std::to_string(order.size()) +
                                                      " entries, expected " + std::to_string(m));
    }
    std::vector<bool> seen(m, false);
    for (std::size_t p : order) {
      if (p >= m || seen[p]) {
        throw Error(ErrorKind::kInvalidPermutation, "order is not a permutation of the parts");
      }
      seen[p] = true;
    }
  }

 private:
  std::optional<std::vector<std::size_t>> order_;
  std::uint64_t seed_ = 0;
};

// Maps part names to an explicit order. Throws InvalidPermutation on an
// unknown or repeated name, or a missing part.
inline PermutationSource OrderByName(const PartitionMatroid& matroid,
                                     std::span<const std::string> part_names) {
  std::vector<std::size_t> order;
  for (const auto& name : part_names) {
    auto p = matroid.FindPart(name);
    if (!p) throw Error(ErrorKind::kInvalidPermutation, "unknown part '" + name + "'");
    order.push_back(*p);
  }
  PermutationSource::RequirePermutation(order, matroid.part_count());
  return PermutationSource::Explicit(std::move(order));
}

struct GreedyStep {
  std::size_t part = 0;
  std::size_t element = 0;
  double gain = 0;
  // f(A_i) after this step.
  double value = 0;
  // Number of candidates tied for the best marginal.
  std::size_t tied = 1;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyTrace {
  std::vector<std::size_t> permutation;
  double initial_value = 0;
  std::vector<GreedyStep> steps;
  ElementSet final_set;
  double final_value = 0;

  // f(A_0), f(A_1), ..., f(A_m).
  std::vector<double> PrefixValues() const {
    std::vector<double> out{initial_value};
    for (const auto& s : steps) out.push_back(s.value);
    return out;
  }

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

// Greedy over the parts in `order`: from each arriving part take the
// element with the largest marginal against the current solution. f(A_{i-1})
// is carried between steps, so every candidate costs one oracle call and a
// run costs 1 + sum |P_i| calls.
inline GreedyTrace RunGreedy(const Instance& instance, std::span<const std::size_t> order,
                             TieBreaker& ties) {
  const auto& matroid = instance.matroid();
  const auto& f = *instance.oracle();
  PermutationSource::RequirePermutation(order, matroid.part_count());

  GreedyTrace trace;
  trace.permutation.assign(order.begin(), order.end());
  ElementSet current = matroid.EmptySet();
  double current_value = f.Evaluate(current);
  trace.initial_value = current_value;

  std::vector<std::size_t> tied;
  std::vector<double> values;
  for (std::size_t p : order) {
    const auto part = matroid.part(p);
    values.clear();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t e : part) {
      values.push_back(f.Evaluate(current.With(e)));
      best = std::max(best, values.back() - current_value);
    }
    tied.clear();
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (values[k] - current_value >= best - kTieTolerance) tied.push_back(part[k]);
    }
    const std::size_t chosen = ties.Choose(tied);
    const auto pos = static_cast<std::size_t>(std::find(part.begin(), part.end(), chosen) - part.begin());
    const double value = values[pos];
    trace.steps.push_back({p, chosen, value - current_value, value, tied.size()});
    current.insert(chosen);
    current_value = value;
  }
  trace.final_set = std::move(current);
  trace.final_value = current_value;
  return trace;
}

inline GreedyTrace RandomOrderGreedy(const Instance& instance, const PermutationSource& perm,
                                     const TieBreakPolicy& tie) {
  const auto order = perm.Resolve(instance.part_count());
  TieBreaker ties(tie, instance.matroid());
  return RunGreedy(instance, order, ties);
}

// One line per step: index, part, element, gain, f(A_i), tab-separated.
inline std::string RenderTrace(const Instance& instance, const GreedyTrace& trace) {
  std::string out;
  const auto& m = instance.matroid();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out += std::to_string(i + 1) + '\t' + m.part_name(s.part) + '\t' + m.element_name(s.element) +
           '\t' + FormatNumber(s.gain) + '\t' + FormatNumber(s.value) + '\n';
  }
  return out;
}

struct PotentialCheck {
  // Phi_0 .. Phi_m.
  std::vector<double> potentials;
  bool monotone = true;
  // First i with Phi_i < Phi_{i-1}.
  std::optional<std::size_t> first_violation;
  // f(A_m) + f(S ∪ A_m) >= f(S ∪ T).
  double final_lhs = 0;
  double final_rhs = 0;
  bool final_bound = true;

  bool ok() const noexcept { return monotone && final_bound; }
};

// Checks that Phi_i = f(A_i) + f(S ∪ A_i ∪ T_i) never decreases along the
// trace, where T_i drops from the base T every element of the first i
// arriving parts, and that the run ends with f(A_m) + f(S ∪ A_m) >= f(S ∪ T).
// Throws NotABase.
inline PotentialCheck CheckPotentialMonotone(const Instance& instance, const GreedyTrace& trace,
                                             const ElementSet& s, const ElementSet& t) {
  const auto& matroid = instance.matroid();
  const auto& f = *instance.oracle();
  matroid.RequireMember(s);
  if (!matroid.IsBase(t)) throw Error(ErrorKind::kNotABase, "T must contain one element per part");
  PermutationSource::RequirePermutation(trace.permutation, matroid.part_count());

  PotentialCheck check;
  ElementSet prefix = matroid.EmptySet();
  ElementSet rest = t;
  check.potentials.push_back(f.Evaluate(prefix) + f.Evaluate(s | prefix | rest));
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    prefix.insert(trace.steps[i].element);
    for (std::size_t e : matroid.part(trace.permutation[i])) rest.erase(e);
    check.potentials.push_back(f.Evaluate(prefix) + f.Evaluate(s | prefix | rest));
    if (check.monotone && check.potentials[i + 1] < check.potentials[i] - kValueTolerance) {
      check.monotone = false;
      check.first_violation = i + 1;
    }
  }
  check.final_lhs = f.Evaluate(prefix) + f.Evaluate(s | prefix);
  check.final_rhs = f.Evaluate(s | t);
  check.final_bound = check.final_lhs >= check.final_rhs - kValueTolerance;
  return check;
}

struct SwmStep {
  std::size_t item = 0;
  std::size_t bidder = 0;
  double gain = 0;
  double welfare = 0;
};

struct SwmTrace {
  std::vector<std::size_t> item_order;
  std::vector<SwmStep> steps;
  // Items held by each bidder, over the item index range.
  std::vector<ElementSet> bundles;
  double welfare = 0;
};

// Online greedy for welfare maximization: each arriving item goes to the
// bidder with the largest marginal utility, ties to the earliest bidder.
inline SwmTrace SwmGreedy(const SwmInstance& swm, const PermutationSource& items) {
  swm.Validate();
  SwmTrace trace;
  trace.item_order = items.Resolve(swm.item_count());
  trace.bundles.assign(swm.bidder_count(), ElementSet(swm.item_count()));
  std::vector<double> held(swm.bidder_count());
  for (std::size_t b = 0; b < swm.bidder_count(); ++b) {
    held[b] = swm.bidders[b].utility->Evaluate(trace.bundles[b]);
  }
  std::vector<double> with(swm.bidder_count());
  for (std::size_t u : trace.item_order) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < swm.bidder_count(); ++b) {
      with[b] = swm.bidders[b].utility->Evaluate(trace.bundles[b].With(u));
      best = std::max(best, with[b] - held[b]);
    }
    std::size_t chosen = 0;
    while (with[chosen] - held[chosen] < best - kTieTolerance) ++chosen;
    const double gain = with[chosen] - held[chosen];
    trace.bundles[chosen].insert(u);
    held[chosen] = with[chosen];
    double welfare = 0;
    for (double v : held) welfare += v;
    trace.steps.push_back({u, chosen, gain, welfare});
  }
  trace.welfare = 0;
  for (double v : held) trace.welfare += v;
  return trace;
}

}  // namespace sgl

#endif  // SGL_GREEDY_HPP_
