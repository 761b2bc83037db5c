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

#ifndef SGL_VERIFY_HPP_
#define SGL_VERIFY_HPP_

// Executable checks of the set-function preliminaries: non-negativity,
// monotonicity, submodularity, the two marginal inequalities that combine
// them, and the independent-sampling lower bound
//   E[f(T_p)] >= (1 - p) f(empty) + p f(T).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/index_set.hpp"
#include "sgl/oracle.hpp"
#include "sgl/random.hpp"

namespace sgl {

namespace property {
inline constexpr const char* kNonNegative = "non-negativity";
inline constexpr const char* kMonotone = "monotonicity";
inline constexpr const char* kSubmodular = "submodularity";
inline constexpr const char* kMarginalOfLargerSet = "marginal-of-larger-set";
inline constexpr const char* kMarginalOnLargerBase = "marginal-on-larger-base";
inline constexpr const char* kSamplingBound = "sampling-bound";
}  // namespace property

struct Violation {
  std::string property;
  // Witness sets in property-specific order:
  //   non-negativity: (S)                    values: f(S)
  //   monotonicity:   (S, T) with S ⊆ T      values: f(S), f(T)
  //   submodularity:  (S, T, {u})            values: f(u|S), f(u|T)
  //   marginal-of-larger-set:  (S1, S2, T)   values: f(S1|T), f(S2|T)
  //   marginal-on-larger-base: (S1, S2, T)   values: f(T|S1), f(T|S2)
  //   sampling-bound: (T)                    values: p, mean, bound, stderr
  std::vector<ElementSet> witnesses;
  std::vector<double> values;
};

struct PropertyReport {
  std::vector<std::string> checked;
  std::vector<Violation> violations;
  std::uint64_t queries = 0;
  std::uint64_t cases = 0;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t CountViolations(std::string_view name) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.property == name ? 1 : 0;
    return n;
  }
};

struct ExhaustiveMode {
  std::size_t cap = 16;
};

struct SampledMode {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::vector<double> probabilities = {0.25, 0.5, 0.75};
  // Extra random test sets T for the sampling bound, besides the full
  // ground set.
  std::size_t random_sets = 3;
};

using VerifyMode = std::variant<ExhaustiveMode, SampledMode>;

namespace detail {

// Full (S1 ⊆ S2, T) enumeration costs 6^n table lookups; above this the
// marginal inequalities are checked on a fixed pseudo-random sample of the
// table instead.
inline constexpr std::uint64_t kFullTripleBudget = 2'000'000;
inline constexpr std::uint64_t kTableTripleSamples = 200'000;

inline ElementSet RandomSubset(std::size_t n, SplitMix64& rng, double p = 0.5) {
  ElementSet s(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (rng.Unit() < p) s.insert(e);
  }
  return s;
}

inline ElementSet RandomSubsetOf(const ElementSet& of, SplitMix64& rng, double p = 0.5) {
  ElementSet s(of.capacity());
  of.ForEach([&](std::size_t e) {
    if (rng.Unit() < p) s.insert(e);
  });
  return s;
}

inline PropertyReport VerifyExhaustive(const ValueOracle& f, const ExhaustiveMode& mode) {
  const std::size_t n = f.ground_size();
  if (n > mode.cap || n > 30) {
    throw Error(ErrorKind::kTooLarge, "exhaustive verification over " + std::to_string(n) +
                                          " elements exceeds the cap of " +
                                          std::to_string(mode.cap));
  }
  PropertyReport report;
  report.checked = {property::kNonNegative, property::kMonotone, property::kSubmodular,
                    property::kMarginalOfLargerSet, property::kMarginalOnLargerBase};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<double> table(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    table[mask] = f.Evaluate(ElementSet::FromMask(n, mask));
  }
  report.queries = subsets;
  auto set = [n](std::uint64_t mask) { return ElementSet::FromMask(n, mask); };

  for (std::uint64_t s = 0; s < subsets; ++s) {
    ++report.cases;
    if (!(table[s] >= -kValueTolerance) || !std::isfinite(table[s])) {
      report.violations.push_back({property::kNonNegative, {set(s)}, {table[s]}});
    }
    for (std::size_t u = 0; u < n; ++u) {
      const std::uint64_t bu = std::uint64_t{1} << u;
      if (s & bu) continue;
      ++report.cases;
      if (table[s | bu] < table[s] - kValueTolerance) {
        report.violations.push_back({property::kMonotone, {set(s), set(s | bu)}, {table[s], table[s | bu]}});
      }
      // Diminishing returns on adjacent pairs (S, S + v) characterizes
      // submodularity; a violation is reported as the triple (S, T, u).
      for (std::size_t v = u + 1; v < n; ++v) {
        const std::uint64_t bv = std::uint64_t{1} << v;
        if (s & bv) continue;
        ++report.cases;
        const double small = table[s | bu] - table[s];
        const double large = table[s | bu | bv] - table[s | bv];
        if (small < large - kValueTolerance) {
          report.violations.push_back({property::kSubmodular, {set(s), set(s | bv), set(bu)}, {small, large}});
        }
      }
    }
  }

  auto check_triple = [&](std::uint64_t s1, std::uint64_t s2, std::uint64_t t) {
    report.cases += 2;
    const double a1 = table[s1 | t] - table[t];
    const double a2 = table[s2 | t] - table[t];
    if (a1 > a2 + kValueTolerance) {
      report.violations.push_back({property::kMarginalOfLargerSet, {set(s1), set(s2), set(t)}, {a1, a2}});
    }
    const double b1 = table[t | s1] - table[s1];
    const double b2 = table[t | s2] - table[s2];
    if (b1 < b2 - kValueTolerance) {
      report.violations.push_back({property::kMarginalOnLargerBase, {set(s1), set(s2), set(t)}, {b1, b2}});
    }
  };
  const double full_cost = std::pow(6.0, static_cast<double>(n));
  if (full_cost <= static_cast<double>(kFullTripleBudget)) {
    for (std::uint64_t s2 = 0; s2 < subsets; ++s2) {
      for (std::uint64_t s1 = s2;; s1 = (s1 - 1) & s2) {
        for (std::uint64_t t = 0; t < subsets; ++t) check_triple(s1, s2, t);
        if (s1 == 0) break;
      }
    }
    report.notes.push_back("marginal inequalities: all (S1 ⊆ S2, T) triples");
  } else {
    SplitMix64 rng(DeriveSeed(0x5EED, n));
    for (std::uint64_t k = 0; k < kTableTripleSamples; ++k) {
      const std::uint64_t s2 = rng() & (subsets - 1);
      const std::uint64_t s1 = s2 & rng();
      const std::uint64_t t = rng() & (subsets - 1);
      check_triple(s1, s2, t);
    }
    report.notes.push_back("marginal inequalities: " + std::to_string(kTableTripleSamples) +
                           " sampled (S1 ⊆ S2, T) triples over the full value table");
  }
  return report;
}

inline PropertyReport VerifySampled(const ValueOracle& f, const SampledMode& mode) {
  const std::size_t n = f.ground_size();
  PropertyReport report;
  report.checked = {property::kNonNegative, property::kMonotone, property::kSubmodular,
                    property::kMarginalOfLargerSet, property::kMarginalOnLargerBase,
                    property::kSamplingBound};
  auto eval = [&](const ElementSet& s) {
    ++report.queries;
    return f.Evaluate(s);
  };
  SplitMix64 rng(DeriveSeed(mode.seed, 0));
  for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
    const ElementSet t = RandomSubset(n, rng);
    const ElementSet s = RandomSubsetOf(t, rng);
    const ElementSet other = RandomSubset(n, rng);
    const double fs = eval(s);
    const double ft = eval(t);
    report.cases += 2;
    if (!(fs >= -kValueTolerance)) report.violations.push_back({property::kNonNegative, {s}, {fs}});
    if (!(ft >= -kValueTolerance)) report.violations.push_back({property::kNonNegative, {t}, {ft}});
    ++report.cases;
    if (fs > ft + kValueTolerance) report.violations.push_back({property::kMonotone, {s, t}, {fs, ft}});

    if (n > 0) {
      std::size_t u = static_cast<std::size_t>(rng.Bounded(n));
      if (t.size() < n) {
        while (t.contains(u)) u = static_cast<std::size_t>(rng.Bounded(n));
      }
      ++report.cases;
      const double small = eval(s.With(u)) - fs;
      const double large = eval(t.With(u)) - ft;
      if (small < large - kValueTolerance) {
        ElementSet single(n);
        single.insert(u);
        report.violations.push_back({property::kSubmodular, {s, t, single}, {small, large}});
      }
    }

    report.cases += 2;
    const double f_other = eval(other);
    const double a1 = eval(s | other) - f_other;
    const double a2 = eval(t | other) - f_other;
    if (a1 > a2 + kValueTolerance) {
      report.violations.push_back({property::kMarginalOfLargerSet, {s, t, other}, {a1, a2}});
    }
    const double b1 = eval(other | s) - fs;
    const double b2 = eval(other | t) - ft;
    if (b1 < b2 - kValueTolerance) {
      report.violations.push_back({property::kMarginalOnLargerBase, {s, t, other}, {b1, b2}});
    }
  }

  // Sampling bound with independent inclusion; slack is 3 standard errors.
  std::vector<ElementSet> bases = {ElementSet::Full(n)};
  for (std::size_t k = 0; k < mode.random_sets; ++k) bases.push_back(RandomSubset(n, rng));
  const double f_empty = eval(ElementSet(n));
  for (const ElementSet& t : bases) {
    const double ft = eval(t);
    for (double p : mode.probabilities) {
      double sum = 0;
      double sum_sq = 0;
      for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
        const double v = eval(RandomSubsetOf(t, rng, p));
        sum += v;
        sum_sq += v * v;
      }
      const double trials = static_cast<double>(mode.trials);
      const double mean = sum / trials;
      const double var = mode.trials > 1
                             ? std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1))
                             : 0.0;
      const double std_error = std::sqrt(var / trials);
      const double bound = (1 - p) * f_empty + p * ft;
      ++report.cases;
      if (mean < bound - 3 * std_error - kValueTolerance) {
        report.violations.push_back({property::kSamplingBound, {t}, {p, mean, bound, std_error}});
      }
    }
  }
  return report;
}

}  // namespace detail

inline PropertyReport VerifyProperties(const ValueOracle& f, const VerifyMode& mode) {
  return std::visit(
      [&](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, ExhaustiveMode>) {
          return detail::VerifyExhaustive(f, m);
        } else {
          return detail::VerifySampled(f, m);
        }
      },
      mode);
}

}  // namespace sgl

#endif  // SGL_VERIFY_HPP_
