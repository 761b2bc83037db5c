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

#ifndef SGL_EXACT_HPP_
#define SGL_EXACT_HPP_

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/greedy.hpp"
#include "sgl/index_set.hpp"
#include "sgl/instance.hpp"
#include "sgl/random.hpp"

namespace sgl {

// Caps on exhaustive enumeration. SGL_ENUM_CAP="N" replaces the order cap;
// "N,B" also replaces the base cap. Values must be positive integers;
// anything else is ignored.
struct EnumerationLimits {
  std::uint64_t max_orders = 40320;  // 8!
  std::uint64_t max_bases = 10'000'000;

  static EnumerationLimits FromEnvironment() {
    EnumerationLimits limits;
    const char* env = std::getenv("SGL_ENUM_CAP");
    if (env == nullptr) return limits;
    const std::string_view text(env);
    auto positive = [](std::string_view digits) -> std::optional<std::uint64_t> {
      std::uint64_t v = 0;
      const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || v == 0) return std::nullopt;
      return v;
    };
    const auto comma = text.find(',');
    const auto orders = positive(text.substr(0, comma));
    const auto bases = comma == std::string_view::npos ? std::optional<std::uint64_t>(limits.max_bases)
                                                       : positive(text.substr(comma + 1));
    if (orders && bases) {
      limits.max_orders = *orders;
      limits.max_bases = *bases;
    }
    return limits;
  }
};

// Non-negative reduced fraction.
struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  static Fraction Reduced(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return {num, den};
  }
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  std::string ToString() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

namespace detail {

// Integers up to 2^53 are exact doubles.
inline std::optional<std::int64_t> AsExactInteger(double v) {
  if (!std::isfinite(v) || std::fabs(v) > 9007199254740992.0 || v != std::floor(v)) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

// m!, or nullopt past `cap`.
inline std::optional<std::uint64_t> FactorialUpTo(std::size_t m, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= m; ++k) {
    if (f > cap / k) return std::nullopt;
    f *= k;
  }
  return f <= cap ? std::optional(f) : std::nullopt;
}

// The index-th permutation of 0..m-1 in lexicographic order.
inline std::vector<std::size_t> NthPermutation(std::size_t m, std::uint64_t index) {
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::uint64_t> fact(m + 1, 1);
  for (std::size_t k = 1; k <= m; ++k) fact[k] = fact[k - 1] * k;
  std::vector<std::size_t> out;
  for (std::size_t k = m; k > 0; --k) {
    const auto pick = static_cast<std::size_t>(index / fact[k - 1]);
    index %= fact[k - 1];
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

inline unsigned ResolveWorkers(unsigned workers) {
  if (workers > 0) return workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Splits [0, count) into fixed-size blocks, reduces each block with `fn`
// (possibly on several threads) and merges the block results in block
// order. The outcome does not depend on the number of workers.
template <typename Accum, typename Fn, typename Merge>
Accum BlockReduce(std::uint64_t count, std::uint64_t block_size, unsigned workers, Accum init,
                  Fn fn, Merge merge) {
  const std::uint64_t blocks = (count + block_size - 1) / block_size;
  std::vector<std::optional<Accum>> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      results[b] = fn(b * block_size, std::min(count, (b + 1) * block_size));
    }
  };
  workers = std::min<unsigned>(ResolveWorkers(workers), static_cast<unsigned>(std::max<std::uint64_t>(1, blocks)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& r : results) merge(init, *r);
  return init;
}

struct StepSums {
  std::uint64_t runs = 0;
  std::vector<double> sum;
  std::vector<double> sum_sq;
  double min_final = 0;
  double max_final = 0;
  bool integral = true;
  std::int64_t final_sum = 0;

  explicit StepSums(std::size_t steps = 0) : sum(steps, 0.0), sum_sq(steps, 0.0) {}

  void Add(const GreedyTrace& trace) {
    const auto prefix = trace.PrefixValues();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      sum[i] += prefix[i];
      sum_sq[i] += prefix[i] * prefix[i];
    }
    min_final = runs == 0 ? trace.final_value : std::min(min_final, trace.final_value);
    max_final = runs == 0 ? trace.final_value : std::max(max_final, trace.final_value);
    ++runs;
    if (integral) {
      const auto v = AsExactInteger(trace.final_value);
      integral = v && !__builtin_add_overflow(final_sum, *v, &final_sum);
    }
  }

  void Merge(const StepSums& o) {
    if (o.runs == 0) return;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      sum_sq[i] += o.sum_sq[i];
    }
    min_final = runs == 0 ? o.min_final : std::min(min_final, o.min_final);
    max_final = runs == 0 ? o.max_final : std::max(max_final, o.max_final);
    runs += o.runs;
    integral = integral && o.integral && !__builtin_add_overflow(final_sum, o.final_sum, &final_sum);
  }
};

inline constexpr std::uint64_t kBlockSize = 256;

}  // namespace detail

struct OptResult {
  ElementSet base;
  double value = 0;
  std::uint64_t bases = 0;
};

// Maximizes f over all bases (one element per part). Among maximizers
// within kValueTolerance, the one whose sorted name list is
// lexicographically smallest wins. Throws TooLarge past limits.max_bases.
inline OptResult BruteForceOpt(const Instance& instance,
                               const EnumerationLimits& limits = EnumerationLimits::FromEnvironment()) {
  const auto& matroid = instance.matroid();
  const std::size_t m = matroid.part_count();
  std::uint64_t total = 1;
  for (std::size_t p = 0; p < m; ++p) {
    const std::uint64_t size = matroid.part(p).size();
    if (total > limits.max_bases / size) {
      throw Error(ErrorKind::kTooLarge, "number of bases exceeds the cap of " +
                                            std::to_string(limits.max_bases));
    }
    total *= size;
  }
  auto sorted_names = [&](const ElementSet& s) {
    auto names = matroid.Names(s);
    std::sort(names.begin(), names.end());
    return names;
  };

  OptResult best;
  std::vector<std::string> best_names;
  std::vector<std::size_t> digit(m, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    ElementSet base = matroid.EmptySet();
    for (std::size_t p = 0; p < m; ++p) base.insert(matroid.part(p)[digit[p]]);
    const double value = instance.Evaluate(base);
    if (k == 0 || value > best.value + kValueTolerance) {
      best.base = base;
      best.value = value;
      best_names = sorted_names(base);
    } else if (value >= best.value - kValueTolerance) {
      auto names = sorted_names(base);
      if (names < best_names) {
        best.base = base;
        best.value = value;
        best_names = std::move(names);
      }
    }
    for (std::size_t p = m; p-- > 0;) {
      if (++digit[p] < matroid.part(p).size()) break;
      digit[p] = 0;
    }
  }
  best.bases = total;
  return best;
}

struct ExpectationReport {
  enum class Mode { kExact, kMonteCarlo };

  Mode mode = Mode::kExact;
  // m! orders (exact) or the trial count (Monte Carlo).
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  std::string tie;
  // E[f(A_i)] for i = 0..m.
  std::vector<double> step_means;
  // Standard errors of the step means; Monte Carlo only.
  std::vector<double> step_std_errors;
  double expected_final = 0;
  double min_final = 0;
  double max_final = 0;
  double opt = 0;
  ElementSet opt_set;
  double ratio = 0;
  // Present when every final value and the optimum are exact integers.
  std::optional<Fraction> exact_expected_final;
  std::optional<Fraction> exact_ratio;
};

namespace detail {

inline ExpectationReport FinishReport(ExpectationReport report, const StepSums& sums,
                                      const OptResult& opt, bool with_errors) {
  const double n = static_cast<double>(sums.runs);
  for (std::size_t i = 0; i < sums.sum.size(); ++i) {
    report.step_means.push_back(sums.sum[i] / n);
    if (with_errors) {
      const double var =
          sums.runs > 1 ? std::max(0.0, (sums.sum_sq[i] - sums.sum[i] * sums.sum[i] / n) / (n - 1)) : 0.0;
      report.step_std_errors.push_back(std::sqrt(var / n));
    }
  }
  report.expected_final = report.step_means.back();
  report.min_final = sums.min_final;
  report.max_final = sums.max_final;
  report.opt = opt.value;
  report.opt_set = opt.base;
  report.ratio = opt.value > 0 ? report.expected_final / opt.value : 1.0;
  const auto runs = static_cast<std::int64_t>(sums.runs);
  if (sums.integral) {
    report.exact_expected_final = Fraction::Reduced(sums.final_sum, runs);
    const auto opt_int = AsExactInteger(opt.value);
    std::int64_t den = 0;
    if (opt_int && *opt_int > 0 && !__builtin_mul_overflow(runs, *opt_int, &den)) {
      report.exact_ratio = Fraction::Reduced(sums.final_sum, den);
    }
  }
  return report;
}

}  // namespace detail

// Runs greedy on all m! arrival orders and averages the prefix values.
// With a seeded-random tie policy, order k (in lexicographic order) uses
// tie stream k. Throws TooLarge past limits.max_orders.
inline ExpectationReport ExactExpectedValues(
    const Instance& instance, const TieBreakPolicy& tie,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment(), unsigned workers = 0) {
  const std::size_t m = instance.part_count();
  const auto orders = detail::FactorialUpTo(m, limits.max_orders);
  if (!orders) {
    throw Error(ErrorKind::kTooLarge, std::to_string(m) + "! arrival orders exceed the cap of " +
                                          std::to_string(limits.max_orders));
  }
  const OptResult opt = BruteForceOpt(instance, limits);
  auto block = [&](std::uint64_t begin, std::uint64_t end) {
    detail::StepSums sums(m + 1);
    auto order = detail::NthPermutation(m, begin);
    for (std::uint64_t k = begin; k < end; ++k) {
      TieBreaker ties(tie, instance.matroid(), k);
      sums.Add(RunGreedy(instance, order, ties));
      std::next_permutation(order.begin(), order.end());
    }
    return sums;
  };
  const auto sums = detail::BlockReduce(*orders, detail::kBlockSize, workers, detail::StepSums(m + 1),
                                        block, [](detail::StepSums& a, const detail::StepSums& b) { a.Merge(b); });
  ExpectationReport report;
  report.mode = ExpectationReport::Mode::kExact;
  report.runs = *orders;
  report.tie = tie.ToString();
  return detail::FinishReport(std::move(report), sums, opt, false);
}

// Averages greedy over `trials` uniform orders; trial t uses
// UniformPermutation(m, seed, t) and tie stream t, so the result is the same
// for any worker count. Throws OutOfRange when trials is zero.
inline ExpectationReport MonteCarloExpectedValues(
    const Instance& instance, std::uint64_t trials, std::uint64_t seed, const TieBreakPolicy& tie,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment(), unsigned workers = 0) {
  if (trials == 0) throw Error(ErrorKind::kOutOfRange, "Monte Carlo needs at least one trial");
  const std::size_t m = instance.part_count();
  const OptResult opt = BruteForceOpt(instance, limits);
  auto block = [&](std::uint64_t begin, std::uint64_t end) {
    detail::StepSums sums(m + 1);
    for (std::uint64_t t = begin; t < end; ++t) {
      TieBreaker ties(tie, instance.matroid(), t);
      sums.Add(RunGreedy(instance, UniformPermutation(m, seed, t), ties));
    }
    return sums;
  };
  const auto sums = detail::BlockReduce(trials, detail::kBlockSize, workers, detail::StepSums(m + 1),
                                        block, [](detail::StepSums& a, const detail::StepSums& b) { a.Merge(b); });
  ExpectationReport report;
  report.mode = ExpectationReport::Mode::kMonteCarlo;
  report.runs = trials;
  report.seed = seed;
  report.tie = tie.ToString();
  return detail::FinishReport(std::move(report), sums, opt, true);
}

// g(x) = x - x^2 / 2.
inline double G(double x) { return x - x * x / 2; }

// g(i/m) for i = 0..m, each computed as i(2m - i) / (2m^2) so that the
// values are correctly rounded. Throws OutOfRange for m == 0.
inline std::vector<double> GCurve(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::kOutOfRange, "g curve needs m >= 1");
  std::vector<double> out;
  const double den = 2.0 * static_cast<double>(m) * static_cast<double>(m);
  for (std::size_t i = 0; i <= m; ++i) {
    out.push_back(static_cast<double>(i * (2 * m - i)) / den);
  }
  return out;
}

struct BoundParameters {
  double p = 0;
  double q = 0;
};

// a c^2 + b c + c0.
struct Quadratic {
  double a = 0;
  double b = 0;
  double c = 0;

  double operator()(double x) const { return (a * x + b) * x + c; }
};

struct BoundSolution {
  double p = 0;
  double q = 0;
  Quadratic quadratic;
  double c = 0;
};

// Lower bound on the ratio implied by a guess c of the ratio itself:
//   (3 + pq(2-q) + (p/c)(1-q^2) - p^2(1-q)^2) / (6 + 2p/c).
inline double RatioLowerBound(double p, double q, double c) {
  return (3 + p * q * (2 - q) + (p / c) * (1 - q * q) - p * p * (1 - q) * (1 - q)) / (6 + 2 * p / c);
}

// c = RatioLowerBound(p, q, c) multiplied through by (6c + 2p):
//   6c^2 + (2p - 3 - pq(2-q) + p^2(1-q)^2) c - p(1-q^2) = 0.
// Coefficients are accumulated in long double and rounded once, which
// gives (6, -2.3984, -0.336) exactly at p = q = 0.4.
inline Quadratic BoundQuadratic(const BoundParameters& params) {
  const long double p = params.p;
  const long double q = params.q;
  const long double b = 2 * p - 3 - p * q * (2 - q) + p * p * (1 - q) * (1 - q);
  const long double c0 = -p * (1 - q * q);
  return {6.0, static_cast<double>(b), static_cast<double>(c0)};
}

// Unique positive root of BoundQuadratic. The constant term is negative, so
// the roots have opposite signs; the root is taken in whichever form avoids
// cancellation. Throws OutOfRange unless p in (0, 1] and q in (0, 1).
inline BoundSolution BoundFixedPoint(const BoundParameters& params) {
  if (!(params.p > 0 && params.p <= 1) || !(params.q > 0 && params.q < 1)) {
    throw Error(ErrorKind::kOutOfRange, "need p in (0, 1] and q in (0, 1)");
  }
  const Quadratic quad = BoundQuadratic(params);
  const double disc = quad.b * quad.b - 4 * quad.a * quad.c;
  const double root = quad.b <= 0 ? (-quad.b + std::sqrt(disc)) / (2 * quad.a)
                                  : (2 * -quad.c) / (quad.b + std::sqrt(disc));
  return {params.p, params.q, quad, root};
}

// Best fixed point over p, q in {1/r, ..., (r-1)/r}; ties keep the first
// point in p-major order. Throws OutOfRange for r < 2.
inline BoundSolution BoundGridSearch(int resolution) {
  if (resolution < 2) throw Error(ErrorKind::kOutOfRange, "grid resolution must be at least 2");
  BoundSolution best;
  bool first = true;
  for (int i = 1; i < resolution; ++i) {
    for (int j = 1; j < resolution; ++j) {
      const BoundSolution s = BoundFixedPoint(
          {static_cast<double>(i) / resolution, static_cast<double>(j) / resolution});
      if (first || s.c > best.c) {
        best = s;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace sgl

#endif  // SGL_EXACT_HPP_
