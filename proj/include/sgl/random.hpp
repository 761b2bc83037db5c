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

#ifndef SGL_RANDOM_HPP_
#define SGL_RANDOM_HPP_

// Seedable randomness with a fixed, documented algorithm so that seeds
// reproduce the same permutations on every platform and standard library.
//
//   * Engine: SplitMix64 (Steele, Lea & Flood), 64-bit state, increment
//     0x9E3779B97F4A7C15, output finalizer (30, 27, 31 shifts).
//   * Bounded draws: rejection sampling on the raw 64-bit output, so the
//     result is exactly uniform on [0, n).
//   * Shuffles: Fisher-Yates from the last position down, drawing
//     j = Bounded(i + 1) for i = n-1 .. 1.
//   * Per-trial seeds: DeriveSeed(master, t) runs the SplitMix64 finalizer
//     over master + (t + 1) * golden; trial t never depends on scheduling.
//
// The std:: distributions are deliberately not used: their output is
// implementation-defined.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace sgl {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += kGolden;
    return Mix(state_);
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  // Bernoulli(1/2).
  bool Coin() { return ((*this)() >> 63) != 0; }

  // Uniform double in [0, 1) with 53 random bits.
  double Unit() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  return SplitMix64::Mix(master + (index + 1) * SplitMix64::kGolden);
}

template <typename T>
void Shuffle(std::span<T> values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.Bounded(i));
    std::swap(values[i - 1], values[j]);
  }
}

// The permutation of 0..n-1 used for trial `index` of a run seeded `seed`.
inline std::vector<std::size_t> UniformPermutation(std::size_t n,
                                                   std::uint64_t seed,
                                                   std::uint64_t index = 0) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(DeriveSeed(seed, index));
  Shuffle(std::span<std::size_t>(order), rng);
  return order;
}

}  // namespace sgl

#endif  // SGL_RANDOM_HPP_
