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

#ifndef SGL_INDEX_SET_HPP_
#define SGL_INDEX_SET_HPP_

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sgl {

// A subset of a fixed index range [0, capacity), stored as a packed bitset.
// The Tag parameter keeps ground-set elements and universe points apart at
// the type level.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static IndexSet FromMask(std::size_t capacity, std::uint64_t mask) {
    assert(capacity <= 64);
    IndexSet s(capacity);
    if (capacity > 0) {
      s.words_[0] = capacity == 64 ? mask : mask & ((std::uint64_t{1} << capacity) - 1);
    }
    return s;
  }

  template <typename Range>
  static IndexSet FromIndices(std::size_t capacity, const Range& indices) {
    IndexSet s(capacity);
    for (auto i : indices) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  static IndexSet Full(std::size_t capacity) {
    IndexSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  bool contains(std::size_t i) const {
    return i < capacity_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  void insert(std::size_t i) {
    assert(i < capacity_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void erase(std::size_t i) {
    assert(i < capacity_);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  IndexSet With(std::size_t i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }

  IndexSet& operator|=(const IndexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool IsSubsetOf(const IndexSet& o) const {
    assert(o.capacity_ == capacity_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }

  // Calls fn(i) for every member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> ToVector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    ForEach([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Low 64 members as a mask; meaningful when capacity <= 64.
  std::uint64_t LowMask() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementTag;
struct PointTag;
using ElementSet = IndexSet<ElementTag>;
using PointSet = IndexSet<PointTag>;

}  // namespace sgl

#endif  // SGL_INDEX_SET_HPP_
