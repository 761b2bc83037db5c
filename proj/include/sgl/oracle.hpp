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

#ifndef SGL_ORACLE_HPP_
#define SGL_ORACLE_HPP_

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/index_set.hpp"

namespace sgl {

// Absolute tolerance for comparing oracle values.
inline constexpr double kValueTolerance = 1e-9;

enum class OracleKind {
  kWeightedCoverage,
  kModular,
  kSwmComposite,
  kCounting,
  kDummyPadded,
  kCopySum,
  kCustom,
};

constexpr std::string_view OracleKindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kWeightedCoverage: return "weighted-coverage";
    case OracleKind::kModular: return "modular";
    case OracleKind::kSwmComposite: return "swm-composite";
    case OracleKind::kCounting: return "counting-wrapper";
    case OracleKind::kDummyPadded: return "dummy-padded";
    case OracleKind::kCopySum: return "copy-sum";
    case OracleKind::kCustom: return "custom";
  }
  return "unknown";
}

// Value oracle for a set function over ground indices [0, ground_size()).
// Implementations must be deterministic; all shipped kinds except
// CountingOracle are immutable after construction.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::size_t ground_size() const noexcept = 0;
  virtual OracleKind kind() const noexcept = 0;

  // f(S). Throws UnknownElement if S is over a different ground set.
  double Evaluate(const ElementSet& s) const {
    if (s.capacity() != ground_size()) {
      throw Error(ErrorKind::kUnknownElement,
                  "set over " + std::to_string(s.capacity()) +
                      " elements passed to an oracle over " + std::to_string(ground_size()));
    }
    return DoEvaluate(s);
  }

  // f(u | S) = f(S + u) - f(S).
  double Marginal(std::size_t u, const ElementSet& s) const {
    if (u >= ground_size()) {
      throw Error(ErrorKind::kUnknownElement, "element index " + std::to_string(u) + " out of range");
    }
    return Evaluate(s.With(u)) - Evaluate(s);
  }

 protected:
  virtual double DoEvaluate(const ElementSet& s) const = 0;
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// f(S) = w(union of the point sets of S). Weights are non-negative.
class WeightedCoverageOracle final : public ValueOracle {
 public:
  WeightedCoverageOracle(std::vector<std::string> point_names, std::vector<double> weights,
                         std::vector<PointSet> covers)
      : point_names_(std::move(point_names)),
        weights_(std::move(weights)),
        covers_(std::move(covers)) {
    if (point_names_.size() != weights_.size()) {
      throw Error(ErrorKind::kInvariantViolation, "point names and weights differ in length");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!std::isfinite(weights_[i]) || weights_[i] < 0) {
        throw Error(ErrorKind::kInvariantViolation,
                    "weight of point '" + point_names_[i] + "' must be finite and non-negative");
      }
    }
    for (const PointSet& c : covers_) {
      if (c.capacity() != weights_.size()) {
        throw Error(ErrorKind::kInvariantViolation, "cover set over the wrong universe");
      }
    }
  }

  std::size_t ground_size() const noexcept override { return covers_.size(); }
  OracleKind kind() const noexcept override { return OracleKind::kWeightedCoverage; }

  std::size_t point_count() const noexcept { return weights_.size(); }
  const std::string& point_name(std::size_t i) const { return point_names_.at(i); }
  const std::vector<std::string>& point_names() const noexcept { return point_names_; }
  double weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const PointSet& covers(std::size_t e) const { return covers_.at(e); }

  double total_weight() const { return Weigh(PointSet::Full(point_count())); }

  PointSet Covered(const ElementSet& s) const {
    PointSet covered(point_count());
    s.ForEach([&](std::size_t e) { covered |= covers_[e]; });
    return covered;
  }

  double Weigh(const PointSet& points) const {
    double total = 0;
    points.ForEach([&](std::size_t i) { total += weights_[i]; });
    return total;
  }

 protected:
  double DoEvaluate(const ElementSet& s) const override { return Weigh(Covered(s)); }

 private:
  std::vector<std::string> point_names_;
  std::vector<double> weights_;
  std::vector<PointSet> covers_;
};

// f(S) = sum of w_e over e in S.
class ModularOracle final : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights) : weights_(std::move(weights)) {}

  std::size_t ground_size() const noexcept override { return weights_.size(); }
  OracleKind kind() const noexcept override { return OracleKind::kModular; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 protected:
  double DoEvaluate(const ElementSet& s) const override {
    double total = 0;
    s.ForEach([&](std::size_t e) { total += weights_[e]; });
    return total;
  }

 private:
  std::vector<double> weights_;
};

// The welfare objective of a reduced SWM instance. Element (item u, bidder i)
// has index u * bidder_count + i; f(S) sums each bidder's utility over the
// items assigned to it, in bidder order.
class SwmCompositeOracle final : public ValueOracle {
 public:
  SwmCompositeOracle(std::size_t item_count, std::vector<OraclePtr> bidders)
      : item_count_(item_count), bidders_(std::move(bidders)) {
    for (const auto& b : bidders_) {
      if (!b || b->ground_size() != item_count_) {
        throw Error(ErrorKind::kInvariantViolation, "bidder utility must be defined over all items");
      }
    }
  }

  std::size_t ground_size() const noexcept override { return item_count_ * bidders_.size(); }
  OracleKind kind() const noexcept override { return OracleKind::kSwmComposite; }

  std::size_t item_count() const noexcept { return item_count_; }
  std::size_t bidder_count() const noexcept { return bidders_.size(); }
  const OraclePtr& bidder(std::size_t i) const { return bidders_.at(i); }
  std::size_t ElementOf(std::size_t item, std::size_t bidder) const {
    return item * bidders_.size() + bidder;
  }

  // Items that S assigns to `bidder`.
  ElementSet Bundle(const ElementSet& s, std::size_t bidder) const {
    ElementSet items(item_count_);
    s.ForEach([&](std::size_t e) {
      if (e % bidders_.size() == bidder) items.insert(e / bidders_.size());
    });
    return items;
  }

 protected:
  double DoEvaluate(const ElementSet& s) const override {
    double total = 0;
    for (std::size_t i = 0; i < bidders_.size(); ++i) total += bidders_[i]->Evaluate(Bundle(s, i));
    return total;
  }

 private:
  std::size_t item_count_;
  std::vector<OraclePtr> bidders_;
};

// Forwards to an inner oracle and counts evaluations. The counter is atomic,
// so counts stay exact under concurrent use too.
class CountingOracle final : public ValueOracle {
 public:
  explicit CountingOracle(OraclePtr inner) : inner_(std::move(inner)) {}

  std::size_t ground_size() const noexcept override { return inner_->ground_size(); }
  OracleKind kind() const noexcept override { return OracleKind::kCounting; }

  std::uint64_t count() const noexcept { return count_.load(std::memory_order_relaxed); }
  void Reset() const noexcept { count_.store(0, std::memory_order_relaxed); }
  const OraclePtr& inner() const noexcept { return inner_; }

 protected:
  double DoEvaluate(const ElementSet& s) const override {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_->Evaluate(s);
  }

 private:
  OraclePtr inner_;
  mutable std::atomic<std::uint64_t> count_{0};
};

inline std::shared_ptr<const CountingOracle> WrapCounting(OraclePtr inner) {
  return std::make_shared<const CountingOracle>(std::move(inner));
}

// Ground set = inner ground set followed by `dummies` extra indices that
// never change the value.
class DummyPaddedOracle final : public ValueOracle {
 public:
  DummyPaddedOracle(OraclePtr inner, std::size_t dummies)
      : inner_(std::move(inner)), dummies_(dummies) {}

  std::size_t ground_size() const noexcept override { return inner_->ground_size() + dummies_; }
  OracleKind kind() const noexcept override { return OracleKind::kDummyPadded; }

 protected:
  double DoEvaluate(const ElementSet& s) const override {
    ElementSet real(inner_->ground_size());
    s.ForEach([&](std::size_t e) {
      if (e < real.capacity()) real.insert(e);
    });
    return inner_->Evaluate(real);
  }

 private:
  OraclePtr inner_;
  std::size_t dummies_;
};

// Sum of `copies` copies of an inner oracle over consecutive index blocks.
class CopySumOracle final : public ValueOracle {
 public:
  CopySumOracle(OraclePtr inner, std::size_t copies) : inner_(std::move(inner)), copies_(copies) {}

  std::size_t ground_size() const noexcept override { return inner_->ground_size() * copies_; }
  OracleKind kind() const noexcept override { return OracleKind::kCopySum; }

 protected:
  double DoEvaluate(const ElementSet& s) const override {
    const std::size_t n = inner_->ground_size();
    double total = 0;
    for (std::size_t c = 0; c < copies_; ++c) {
      ElementSet block(n);
      for (std::size_t e = 0; e < n; ++e) {
        if (s.contains(c * n + e)) block.insert(e);
      }
      total += inner_->Evaluate(block);
    }
    return total;
  }

 private:
  OraclePtr inner_;
  std::size_t copies_;
};

// Arbitrary set function, for tests and experiments.
class FunctionOracle final : public ValueOracle {
 public:
  using Fn = std::function<double(const ElementSet&)>;
  FunctionOracle(std::size_t ground_size, Fn fn) : ground_size_(ground_size), fn_(std::move(fn)) {}

  std::size_t ground_size() const noexcept override { return ground_size_; }
  OracleKind kind() const noexcept override { return OracleKind::kCustom; }

 protected:
  double DoEvaluate(const ElementSet& s) const override { return fn_(s); }

 private:
  std::size_t ground_size_;
  Fn fn_;
};

// Rewrites an oracle as an equivalent weighted coverage function when its
// kind allows it; returns null otherwise. Modular weights become one private
// point per element (named after the element); SWM-composite bidders must
// themselves be coverage, and their points are renamed "<point>@<bidder>".
inline std::shared_ptr<const WeightedCoverageOracle> ToCoverage(
    const OraclePtr& oracle, std::span<const std::string> element_names,
    std::span<const std::string> bidder_names = {}) {
  if (auto cov = std::dynamic_pointer_cast<const WeightedCoverageOracle>(oracle)) return cov;
  if (auto counting = std::dynamic_pointer_cast<const CountingOracle>(oracle)) {
    return ToCoverage(counting->inner(), element_names, bidder_names);
  }
  if (auto mod = std::dynamic_pointer_cast<const ModularOracle>(oracle)) {
    const std::size_t n = mod->ground_size();
    std::vector<PointSet> covers;
    for (std::size_t e = 0; e < n; ++e) covers.push_back(PointSet::FromIndices(n, std::vector{e}));
    return std::make_shared<const WeightedCoverageOracle>(
        std::vector<std::string>(element_names.begin(), element_names.end()), mod->weights(),
        std::move(covers));
  }
  if (auto swm = std::dynamic_pointer_cast<const SwmCompositeOracle>(oracle)) {
    if (bidder_names.size() != swm->bidder_count()) return nullptr;
    std::vector<std::string> names;
    std::vector<double> weights;
    std::vector<std::size_t> offsets;
    std::vector<std::shared_ptr<const WeightedCoverageOracle>> utilities;
    for (std::size_t b = 0; b < swm->bidder_count(); ++b) {
      auto cov = std::dynamic_pointer_cast<const WeightedCoverageOracle>(swm->bidder(b));
      if (!cov) return nullptr;
      offsets.push_back(names.size());
      for (std::size_t i = 0; i < cov->point_count(); ++i) {
        names.push_back(cov->point_name(i) + "@" + bidder_names[b]);
        weights.push_back(cov->weight(i));
      }
      utilities.push_back(std::move(cov));
    }
    std::vector<PointSet> covers;
    for (std::size_t u = 0; u < swm->item_count(); ++u) {
      for (std::size_t b = 0; b < swm->bidder_count(); ++b) {
        PointSet c(names.size());
        utilities[b]->covers(u).ForEach([&](std::size_t i) { c.insert(offsets[b] + i); });
        covers.push_back(std::move(c));
      }
    }
    return std::make_shared<const WeightedCoverageOracle>(std::move(names), std::move(weights),
                                                          std::move(covers));
  }
  return nullptr;
}

}  // namespace sgl

#endif  // SGL_ORACLE_HPP_
