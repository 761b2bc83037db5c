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

#ifndef SGL_INSTANCE_HPP_
#define SGL_INSTANCE_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/ground.hpp"
#include "sgl/index_set.hpp"
#include "sgl/oracle.hpp"

namespace sgl {

struct SwmBidder {
  std::string name;
  // Utility over the instance's items (element index = item index).
  std::shared_ptr<const WeightedCoverageOracle> utility;
};

// Submodular welfare instance: items to be split among bidders whose
// utilities are weighted coverage functions over private universes.
struct SwmInstance {
  std::string name;
  std::vector<std::string> items;
  std::vector<SwmBidder> bidders;

  std::size_t item_count() const noexcept { return items.size(); }
  std::size_t bidder_count() const noexcept { return bidders.size(); }

  void Validate() const {
    if (items.empty()) throw Error(ErrorKind::kInvariantViolation, "SWM instance has no items");
    if (bidders.empty()) throw Error(ErrorKind::kInvariantViolation, "SWM instance has no bidders");
    std::set<std::string_view> seen;
    for (const auto& item : items) {
      RequireValidName(item, "item");
      if (!seen.insert(item).second) {
        throw Error(ErrorKind::kDuplicateName, "item '" + item + "' is listed twice");
      }
    }
    seen.clear();
    for (const auto& b : bidders) {
      RequireValidName(b.name, "bidder");
      if (!seen.insert(b.name).second) {
        throw Error(ErrorKind::kDuplicateName, "bidder '" + b.name + "' is listed twice");
      }
      if (!b.utility || b.utility->ground_size() != items.size()) {
        throw Error(ErrorKind::kInvariantViolation,
                    "bidder '" + b.name + "' utility must cover exactly the item list");
      }
    }
  }
};

// A partition matroid and a value oracle over the same ground set.
class Instance {
 public:
  Instance() = default;

  static Instance Make(std::string name, PartitionMatroid matroid, OraclePtr oracle,
                       std::optional<SwmInstance> swm_origin = std::nullopt) {
    if (!oracle || oracle->ground_size() != matroid.ground_size()) {
      throw Error(ErrorKind::kInvariantViolation,
                  "oracle ground set does not match the matroid ground set");
    }
    Instance inst;
    inst.name_ = std::move(name);
    inst.matroid_ = std::move(matroid);
    inst.oracle_ = std::move(oracle);
    inst.swm_origin_ = std::move(swm_origin);
    return inst;
  }

  const std::string& name() const noexcept { return name_; }
  const PartitionMatroid& matroid() const noexcept { return matroid_; }
  const OraclePtr& oracle() const noexcept { return oracle_; }
  // Set when the instance came from reduce_swm; drives serialization.
  const std::optional<SwmInstance>& swm_origin() const noexcept { return swm_origin_; }

  std::size_t part_count() const noexcept { return matroid_.part_count(); }
  std::size_t ground_size() const noexcept { return matroid_.ground_size(); }

  ElementSet Set(std::initializer_list<std::string_view> names) const {
    return matroid_.MakeSet(names);
  }
  template <typename Range>
  ElementSet Set(const Range& names) const {
    return matroid_.MakeSet(names);
  }

  double Evaluate(const ElementSet& s) const { return oracle_->Evaluate(s); }
  double Evaluate(std::initializer_list<std::string_view> names) const {
    return oracle_->Evaluate(Set(names));
  }
  double Marginal(std::string_view u, const ElementSet& s) const {
    return oracle_->Marginal(matroid_.ElementIndex(u), s);
  }

  // Same instance with a different (equivalent) oracle, e.g. a counting wrap.
  Instance WithOracle(OraclePtr oracle) const {
    return Make(name_, matroid_, std::move(oracle), swm_origin_);
  }

 private:
  std::string name_;
  PartitionMatroid matroid_;
  OraclePtr oracle_;
  std::optional<SwmInstance> swm_origin_;
};

}  // namespace sgl

#endif  // SGL_INSTANCE_HPP_
