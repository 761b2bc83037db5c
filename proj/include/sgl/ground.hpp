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

#ifndef SGL_GROUND_HPP_
#define SGL_GROUND_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sgl/error.hpp"
#include "sgl/index_set.hpp"

namespace sgl {

// Names are non-empty tokens without whitespace or commas, so they survive
// the instance file format and comma-separated CLI lists unchanged.
inline bool IsValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
           c == '\v' || c == '\f';
  });
}

inline void RequireValidName(std::string_view name, std::string_view what) {
  if (!IsValidName(name)) {
    throw Error(ErrorKind::kInvalidName,
                std::string(what) + " name '" + std::string(name) +
                    "' must be non-empty without whitespace or commas");
  }
}

struct PartSpec {
  std::string name;
  std::vector<std::string> elements;

  friend bool operator==(const PartSpec&, const PartSpec&) = default;
};

// A simple partition matroid P_1..P_m over a named ground set.
//
// Element indices are assigned by flattening the parts in construction
// order, so part 0 owns indices [0, |P_1|), part 1 the next block, and so
// on. Part order is the canonical 0..m-1 order used by permutations.
class PartitionMatroid {
 public:
  PartitionMatroid() = default;

  // Validates and builds the matroid. Throws EmptyPart, OverlappingParts,
  // DuplicateName or InvalidName.
  static PartitionMatroid Make(std::vector<PartSpec> parts) {
    if (parts.empty()) {
      throw Error(ErrorKind::kEmptyPart, "a partition matroid needs at least one part");
    }
    PartitionMatroid m;
    std::unordered_map<std::string, std::size_t> part_lookup;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const PartSpec& spec = parts[p];
      RequireValidName(spec.name, "part");
      if (!part_lookup.emplace(spec.name, p).second) {
        throw Error(ErrorKind::kDuplicateName, "part name '" + spec.name + "' is used twice");
      }
      if (spec.elements.empty()) {
        throw Error(ErrorKind::kEmptyPart, "part '" + spec.name + "' has no elements");
      }
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < spec.elements.size(); ++k) {
        const std::string& name = spec.elements[k];
        RequireValidName(name, "element");
        const std::size_t index = m.names_.size();
        auto [it, inserted] = m.element_lookup_.emplace(name, index);
        if (!inserted) {
          const std::size_t other = m.part_of_[it->second];
          if (other == p) {
            throw Error(ErrorKind::kDuplicateName,
                        "element '" + name + "' appears twice in part '" + spec.name + "'");
          }
          throw Error(ErrorKind::kOverlappingParts,
                      "element '" + name + "' is in both '" + parts[other].name +
                          "' and '" + spec.name + "'");
        }
        m.names_.push_back(name);
        m.part_of_.push_back(p);
        m.position_.push_back(k);
        members.push_back(index);
      }
      m.part_names_.push_back(spec.name);
      m.parts_.push_back(std::move(members));
    }
    m.part_lookup_ = std::move(part_lookup);
    return m;
  }

  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t ground_size() const noexcept { return names_.size(); }

  const std::string& part_name(std::size_t p) const { return part_names_.at(p); }
  std::span<const std::size_t> part(std::size_t p) const { return parts_.at(p); }

  const std::string& element_name(std::size_t e) const { return names_.at(e); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  std::size_t part_of(std::size_t e) const { return part_of_.at(e); }
  // Zero-based position of the element within its part, as constructed.
  std::size_t position_in_part(std::size_t e) const { return position_.at(e); }

  std::optional<std::size_t> FindElement(std::string_view name) const {
    auto it = element_lookup_.find(std::string(name));
    if (it == element_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t ElementIndex(std::string_view name) const {
    if (auto e = FindElement(name)) return *e;
    throw Error(ErrorKind::kUnknownElement, "no element named '" + std::string(name) + "'");
  }
  std::optional<std::size_t> FindPart(std::string_view name) const {
    auto it = part_lookup_.find(std::string(name));
    if (it == part_lookup_.end()) return std::nullopt;
    return it->second;
  }

  ElementSet EmptySet() const { return ElementSet(ground_size()); }

  template <typename Range>
  ElementSet MakeSet(const Range& names) const {
    ElementSet s(ground_size());
    for (const auto& name : names) s.insert(ElementIndex(name));
    return s;
  }
  ElementSet MakeSet(std::initializer_list<std::string_view> names) const {
    return MakeSet(std::span<const std::string_view>(names.begin(), names.size()));
  }

  // Member names in index order.
  std::vector<std::string> Names(const ElementSet& s) const {
    RequireMember(s);
    std::vector<std::string> out;
    s.ForEach([&](std::size_t e) { out.push_back(names_[e]); });
    return out;
  }

  void RequireMember(const ElementSet& s) const {
    if (s.capacity() != ground_size()) {
      throw Error(ErrorKind::kUnknownElement,
                  "set is drawn from a ground set of " + std::to_string(s.capacity()) +
                      " elements, expected " + std::to_string(ground_size()));
    }
  }

  // |S ∩ P_i| <= 1 for every part.
  bool IsIndependent(const ElementSet& s) const {
    RequireMember(s);
    std::vector<unsigned char> seen(parts_.size(), 0);
    bool ok = true;
    s.ForEach([&](std::size_t e) {
      if (seen[part_of_[e]]++ != 0) ok = false;
    });
    return ok;
  }

  // |S ∩ P_i| == 1 for every part.
  bool IsBase(const ElementSet& s) const {
    return IsIndependent(s) && s.size() == parts_.size();
  }

  std::vector<PartSpec> parts() const {
    std::vector<PartSpec> out;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      PartSpec spec{part_names_[p], {}};
      for (std::size_t e : parts_[p]) spec.elements.push_back(names_[e]);
      out.push_back(std::move(spec));
    }
    return out;
  }

  friend bool operator==(const PartitionMatroid& a, const PartitionMatroid& b) {
    return a.part_names_ == b.part_names_ && a.names_ == b.names_ && a.parts_ == b.parts_;
  }

 private:
  std::vector<std::string> part_names_;
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<std::string> names_;
  std::vector<std::size_t> part_of_;
  std::vector<std::size_t> position_;
  std::unordered_map<std::string, std::size_t> element_lookup_;
  std::unordered_map<std::string, std::size_t> part_lookup_;
};

}  // namespace sgl

#endif  // SGL_GROUND_HPP_
