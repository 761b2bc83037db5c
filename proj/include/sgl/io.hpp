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

#ifndef SGL_IO_HPP_
#define SGL_IO_HPP_

// Instance files are UTF-8 JSON documents of one of two kinds:
//
//   {"kind": "weighted-coverage", "name": "...",
//    "universe": {"<point>": <weight>, ...},
//    "parts": [{"name": "...", "elements": {"<element>": ["<point>", ...]}}]}
//
//   {"kind": "swm-coverage", "name": "...", "items": ["<item>", ...],
//    "bidders": [{"name": "...", "universe": {...},
//                 "covers": {"<item>": ["<point>", ...]}}]}
//
// A universe may also be a plain array of point names, or give null for a
// weight; either way the weight is 1. SWM files are reduced on load. Key
// order is preserved, so element order within a part (which tie policies
// can see) survives a round trip.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgl/builders.hpp"
#include "sgl/error.hpp"
#include "sgl/instance.hpp"

namespace sgl {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void FieldError(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, where + ": " + what);
}

inline void RequireKeys(const Json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) FieldError(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) FieldError(where, "unknown key '" + key + "'");
  }
}

inline const Json& Field(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(where, "missing key '" + key + "'");
  return *it;
}

inline std::string StringAt(const Json& v, const std::string& where) {
  if (!v.is_string()) FieldError(where, "expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> StringsAt(const Json& v, const std::string& where) {
  if (!v.is_array()) FieldError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(StringAt(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::vector<std::pair<std::string, double>> UniverseAt(const Json& v, const std::string& where) {
  std::vector<std::pair<std::string, double>> out;
  if (v.is_array()) {
    for (auto& name : StringsAt(v, where)) out.emplace_back(std::move(name), 1.0);
    return out;
  }
  if (!v.is_object()) FieldError(where, "expected an object of point weights");
  for (const auto& [point, weight] : v.items()) {
    if (weight.is_null()) {
      out.emplace_back(point, 1.0);
      continue;
    }
    if (!weight.is_number()) FieldError(where + "." + point, "expected a number");
    const double w = weight.get<double>();
    if (!std::isfinite(w) || w < 0) {
      throw Error(ErrorKind::kInvariantViolation,
                  where + "." + point + ": weight must be finite and non-negative");
    }
    out.emplace_back(point, w);
  }
  return out;
}

inline Json WeightJson(double w) {
  if (w == std::floor(w) && std::fabs(w) < 9007199254740992.0) return Json(static_cast<std::int64_t>(w));
  return Json(w);
}

inline Json UniverseJson(const std::vector<std::pair<std::string, double>>& universe) {
  Json out = Json::object();
  for (const auto& [point, w] : universe) out[point] = WeightJson(w);
  return out;
}

inline Instance CoverageFromJson(const Json& doc) {
  RequireKeys(doc, "document", {"kind", "name", "universe", "parts"});
  CoverageSpec spec;
  if (doc.contains("name")) spec.name = StringAt(doc["name"], "name");
  spec.universe = UniverseAt(Field(doc, "universe", "document"), "universe");
  const Json& parts = Field(doc, "parts", "document");
  if (!parts.is_array()) FieldError("parts", "expected an array");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string where = "parts[" + std::to_string(p) + "]";
    RequireKeys(parts[p], where, {"name", "elements"});
    CoverageSpec::Part part{StringAt(Field(parts[p], "name", where), where + ".name"), {}};
    const Json& elements = Field(parts[p], "elements", where);
    if (!elements.is_object()) FieldError(where + ".elements", "expected an object");
    for (const auto& [name, covers] : elements.items()) {
      part.elements.push_back({name, StringsAt(covers, where + ".elements." + name)});
    }
    spec.parts.push_back(std::move(part));
  }
  try {
    return BuildCoverageInstance(spec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    throw Error(ErrorKind::kInvariantViolation, e.what());
  }
}

inline SwmInstance SwmFromJson(const Json& doc) {
  RequireKeys(doc, "document", {"kind", "name", "items", "bidders"});
  SwmInstance swm;
  if (doc.contains("name")) swm.name = StringAt(doc["name"], "name");
  swm.items = StringsAt(Field(doc, "items", "document"), "items");
  const Json& bidders = Field(doc, "bidders", "document");
  if (!bidders.is_array()) FieldError("bidders", "expected an array");
  try {
    for (std::size_t b = 0; b < bidders.size(); ++b) {
      const std::string where = "bidders[" + std::to_string(b) + "]";
      RequireKeys(bidders[b], where, {"name", "universe", "covers"});
      const std::string name = StringAt(Field(bidders[b], "name", where), where + ".name");
      const auto universe = UniverseAt(Field(bidders[b], "universe", where), where + ".universe");
      const Json& covers_json = Field(bidders[b], "covers", where);
      if (!covers_json.is_object()) FieldError(where + ".covers", "expected an object");
      std::map<std::string, std::vector<std::string>> covers;
      for (const auto& [item, points] : covers_json.items()) {
        covers[item] = StringsAt(points, where + ".covers." + item);
      }
      swm.bidders.push_back(MakeSwmBidder(name, swm.items, universe, covers));
    }
    swm.Validate();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    throw Error(ErrorKind::kInvariantViolation, e.what());
  }
  return swm;
}

inline std::size_t LineOfByte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte; ++i) line += text[i] == '\n' ? 1 : 0;
  return line;
}

}  // namespace detail

inline Json SwmToJson(const SwmInstance& swm) {
  Json doc;
  doc["kind"] = "swm-coverage";
  doc["name"] = swm.name;
  doc["items"] = swm.items;
  doc["bidders"] = Json::array();
  for (const auto& b : swm.bidders) {
    Json bidder;
    bidder["name"] = b.name;
    std::vector<std::pair<std::string, double>> universe;
    for (std::size_t i = 0; i < b.utility->point_count(); ++i) {
      universe.emplace_back(b.utility->point_name(i), b.utility->weight(i));
    }
    bidder["universe"] = detail::UniverseJson(universe);
    Json covers = Json::object();
    for (std::size_t u = 0; u < swm.items.size(); ++u) {
      Json points = Json::array();
      b.utility->covers(u).ForEach([&](std::size_t i) { points.push_back(b.utility->point_name(i)); });
      covers[swm.items[u]] = std::move(points);
    }
    bidder["covers"] = std::move(covers);
    doc["bidders"].push_back(std::move(bidder));
  }
  return doc;
}

// Throws InvariantViolation if the oracle has no coverage form.
inline Json InstanceToJson(const Instance& instance) {
  if (instance.swm_origin()) return SwmToJson(*instance.swm_origin());
  const CoverageSpec spec = DescribeCoverage(instance);
  Json doc;
  doc["kind"] = "weighted-coverage";
  doc["name"] = spec.name;
  doc["universe"] = detail::UniverseJson(spec.universe);
  doc["parts"] = Json::array();
  for (const auto& part : spec.parts) {
    Json elements = Json::object();
    for (const auto& e : part.elements) elements[e.name] = e.covers;
    doc["parts"].push_back(Json{{"name", part.name}, {"elements", std::move(elements)}});
  }
  return doc;
}

inline std::string SerializeInstance(const Instance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

// Throws ParseError (with line or field context) or InvariantViolation.
inline Instance ParseInstance(std::string_view text, std::string_view source = "<input>") {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParseError, std::string(source) + ": line " +
                                            std::to_string(detail::LineOfByte(text, e.byte)) +
                                            ": malformed JSON");
  }
  try {
    if (!doc.is_object()) detail::FieldError("document", "expected an object");
    const std::string kind = detail::StringAt(detail::Field(doc, "kind", "document"), "kind");
    if (kind == "weighted-coverage") return detail::CoverageFromJson(doc);
    if (kind == "swm-coverage") return ReduceSwm(detail::SwmFromJson(doc));
    detail::FieldError("kind", "unknown kind '" + kind + "'");
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(source) + ": " +
                              std::string(std::string_view(e.what()).substr(ErrorKindName(e.kind()).size() + 2)));
  }
}

inline Instance ReadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str(), path);
}

inline void WriteInstance(const Instance& instance, const std::string& path) {
  const std::string text = SerializeInstance(instance);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "failed writing '" + path + "'");
}

// Structural equality of two coverage-convertible instances, ignoring the
// order in which universe points are listed.
inline bool EquivalentInstances(const Instance& a, const Instance& b) {
  const CoverageSpec sa = DescribeCoverage(a);
  const CoverageSpec sb = DescribeCoverage(b);
  if (sa.name != sb.name) return false;
  std::map<std::string, double> ua(sa.universe.begin(), sa.universe.end());
  std::map<std::string, double> ub(sb.universe.begin(), sb.universe.end());
  if (ua != ub || sa.parts.size() != sb.parts.size()) return false;
  for (std::size_t p = 0; p < sa.parts.size(); ++p) {
    const auto& pa = sa.parts[p];
    const auto& pb = sb.parts[p];
    if (pa.name != pb.name || pa.elements.size() != pb.elements.size()) return false;
    for (std::size_t k = 0; k < pa.elements.size(); ++k) {
      if (pa.elements[k].name != pb.elements[k].name) return false;
      std::set<std::string> ca(pa.elements[k].covers.begin(), pa.elements[k].covers.end());
      std::set<std::string> cb(pb.elements[k].covers.begin(), pb.elements[k].covers.end());
      if (ca != cb) return false;
    }
  }
  return true;
}

}  // namespace sgl

#endif  // SGL_IO_HPP_
