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

#ifndef SGL_FORMAT_HPP_
#define SGL_FORMAT_HPP_

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace sgl {

// Shortest decimal that round-trips to the same double ("4", "0.5", ...).
inline std::string FormatNumber(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

// Fixed six decimals, for human-readable reports.
inline std::string FormatFixed6(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  return std::string(buf.data());
}

}  // namespace sgl

#endif  // SGL_FORMAT_HPP_
