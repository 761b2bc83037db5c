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

#ifndef SGL_ERROR_HPP_
#define SGL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgl {

enum class ErrorKind {
  kEmptyPart,
  kOverlappingParts,
  kDuplicateName,
  kInvalidName,
  kUnknownElement,
  kNotABase,
  kTooLarge,
  kOutOfRange,
  kInvalidPermutation,
  kParseError,
  kInvariantViolation,
  kIoError,
  kUsageError,
};

constexpr std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyPart: return "EmptyPart";
    case ErrorKind::kOverlappingParts: return "OverlappingParts";
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kInvalidName: return "InvalidName";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kNotABase: return "NotABase";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kInvalidPermutation: return "InvalidPermutation";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kUsageError: return "UsageError";
  }
  return "Unknown";
}

// Every domain failure in the library is reported as an Error carrying a
// kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sgl

#endif  // SGL_ERROR_HPP_
