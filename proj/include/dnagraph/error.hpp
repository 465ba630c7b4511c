// Copyright 2026 The dnagraph Authors
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

#ifndef DNAGRAPH_ERROR_HPP_
#define DNAGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnagraph {

enum class ErrorKind {
  kInvalidParameter,
  kUnsupportedParameter,
  kInvalidInput,
  kResourceLimit,
  kConstructionFailure,
  kInternal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kUnsupportedParameter: return "unsupported-parameter";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kConstructionFailure: return "construction-failure";
    case ErrorKind::kInternal: return "internal-error";
  }
  return "unknown";
}

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace dnagraph

#endif  // DNAGRAPH_ERROR_HPP_
