// Copyright 2026 The itree authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace itree {

/// Base class for all library errors. `code()` is a stable identifier used by
/// the CLI to select exit codes and emit machine-readable diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error("ConfigError", m) {}
};
struct OutOfRangeError : Error {
  explicit OutOfRangeError(const std::string& m) : Error("OutOfRange", m) {}
};
struct TooLargeError : Error {
  explicit TooLargeError(const std::string& m) : Error("TooLarge", m) {}
};
struct NotDecouplableError : Error {
  explicit NotDecouplableError(const std::string& m) : Error("NotDecouplable", m) {}
};
struct InconsistentAmplitudesError : Error {
  explicit InconsistentAmplitudesError(const std::string& m)
      : Error("InconsistentAmplitudes", m) {}
};
struct DegenerateBranchError : Error {
  explicit DegenerateBranchError(const std::string& m) : Error("DegenerateBranch", m) {}
};
struct LengthMismatchError : Error {
  explicit LengthMismatchError(const std::string& m) : Error("LengthMismatch", m) {}
};
struct KeyMismatchError : Error {
  explicit KeyMismatchError(const std::string& m) : Error("KeyMismatch", m) {}
};
struct EmptyStreamError : Error {
  explicit EmptyStreamError(const std::string& m) : Error("EmptyStream", m) {}
};
struct InsufficientExpectedError : Error {
  explicit InsufficientExpectedError(const std::string& m)
      : Error("InsufficientExpected", m) {}
};
struct UnsupportedGateError : Error {
  explicit UnsupportedGateError(const std::string& m) : Error("UnsupportedGate", m) {}
};

}  // namespace itree
