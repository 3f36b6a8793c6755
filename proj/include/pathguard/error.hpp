// Copyright 2026 The pathguard Authors
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

#ifndef PATHGUARD_ERROR_HPP_
#define PATHGUARD_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathguard {

enum class Errc {
  kPathTooLong,
  kEmbeddedNul,
  kNonCanonicalEntry,
  kNonCanonicalPath,
  kInvalidName,
  kInvalidArgument,
  kBudgetExceeded,
  kOracleDisagreement,
  kIo,
};

std::string_view to_string(Errc code);

// All library failures are reported through this type. `line()` is the
// 1-based source line for loader errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace pathguard

#endif  // PATHGUARD_ERROR_HPP_
