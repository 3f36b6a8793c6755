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

#ifndef PATHGUARD_PATH_ALGEBRA_HPP_
#define PATHGUARD_PATH_ALGEBRA_HPP_

#include <string_view>

#include "pathguard/core.hpp"

namespace pathguard {

// Character-level prefix: "/ab" is a prefix of "/abc".
bool is_char_prefix(std::string_view p1, std::string_view p2) noexcept;

// Component-level prefix: "/ab" is not a prefix of "/abc". The root is a
// prefix of every path.
bool is_component_prefix(const CanonicalPath& p1, const CanonicalPath& p2);

// Same length and mutually char-prefixed, i.e. plain string equality. This
// is not semantic equivalence: "//a" and "/a" are different.
bool are_equivalent(std::string_view p1, std::string_view p2) noexcept;

// True iff "/" + name + "/" occurs in p + "/". The extra separator lets the
// last component match. Throws kInvalidName if `name` is empty or has '/'.
bool contains_component(std::string_view p, std::string_view name);

}  // namespace pathguard

#endif  // PATHGUARD_PATH_ALGEBRA_HPP_
