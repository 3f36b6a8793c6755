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

#include "pathguard/path_algebra.hpp"

#include <string>

namespace pathguard {

bool is_char_prefix(std::string_view p1, std::string_view p2) noexcept {
  return p1.size() <= p2.size() && p2.compare(0, p1.size(), p1) == 0;
}

bool is_component_prefix(const CanonicalPath& p1, const CanonicalPath& p2) {
  const auto a = p1.components();
  const auto b = p2.components();
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool are_equivalent(std::string_view p1, std::string_view p2) noexcept {
  return p1.size() == p2.size() && is_char_prefix(p1, p2) && is_char_prefix(p2, p1);
}

bool contains_component(std::string_view p, std::string_view name) {
  if (name.empty() || name.find('/') != std::string_view::npos) {
    throw Error(Errc::kInvalidName, "component name must be non-empty and contain no '/'");
  }
  std::string haystack(p);
  haystack += '/';
  std::string needle = "/";
  needle += name;
  needle += '/';
  return haystack.find(needle) != std::string::npos;
}

}  // namespace pathguard
