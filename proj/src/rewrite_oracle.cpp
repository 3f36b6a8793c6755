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

#include "pathguard/rewrite_oracle.hpp"

#include <string>

namespace pathguard {
namespace {

// Leftmost "/T/../" with T a Normal run. Returns the index of the leading
// '/', or npos.
std::size_t find_parent_step(const std::string& s) {
  for (std::size_t up = s.find("/../"); up != std::string::npos; up = s.find("/../", up + 1)) {
    if (up == 0) continue;
    const std::size_t slash = s.rfind('/', up - 1);
    if (slash == std::string::npos) continue;
    const std::string_view t(s.data() + slash + 1, up - slash - 1);
    if (t.empty() || t == "." || t == "..") continue;
    return slash;
  }
  return std::string::npos;
}

// One rewrite. Returns false at the fixpoint.
bool rewrite_once(std::string& s) {
  if (auto at = s.find("//"); at != std::string::npos) {
    s.erase(at, 1);
    return true;
  }
  if (auto at = s.find("/./"); at != std::string::npos) {
    s.erase(at, 2);
    return true;
  }
  if (s.starts_with("/../")) {
    s.erase(0, 3);
    return true;
  }
  if (auto at = find_parent_step(s); at != std::string::npos) {
    const std::size_t len = s.find("/../", at + 1) + 4 - at;
    s.replace(at, len, "/");
    return true;
  }
  return false;
}

}  // namespace

std::string rewrite_canonicalize_text(std::string_view bytes) {
  std::string s;
  s.reserve(bytes.size() + 2);
  if (!bytes.starts_with('/')) s += '/';
  s += bytes;
  s += '/';
  while (rewrite_once(s)) {
  }
  if (s.size() > 1) s.pop_back();
  return s;
}

CanonicalPath rewrite_canonicalize(const RawPathString& raw) {
  return CanonicalPath::parse(rewrite_canonicalize_text(raw.bytes()));
}

}  // namespace pathguard
