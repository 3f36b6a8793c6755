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

#include "pathguard/canonicalizer.hpp"

#include <string>
#include <string_view>

namespace pathguard {
namespace {

// Calls `on_token` for each maximal run of non-'/' bytes, left to right.
template <typename F>
void for_each_token(std::string_view bytes, F&& on_token) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    pos = bytes.find_first_not_of('/', pos);
    if (pos == std::string_view::npos) return;
    std::size_t end = bytes.find('/', pos);
    if (end == std::string_view::npos) end = bytes.size();
    on_token(bytes.substr(pos, end - pos));
    pos = end;
  }
}

// Applies one token to the stack. Returns false for a ".." on an empty stack.
bool apply(ComponentStack& stack, const PathToken& token) {
  switch (token.kind()) {
    case TokenKind::kDotDot:
      if (stack.empty()) return false;
      stack.pop();
      return true;
    case TokenKind::kDot:
      return true;
    case TokenKind::kNormal:
      stack.push(token);
      return true;
  }
  return true;
}

}  // namespace

std::vector<PathToken> tokenize(const RawPathString& raw) {
  std::vector<PathToken> tokens;
  for_each_token(raw.bytes(), [&](std::string_view t) { tokens.emplace_back(std::string(t)); });
  return tokens;
}

CanonicalPath canonicalize(const RawPathString& raw, std::size_t& underflows) {
  ComponentStack stack;
  underflows = 0;
  for_each_token(raw.bytes(), [&](std::string_view t) {
    if (!apply(stack, PathToken(std::string(t)))) ++underflows;
  });
  return stack.to_path();
}

CanonicalPath canonicalize(const RawPathString& raw) {
  std::size_t ignored = 0;
  return canonicalize(raw, ignored);
}

CanonicalPath stack_to_string(const ComponentStack& stack) { return stack.to_path(); }

bool sanitize(const RawPathString& raw, const Whitelist& whitelist) {
  return whitelist_contains(whitelist, canonicalize(raw));
}

std::pair<CanonicalPath, CanonicalizationTrace> canonicalize_traced(const RawPathString& raw) {
  ComponentStack stack;
  CanonicalizationTrace trace;
  std::size_t iteration = 0;
  for_each_token(raw.bytes(), [&](std::string_view t) {
    PathToken token{std::string(t)};
    apply(stack, token);
    trace.snapshots.push_back({iteration++, std::move(token), stack});
  });
  return {stack.to_path(), std::move(trace)};
}

CanonicalPath canonicalize_jailed(const CanonicalPath& root, const RawPathString& raw,
                                  const Limits& limits) {
  std::string combined = root.text();
  combined += '/';
  combined += raw.bytes();
  return canonicalize(validate_raw(combined, limits));
}

}  // namespace pathguard
