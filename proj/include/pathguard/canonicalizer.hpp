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

// Stack-based lexical canonicalization and whitelist sanitization.
//
// Tokens are the maximal runs of non-'/' bytes. They are processed left to
// right: a Normal token is pushed, "." is skipped, and ".." pops the most
// recent component or is skipped when the stack is empty. The result is the
// stack rendered as an absolute path. No filesystem access happens here.

#ifndef PATHGUARD_CANONICALIZER_HPP_
#define PATHGUARD_CANONICALIZER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "pathguard/core.hpp"

namespace pathguard {

std::vector<PathToken> tokenize(const RawPathString& raw);

CanonicalPath canonicalize(const RawPathString& raw);

// Same result as canonicalize(). `underflows` receives the number of ".."
// tokens that were skipped because the stack was already empty; callers use
// it to log probable traversal attempts.
CanonicalPath canonicalize(const RawPathString& raw, std::size_t& underflows);

CanonicalPath stack_to_string(const ComponentStack& stack);

// Default-deny: an empty whitelist rejects everything.
bool sanitize(const RawPathString& raw, const Whitelist& whitelist);

struct TraceSnapshot {
  std::size_t iteration;
  PathToken token;
  ComponentStack stack_after;
};

struct CanonicalizationTrace {
  std::vector<TraceSnapshot> snapshots;
};

std::pair<CanonicalPath, CanonicalizationTrace> canonicalize_traced(
    const RawPathString& raw);

// canonicalize(root + "/" + raw). The result can leave `root` when `raw`
// climbs with ".."; pair this with a whitelist or a component-prefix check.
// Throws kPathTooLong if the combined string exceeds `limits`.
CanonicalPath canonicalize_jailed(const CanonicalPath& root, const RawPathString& raw,
                                  const Limits& limits = Limits{});

}  // namespace pathguard

#endif  // PATHGUARD_CANONICALIZER_HPP_
