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

// Reference canonicalizer based on fixpoint string rewriting. It exists to
// check the stack implementation and deliberately shares no code with it.
//
// After anchoring ("/" + x + "/" as needed) the rules below are tried in
// order, each at its leftmost match, until none applies:
//
//   "//"      -> "/"
//   "/./"     -> "/"
//   "/../"    -> "/"   only at the start of the string
//   "/T/../"  -> "/"   T a run of non-'/' bytes other than "." and ".."
//
// Every rule shortens the string, so the loop runs at most len(x) times.
// It is quadratic and meant for tests and sweeps, not production.

#ifndef PATHGUARD_REWRITE_ORACLE_HPP_
#define PATHGUARD_REWRITE_ORACLE_HPP_

#include <string>
#include <string_view>

#include "pathguard/core.hpp"

namespace pathguard {

CanonicalPath rewrite_canonicalize(const RawPathString& raw);

// Unvalidated form used by enumeration sweeps; returns the canonical text.
std::string rewrite_canonicalize_text(std::string_view bytes);

}  // namespace pathguard

#endif  // PATHGUARD_REWRITE_ORACLE_HPP_
