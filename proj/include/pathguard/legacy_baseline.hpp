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

// Port of de_dotdot() from ACME Labs' thttpd / mini_httpd, kept
// behavior-identical to the C routine (including its flaws), plus a runner
// that compares it against canonicalize().
//
// The C routine, in order:
//   1. collapses every run of '/' to one '/';
//   2. strips any number of leading "./", then removes every "/./";
//   3. alternately strips leading "../" and removes the first "xxx/../";
//   4. repeatedly elides a trailing "xxx/.." while a '/' precedes xxx.
// It never anchors the path, so absolute inputs pass through untouched and
// tokens such as "etc.." survive.

#ifndef PATHGUARD_LEGACY_BASELINE_HPP_
#define PATHGUARD_LEGACY_BASELINE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathguard/core.hpp"

namespace pathguard {

std::string de_dotdot(const RawPathString& raw);
std::string de_dotdot_text(std::string file);

// Substrings a traversal-free output must not contain, in report order.
inline constexpr std::string_view kBaselineResidue[] = {"..", "//", "/./", "/../"};

struct DivergenceRecord {
  RawPathString input;
  std::string baseline_output;
  CanonicalPath canonical_output;
  // Members of kBaselineResidue present in baseline_output.
  std::vector<std::string> residue_found;
  // baseline_output is absolute and names a file under a protected root:
  // the routine let a bottom-up reach from "/" through.
  bool absolute_reach = false;
  // Canonical-form violations in canonical_output. Always empty unless the
  // canonicalizer is broken.
  std::vector<std::string> canonical_residue;
};

struct DiffOptions {
  // Roots whose contents the baseline is presumed to keep out of reach.
  std::vector<CanonicalPath> protected_roots = {CanonicalPath::parse("/etc")};
  unsigned threads = 1;
};

// One record per input where the outputs differ (ignoring the leading "/"
// the canonicalizer adds to relative inputs), residue is present, or an
// absolute reach into a protected root occurs. Output order follows input
// order regardless of `threads`.
std::vector<DivergenceRecord> run_differential(std::span<const RawPathString> corpus,
                                               const DiffOptions& options = DiffOptions{});

// Corpus file: one raw path per line, same comment/blank rules as the
// whitelist file.
std::vector<RawPathString> load_corpus(std::string_view source,
                                       const Limits& limits = Limits{});

}  // namespace pathguard

#endif  // PATHGUARD_LEGACY_BASELINE_HPP_
