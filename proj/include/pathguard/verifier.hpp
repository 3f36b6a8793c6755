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

// Exhaustive bounded verification: every string over a small alphabet up to
// a maximum length is pushed through canonicalize(). Single-letter names
// stand in for arbitrary directory names, so a handful of letters plus '/'
// and '.' exercises every token class.

#ifndef PATHGUARD_VERIFIER_HPP_
#define PATHGUARD_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pathguard/core.hpp"

namespace pathguard {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct EnumerationSpec {
  std::string alphabet = "/.abc";
  std::size_t max_len = 8;
  // Ceiling on the number of strings a single run may visit.
  std::uint64_t budget = kDefaultBudget;
  // Worker threads; enumeration is sharded by first character.
  unsigned threads = 1;
};

// Throws kInvalidArgument unless the alphabet holds '/' and '.', has no NUL
// and no repeated character.
void validate_spec(const EnumerationSpec& spec);

// Sum of |alphabet|^k for k = 0..max_len. Throws kBudgetExceeded when that
// exceeds spec.budget or does not fit in 64 bits.
std::uint64_t enumeration_count(const EnumerationSpec& spec);

// Shortlex: shorter strings first, then lexicographic in alphabet order.
bool shortlex_less(std::string_view alphabet, std::string_view a, std::string_view b);

// Visits every string of length 0..max_len exactly once in shortlex order
// on the calling thread, and returns how many were visited. Any alphabet
// without NUL or repeats is accepted here; the sweeps below additionally
// require '/' and '.'.
std::uint64_t enumerate_all(const EnumerationSpec& spec,
                            const std::function<void(std::string_view)>& visit);

struct ResidueViolation {
  std::string input;
  std::string output;
  std::string offending;
};

struct VerifyReport {
  std::uint64_t visited = 0;
  std::vector<ResidueViolation> violations;
};

// An empty violation list certifies the canonical-form property for every
// string the enumeration covers.
VerifyReport verify_no_residue(const EnumerationSpec& spec);

struct PreimageReport {
  std::uint64_t visited = 0;
  // Shortlex order.
  std::vector<std::string> preimages;
};

// Every enumerated x with canonicalize(x) == target. Each hit is re-checked
// with rewrite_canonicalize(); a disagreement throws kOracleDisagreement.
PreimageReport preimages_of(const EnumerationSpec& spec, const CanonicalPath& target);

}  // namespace pathguard

#endif  // PATHGUARD_VERIFIER_HPP_
