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

// Randomized and exhaustive property checks for the canonicalizer.

#include <future>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pathguard/canonicalizer.hpp"
#include "pathguard/rewrite_oracle.hpp"
#include "pathguard/verifier.hpp"
#include "support/properties.hpp"

namespace pathguard {
namespace {

// Mixes separators, dot runs, multi-byte names and backslashes.
std::string random_raw(std::mt19937_64& rng, std::size_t max_pieces = 24) {
  static const std::vector<std::string> kPieces = {
      "/", "//", ".", "..", "...", "a", "b", "etc", "x.y", "..a", "a..", "\\", " ", "\xc3\xa9", "%2e"};
  std::uniform_int_distribution<std::size_t> count(0, max_pieces);
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::string s;
  for (std::size_t n = count(rng); n > 0; --n) s += kPieces[pick(rng)];
  return s;
}

class RandomizedProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0x5eedULL};
};

TEST_F(RandomizedProperty, IdempotentAndResidueFree) {
  for (int i = 0; i < 20000; ++i) {
    const std::string s = random_raw(rng);
    const CanonicalPath once = canonicalize(validate_raw(s));
    ASSERT_TRUE(canonical_form_violations(once.text()).empty()) << s;
    ASSERT_EQ(canonicalize(validate_raw(once.text())), once) << s;
  }
}

TEST_F(RandomizedProperty, AgreesWithRewriteOracle) {
  for (int i = 0; i < 20000; ++i) {
    const std::string s = random_raw(rng);
    ASSERT_EQ(canonicalize(validate_raw(s)).text(), rewrite_canonicalize_text(s)) << s;
  }
}

TEST_F(RandomizedProperty, AbsoluteInputsNeverGrow) {
  for (int i = 0; i < 20000; ++i) {
    const std::string s = "/" + random_raw(rng);
    ASSERT_LE(canonicalize(validate_raw(s)).text().size(), s.size()) << s;
  }
}

TEST_F(RandomizedProperty, TokenCountBound) {
  for (int i = 0; i < 20000; ++i) {
    const std::string s = random_raw(rng);
    const std::size_t bound = (s.size() + 1) / 2 + 1;
    ASSERT_LE(tokenize(validate_raw(s)).size(), bound) << s;
  }
}

TEST_F(RandomizedProperty, TraceInvariant) {
  for (int i = 0; i < 20000; ++i) {
    const std::string s = random_raw(rng);
    const auto [path, trace] = canonicalize_traced(validate_raw(s));
    ASSERT_EQ(path, canonicalize(validate_raw(s)));
    ASSERT_EQ(trace.snapshots.size(), tokenize(validate_raw(s)).size());
    ASSERT_TRUE(testing::trace_invariant_holds(path, trace)) << s;
  }
}

TEST_F(RandomizedProperty, JailedIsConcatenation) {
  for (int i = 0; i < 5000; ++i) {
    const CanonicalPath root = testing::random_canonical(rng, 3);
    const std::string s = random_raw(rng);
    EXPECT_EQ(canonicalize_jailed(root, validate_raw(s)),
              canonicalize(validate_raw(root.text() + "/" + s)));
  }
}

TEST_F(RandomizedProperty, EquivalentMutationsAreAllowed) {
  for (int i = 0; i < 2000; ++i) {
    const CanonicalPath target = testing::random_canonical(rng);
    Whitelist w;
    w.insert(target);
    const std::string s1 = testing::mutate_equivalent(target, rng, 8);
    ASSERT_TRUE(sanitize(validate_raw(s1), w)) << s1 << " vs " << target;
  }
}

TEST(TraceInvariant, DetectsAViolation) {
  // A hand-built trace where a stray component is never popped.
  CanonicalizationTrace trace;
  ComponentStack stack;
  stack.push(PathToken("x"));
  trace.snapshots.push_back({0, PathToken("x"), stack});
  EXPECT_FALSE(testing::trace_invariant_holds(CanonicalPath::parse("/a"), trace));
  EXPECT_TRUE(testing::trace_invariant_holds(CanonicalPath::parse("/x"), trace));
}

TEST(LengthMonotonicity, ExhaustiveAbsolute) {
  enumerate_all({"/.ab", 8}, [](std::string_view s) {
    if (!s.starts_with('/')) return;
    ASSERT_LE(canonicalize(validate_raw(s)).text().size(), s.size()) << s;
  });
}

TEST(LengthMonotonicity, RelativeCanGrowByOne) {
  EXPECT_EQ(canonicalize(validate_raw("a")).text(), "/a");
}

TEST(Concurrency, SameInputsSameOutputs) {
  std::vector<std::string> inputs;
  std::mt19937_64 rng{7};
  for (int i = 0; i < 2000; ++i) inputs.push_back(random_raw(rng));
  auto work = [&] {
    std::vector<std::string> out;
    for (const auto& s : inputs) out.push_back(canonicalize(validate_raw(s)).text());
    return out;
  };
  const auto expected = work();
  std::vector<std::future<std::vector<std::string>>> futures;
  for (int t = 0; t < 4; ++t) futures.push_back(std::async(std::launch::async, work));
  for (auto& f : futures) EXPECT_EQ(f.get(), expected);
}

}  // namespace
}  // namespace pathguard
