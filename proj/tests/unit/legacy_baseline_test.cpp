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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "de_dotdot_ref.h"
#include "pathguard/canonicalizer.hpp"
#include "pathguard/legacy_baseline.hpp"
#include "pathguard/verifier.hpp"

namespace pathguard {
namespace {

std::string upstream(std::string_view s) {
  std::vector<char> buf(s.begin(), s.end());
  buf.push_back('\0');
  upstream_de_dotdot(buf.data());
  return std::string(buf.data());
}

std::string port(std::string_view s) { return de_dotdot(validate_raw(s)); }

TEST(DeDotdot, DocumentedFlaws) {
  EXPECT_EQ(port("/etc../"), "/etc../");
  EXPECT_EQ(port("/etc/passwd"), "/etc/passwd");
}

TEST(DeDotdot, GoldenValues) {
  EXPECT_EQ(port("./a"), "a");
  EXPECT_EQ(port("/a/b/c/../../../.."), "/..");
  EXPECT_EQ(port("a/.."), "a/..");
  EXPECT_EQ(port("/../etc/passwd"), "etc/passwd");
}

// Snapshot taken from the C routine when the port was written.
TEST(DeDotdot, MatchesGoldenSnapshot) {
  std::ifstream in(PATHGUARD_GOLDEN_DIR "/de_dotdot.tsv");
  ASSERT_TRUE(in) << "missing golden file";
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string input = line.substr(0, tab);
    const std::string expected = line.substr(tab + 1);
    EXPECT_EQ(port(input), expected) << "input \"" << input << "\"";
    EXPECT_EQ(upstream(input), expected) << "input \"" << input << "\"";
    ++rows;
  }
  EXPECT_EQ(rows, 42u);
}

TEST(DeDotdot, MatchesUpstreamExhaustively) {
  EnumerationSpec spec{"/.a", 10};
  std::uint64_t checked = 0;
  enumerate_all(spec, [&](std::string_view s) {
    ++checked;
    ASSERT_EQ(port(s), upstream(s)) << "input \"" << s << "\"";
  });
  EXPECT_EQ(checked, 88573u);
}

TEST(DeDotdot, TextFormStopsAtNul) {
  EXPECT_EQ(de_dotdot_text(std::string("a/../b\0/../..", 13)), "b");
}

RawPathString raw(std::string_view s) { return validate_raw(s); }

TEST(RunDifferential, FlawInputs) {
  const std::vector<RawPathString> corpus{raw("/etc../")};
  const auto records = run_differential(corpus);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].baseline_output, "/etc../");
  EXPECT_EQ(records[0].canonical_output.text(), "/etc..");
  EXPECT_EQ(records[0].residue_found, std::vector<std::string>{".."});
  EXPECT_TRUE(records[0].canonical_residue.empty());
}

TEST(RunDifferential, AbsoluteReachIntoProtectedRoot) {
  const std::vector<RawPathString> corpus{raw("/etc/passwd")};
  const auto records = run_differential(corpus);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].absolute_reach);
  EXPECT_TRUE(records[0].residue_found.empty());
  EXPECT_EQ(records[0].baseline_output, records[0].canonical_output.text());

  DiffOptions nothing_protected;
  nothing_protected.protected_roots.clear();
  EXPECT_TRUE(run_differential(corpus, nothing_protected).empty());
}

TEST(RunDifferential, CanonicalInputsAgree) {
  const std::vector<RawPathString> corpus{raw("/a/b"), raw("/a//b"), raw("./a"), raw("a/b")};
  EXPECT_TRUE(run_differential(corpus).empty());
}

TEST(RunDifferential, RelativeClimbIsReported) {
  const std::vector<RawPathString> corpus{raw("a/b/c/../../../..")};
  const auto records = run_differential(corpus);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].baseline_output, "..");
  EXPECT_EQ(records[0].residue_found, std::vector<std::string>{".."});
}

TEST(RunDifferential, OrderIndependentOfThreads) {
  std::vector<RawPathString> corpus;
  EnumerationSpec spec{"/.a", 6};
  enumerate_all(spec, [&](std::string_view s) { corpus.push_back(validate_raw(s)); });
  const auto serial = run_differential(corpus);
  DiffOptions parallel;
  parallel.threads = 4;
  const auto sharded = run_differential(corpus, parallel);
  ASSERT_EQ(serial.size(), sharded.size());
  ASSERT_FALSE(serial.empty());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].input, sharded[i].input);
    EXPECT_EQ(serial[i].baseline_output, sharded[i].baseline_output);
  }
}

TEST(RunDifferential, CanonicalizerNeverLeavesResidue) {
  std::vector<RawPathString> corpus;
  EnumerationSpec spec{"/.ab", 7};
  enumerate_all(spec, [&](std::string_view s) { corpus.push_back(validate_raw(s)); });
  for (const auto& record : run_differential(corpus)) {
    EXPECT_TRUE(record.canonical_residue.empty()) << record.input.bytes();
  }
}

TEST(LoadCorpus, SameConventionsAsWhitelist) {
  const auto corpus = load_corpus("# flaw corpus\n\n/etc../\r\n  /etc/passwd\n");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].bytes(), "/etc../");
  EXPECT_EQ(corpus[1].bytes(), "/etc/passwd");
}

TEST(LoadCorpus, ReportsLine) {
  try {
    load_corpus("/ok\n" + std::string(5000, 'a') + "\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPathTooLong);
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace pathguard
