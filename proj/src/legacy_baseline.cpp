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

#include "pathguard/legacy_baseline.hpp"

#include <algorithm>
#include <thread>

#include "pathguard/canonicalizer.hpp"
#include "pathguard/path_algebra.hpp"

namespace pathguard {

// Index-based transcription of the C routine. Each step names the C
// statement it mirrors; `file` plays the role of the NUL-terminated buffer.
std::string de_dotdot_text(std::string file) {
  if (auto nul = file.find('\0'); nul != std::string::npos) file.resize(nul);

  // Collapse any multiple / sequences.
  for (auto cp = file.find("//"); cp != std::string::npos; cp = file.find("//")) {
    std::size_t cp2 = cp + 2;
    while (cp2 < file.size() && file[cp2] == '/') ++cp2;
    file.erase(cp + 1, cp2 - (cp + 1));
  }

  // Remove leading ./ and any /./ sequences.
  while (file.starts_with("./")) file.erase(0, 2);
  for (auto cp = file.find("/./"); cp != std::string::npos; cp = file.find("/./")) {
    file.erase(cp, 2);
  }

  // Alternate between removing leading ../ and removing xxx/../
  for (;;) {
    while (file.starts_with("../")) file.erase(0, 3);
    const auto cp = file.find("/../");
    if (cp == std::string::npos) break;
    // cp2 walks back from cp - 1 to the previous '/', or to one before the
    // start of the buffer.
    std::ptrdiff_t cp2 = static_cast<std::ptrdiff_t>(cp) - 1;
    while (cp2 >= 0 && file[cp2] != '/') --cp2;
    file.erase(static_cast<std::size_t>(cp2 + 1), cp + 4 - static_cast<std::size_t>(cp2 + 1));
  }

  // Also elide any xxx/.. at the end.
  while (file.size() > 3 && file.ends_with("/..")) {
    const std::size_t cp = file.size() - 3;
    std::ptrdiff_t cp2 = static_cast<std::ptrdiff_t>(cp) - 1;
    while (cp2 >= 0 && file[cp2] != '/') --cp2;
    if (cp2 < 0) break;
    file.resize(static_cast<std::size_t>(cp2));
  }
  return file;
}

std::string de_dotdot(const RawPathString& raw) { return de_dotdot_text(raw.bytes()); }

namespace {

bool under_any(const CanonicalPath& path, const std::vector<CanonicalPath>& roots) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](const CanonicalPath& root) { return is_component_prefix(root, path); });
}

std::optional<DivergenceRecord> compare_one(const RawPathString& input, const DiffOptions& options) {
  std::string baseline = de_dotdot(input);
  CanonicalPath canonical = canonicalize(input);

  // Relative inputs are compared without the root anchor the canonicalizer
  // adds, so "./a" -> "a" versus "/a" is not a divergence.
  std::string_view expected = canonical.text();
  if (!input.bytes().starts_with('/')) expected.remove_prefix(1);

  std::vector<std::string> residue;
  for (std::string_view needle : kBaselineResidue) {
    if (baseline.find(needle) != std::string::npos) residue.emplace_back(needle);
  }
  const bool reach = baseline.starts_with('/') && under_any(canonical, options.protected_roots);
  auto canonical_residue = canonical_form_violations(canonical.text());

  if (baseline == expected && residue.empty() && !reach && canonical_residue.empty()) {
    return std::nullopt;
  }
  return DivergenceRecord{input,         std::move(baseline),         std::move(canonical),
                          std::move(residue), reach, std::move(canonical_residue)};
}

}  // namespace

std::vector<DivergenceRecord> run_differential(std::span<const RawPathString> corpus,
                                               const DiffOptions& options) {
  std::vector<std::optional<DivergenceRecord>> slots(corpus.size());
  const unsigned workers =
      std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) slots[i] = compare_one(corpus[i], options);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += workers) {
          slots[i] = compare_one(corpus[i], options);
        }
      });
    }
  }
  std::vector<DivergenceRecord> records;
  for (auto& slot : slots) {
    if (slot) records.push_back(std::move(*slot));
  }
  return records;
}

std::vector<RawPathString> load_corpus(std::string_view source, const Limits& limits) {
  std::vector<RawPathString> corpus;
  for (const SourceLine& line : read_source_lines(source)) {
    try {
      corpus.push_back(validate_raw(line.text, limits));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what(), line.number);
    }
  }
  return corpus;
}

}  // namespace pathguard
