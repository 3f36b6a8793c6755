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

#include "pathguard/core.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "pathguard/canonicalizer.hpp"

namespace pathguard {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kPathTooLong: return "PathTooLong";
    case Errc::kEmbeddedNul: return "EmbeddedNul";
    case Errc::kNonCanonicalEntry: return "NonCanonicalEntry";
    case Errc::kNonCanonicalPath: return "NonCanonicalPath";
    case Errc::kInvalidName: return "InvalidName";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kOracleDisagreement: return "OracleDisagreement";
    case Errc::kIo: return "Io";
  }
  return "Unknown";
}

Limits::Limits(std::size_t max_path_len) : max_path_len_(max_path_len) {
  if (max_path_len == 0) {
    throw Error(Errc::kInvalidArgument, "max_path_len must be positive");
  }
}

RawPathString validate_raw(std::string_view bytes, const Limits& limits) {
  if (bytes.size() > limits.max_path_len()) {
    throw Error(Errc::kPathTooLong, "path is " + std::to_string(bytes.size()) +
                                        " bytes, limit is " +
                                        std::to_string(limits.max_path_len()));
  }
  if (bytes.find('\0') != std::string_view::npos) {
    throw Error(Errc::kEmbeddedNul, "path contains a NUL byte");
  }
  return RawPathString(std::string(bytes));
}

namespace {

TokenKind classify(std::string_view text) {
  if (text == ".") return TokenKind::kDot;
  if (text == "..") return TokenKind::kDotDot;
  return TokenKind::kNormal;
}

}  // namespace

PathToken::PathToken(std::string text) : text_(std::move(text)), kind_(classify(text_)) {
  if (text_.empty() || text_.find('/') != std::string::npos) {
    throw Error(Errc::kInvalidArgument, "token must be non-empty and contain no '/'");
  }
}

void ComponentStack::push(const PathToken& token) {
  if (token.kind() != TokenKind::kNormal) {
    throw Error(Errc::kInvalidArgument, "only Normal tokens may be pushed");
  }
  items_.push_back(token.text());
}

void ComponentStack::pop() {
  if (!items_.empty()) items_.pop_back();
}

CanonicalPath ComponentStack::to_path() const {
  std::string result = "/";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    result += items_[i];
    if (i != items_.size() - 1) result += '/';
  }
  return CanonicalPath(CanonicalPath::Trusted{}, std::move(result));
}

bool is_canonical_text(std::string_view text) noexcept {
  if (text.empty() || text.front() != '/') return false;
  if (text.size() == 1) return true;
  std::size_t pos = 1;
  while (pos <= text.size()) {
    std::size_t end = text.find('/', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view component = text.substr(pos, end - pos);
    if (component.empty() || component == "." || component == "..") return false;
    pos = end + 1;
  }
  return true;
}

std::vector<std::string> canonical_form_violations(std::string_view output) {
  std::vector<std::string> found;
  if (output.empty() || output.front() != '/') found.emplace_back("missing-leading-slash");
  if (output.find("//") != std::string_view::npos) found.emplace_back("//");
  if (output.find("/./") != std::string_view::npos || output.ends_with("/.") ||
      output == ".") {
    found.emplace_back("/./");
  }
  if (output.find("/../") != std::string_view::npos || output.ends_with("/..") ||
      output == "..") {
    found.emplace_back("/../");
  }
  if (output.size() > 1 && output.back() == '/') found.emplace_back("trailing-slash");
  return found;
}

CanonicalPath CanonicalPath::parse(std::string_view text) {
  if (!is_canonical_text(text)) {
    throw Error(Errc::kNonCanonicalPath, "not a canonical path: \"" + std::string(text) + "\"");
  }
  return CanonicalPath(Trusted{}, std::string(text));
}

std::vector<std::string_view> CanonicalPath::components() const {
  std::vector<std::string_view> out;
  std::string_view view = text_;
  std::size_t pos = 1;
  while (pos < view.size()) {
    std::size_t end = view.find('/', pos);
    if (end == std::string_view::npos) end = view.size();
    out.push_back(view.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CanonicalPath& path) {
  return os << path.text();
}

bool Whitelist::insert(CanonicalPath entry) { return entries_.insert(std::move(entry)).second; }

bool Whitelist::contains(const CanonicalPath& path) const { return entries_.contains(path); }

bool whitelist_contains(const Whitelist& whitelist, const CanonicalPath& path) {
  return whitelist.contains(path);
}

std::vector<SourceLine> read_source_lines(std::string_view source) {
  std::vector<SourceLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (line.ends_with('\r')) line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    if (line.front() == '#') continue;
    lines.push_back({number, std::string(line)});
  }
  return lines;
}

Whitelist load_whitelist(std::string_view source, const Limits& limits, EntryPolicy policy) {
  Whitelist whitelist;
  for (const SourceLine& line : read_source_lines(source)) {
    RawPathString raw = [&] {
      try {
        return validate_raw(line.text, limits);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what(),
                    line.number);
      }
    }();
    CanonicalPath canonical = canonicalize(raw);
    if (canonical.text() != line.text && policy == EntryPolicy::kRejectNonCanonical) {
      throw Error(Errc::kNonCanonicalEntry,
                  "line " + std::to_string(line.number) + ": \"" + line.text +
                      "\" is not canonical (canonical form is \"" + canonical.text() + "\")",
                  line.number);
    }
    whitelist.insert(std::move(canonical));
  }
  return whitelist;
}

Whitelist load_whitelist(std::istream& in, const Limits& limits, EntryPolicy policy) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::kIo, "failed to read whitelist");
  return load_whitelist(buffer.view(), limits, policy);
}

}  // namespace pathguard
