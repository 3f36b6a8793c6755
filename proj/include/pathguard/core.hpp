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

// Shared domain types: validated raw input, tokens, the component stack,
// canonical paths and the whitelist store.

#ifndef PATHGUARD_CORE_HPP_
#define PATHGUARD_CORE_HPP_

#include <compare>
#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathguard/error.hpp"

namespace pathguard {

inline constexpr std::size_t kDefaultMaxPathLen = 4096;

class Limits {
 public:
  constexpr Limits() = default;
  explicit Limits(std::size_t max_path_len);

  constexpr std::size_t max_path_len() const noexcept { return max_path_len_; }

 private:
  std::size_t max_path_len_ = kDefaultMaxPathLen;
};

// Untrusted path bytes that passed length and NUL checks. The only way to
// obtain one is validate_raw().
class RawPathString {
 public:
  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  friend bool operator==(const RawPathString&, const RawPathString&) = default;

 private:
  friend RawPathString validate_raw(std::string_view bytes, const Limits& limits);
  explicit RawPathString(std::string bytes) : bytes_(std::move(bytes)) {}

  std::string bytes_;
};

// Throws Error{kPathTooLong} or Error{kEmbeddedNul}.
RawPathString validate_raw(std::string_view bytes, const Limits& limits = Limits{});

enum class TokenKind { kNormal, kDot, kDotDot };

class PathToken {
 public:
  // `text` must be non-empty and free of '/'; throws kInvalidArgument otherwise.
  explicit PathToken(std::string text);

  const std::string& text() const noexcept { return text_; }
  TokenKind kind() const noexcept { return kind_; }

  friend bool operator==(const PathToken&, const PathToken&) = default;

 private:
  std::string text_;
  TokenKind kind_;
};

class CanonicalPath;

// Stack of Normal components, bottom to top. Dot and DotDot tokens are
// consumed by the algorithm and never stored.
class ComponentStack {
 public:
  ComponentStack() = default;

  // Throws kInvalidArgument for a non-Normal token.
  void push(const PathToken& token);
  void pop();
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<std::string>& items() const noexcept { return items_; }

  // "/" for an empty stack, otherwise "/" followed by the items joined by
  // "/", without a trailing separator.
  CanonicalPath to_path() const;

  friend bool operator==(const ComponentStack&, const ComponentStack&) = default;

 private:
  std::vector<std::string> items_;
};

// True iff `text` is "/" or "/" followed by "/"-separated components, none
// empty, "." or "..". This is exactly the set of canonicalization fixpoints.
bool is_canonical_text(std::string_view text) noexcept;

// Canonical-form violations found in a supposedly canonical output, in this
// order: "missing-leading-slash", "//", "/./", "/../", "trailing-slash".
// A final "/." or "/.." counts as "/./" or "/../" (the implied trailing
// separator). Empty iff is_canonical_text(output).
std::vector<std::string> canonical_form_violations(std::string_view output);

class CanonicalPath {
 public:
  // The root path "/".
  CanonicalPath() : text_("/") {}

  // Throws kNonCanonicalPath if `text` is not already canonical.
  static CanonicalPath parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  bool is_root() const noexcept { return text_.size() == 1; }

  // Component sequence; empty for the root.
  std::vector<std::string_view> components() const;

  friend bool operator==(const CanonicalPath&, const CanonicalPath&) = default;
  friend auto operator<=>(const CanonicalPath&, const CanonicalPath&) = default;

 private:
  friend class ComponentStack;
  struct Trusted {};
  CanonicalPath(Trusted, std::string text) : text_(std::move(text)) {}

  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const CanonicalPath& path);

class Whitelist {
 public:
  Whitelist() = default;

  // Adds an already-canonical path. Returns false if it was present.
  bool insert(CanonicalPath entry);

  // Exact string equality against the stored entries.
  bool contains(const CanonicalPath& path) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::set<CanonicalPath>& entries() const noexcept { return entries_; }

 private:
  std::set<CanonicalPath> entries_;
};

enum class EntryPolicy {
  kRejectNonCanonical,
  kCanonicalize,
};

// Splits line-oriented text: "\n" or "\r\n" endings, leading and trailing
// spaces/tabs stripped, blank lines and lines starting with "#" skipped.
// Each surviving line is returned with its 1-based line number.
struct SourceLine {
  std::size_t number;
  std::string text;
};
std::vector<SourceLine> read_source_lines(std::string_view source);

// Errors carry the offending line number: kNonCanonicalEntry, and
// kEmbeddedNul / kPathTooLong from per-line validation.
Whitelist load_whitelist(std::string_view source, const Limits& limits = Limits{},
                         EntryPolicy policy = EntryPolicy::kRejectNonCanonical);
Whitelist load_whitelist(std::istream& in, const Limits& limits = Limits{},
                         EntryPolicy policy = EntryPolicy::kRejectNonCanonical);

bool whitelist_contains(const Whitelist& whitelist, const CanonicalPath& path);

}  // namespace pathguard

#endif  // PATHGUARD_CORE_HPP_
