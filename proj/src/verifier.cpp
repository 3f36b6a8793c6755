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

#include "pathguard/verifier.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "pathguard/canonicalizer.hpp"
#include "pathguard/rewrite_oracle.hpp"

namespace pathguard {
namespace {

// Odometer over all strings `prefix + w` with |w| == len, in alphabet order.
template <typename F>
void enumerate_fixed(std::string_view alphabet, std::string& buffer, std::size_t prefix_len,
                     std::size_t len, F& visit) {
  std::vector<std::size_t> digits(len, 0);
  buffer.resize(prefix_len + len);
  for (std::size_t i = 0; i < len; ++i) buffer[prefix_len + i] = alphabet[0];
  for (;;) {
    visit(std::string_view(buffer));
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < alphabet.size()) {
        buffer[prefix_len + pos] = alphabet[digits[pos]];
        break;
      }
      digits[pos] = 0;
      buffer[prefix_len + pos] = alphabet[0];
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

// Runs `make_visitor(shard)` per worker; strings are split by first
// character. The empty string belongs to shard 0.
template <typename MakeVisitor>
void enumerate_sharded(const EnumerationSpec& spec, MakeVisitor&& make_visitor) {
  const std::string_view alphabet = spec.alphabet;
  const unsigned workers = std::clamp<unsigned>(spec.threads, 1, alphabet.size());
  auto run_shard = [&](unsigned shard) {
    auto visit = make_visitor(shard);
    std::string buffer;
    if (shard == 0) visit(std::string_view{});
    for (std::size_t first = shard; first < alphabet.size(); first += workers) {
      buffer.assign(1, alphabet[first]);
      for (std::size_t len = 1; len <= spec.max_len; ++len) {
        enumerate_fixed(alphabet, buffer, 1, len - 1, visit);
      }
    }
  };
  if (workers == 1) {
    run_shard(0);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_shard(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Limits sweep_limits(const EnumerationSpec& spec) {
  return Limits{std::max(spec.max_len, kDefaultMaxPathLen)};
}

}  // namespace

namespace {

void validate_alphabet(std::string_view a) {
  if (a.empty()) throw Error(Errc::kInvalidArgument, "alphabet is empty");
  if (a.find('\0') != std::string_view::npos) {
    throw Error(Errc::kInvalidArgument, "alphabet must not contain NUL");
  }
  std::array<bool, 256> seen{};
  for (unsigned char c : a) {
    if (seen[c]) throw Error(Errc::kInvalidArgument, "alphabet has a repeated character");
    seen[c] = true;
  }
}

}  // namespace

void validate_spec(const EnumerationSpec& spec) {
  const std::string_view a = spec.alphabet;
  if (a.find('/') == std::string_view::npos || a.find('.') == std::string_view::npos) {
    throw Error(Errc::kInvalidArgument, "alphabet must contain '/' and '.'");
  }
  validate_alphabet(a);
}

std::uint64_t enumeration_count(const EnumerationSpec& spec) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t base = spec.alphabet.size();
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t k = 0; k <= spec.max_len; ++k) {
    if (total > kMax - term || total + term > spec.budget) {
      throw Error(Errc::kBudgetExceeded,
                  "enumeration exceeds budget of " + std::to_string(spec.budget) + " strings");
    }
    total += term;
    if (k < spec.max_len) {
      if (base != 0 && term > kMax / base) {
        throw Error(Errc::kBudgetExceeded, "enumeration size overflows 64 bits");
      }
      term *= base;
    }
  }
  return total;
}

bool shortlex_less(std::string_view alphabet, std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return alphabet.find(a[i]) < alphabet.find(b[i]);
  }
  return false;
}

std::uint64_t enumerate_all(const EnumerationSpec& spec,
                            const std::function<void(std::string_view)>& visit) {
  validate_alphabet(spec.alphabet);
  enumeration_count(spec);
  std::uint64_t visited = 0;
  std::string buffer;
  auto counting = [&](std::string_view s) {
    ++visited;
    visit(s);
  };
  for (std::size_t len = 0; len <= spec.max_len; ++len) {
    enumerate_fixed(spec.alphabet, buffer, 0, len, counting);
  }
  return visited;
}

VerifyReport verify_no_residue(const EnumerationSpec& spec) {
  validate_spec(spec);
  VerifyReport report;
  report.visited = enumeration_count(spec);
  const Limits limits = sweep_limits(spec);

  std::mutex mu;
  enumerate_sharded(spec, [&](unsigned) {
    return [&](std::string_view input) {
      const CanonicalPath out = canonicalize(validate_raw(input, limits));
      auto offending = canonical_form_violations(out.text());
      if (offending.empty()) return;
      std::lock_guard lock(mu);
      for (auto& o : offending) {
        report.violations.push_back({std::string(input), out.text(), std::move(o)});
      }
    };
  });
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [&](const ResidueViolation& x, const ResidueViolation& y) {
                     return shortlex_less(spec.alphabet, x.input, y.input);
                   });
  return report;
}

PreimageReport preimages_of(const EnumerationSpec& spec, const CanonicalPath& target) {
  validate_spec(spec);
  PreimageReport report;
  report.visited = enumeration_count(spec);
  const Limits limits = sweep_limits(spec);

  std::mutex mu;
  enumerate_sharded(spec, [&](unsigned) {
    return [&](std::string_view input) {
      if (canonicalize(validate_raw(input, limits)) != target) return;
      std::string oracle = rewrite_canonicalize_text(input);
      std::lock_guard lock(mu);
      if (oracle != target.text()) {
        throw Error(Errc::kOracleDisagreement, "\"" + std::string(input) + "\": stack gives " +
                                                   target.text() + ", rewriting gives " + oracle);
      }
      report.preimages.emplace_back(input);
    };
  });
  std::sort(report.preimages.begin(), report.preimages.end(),
            [&](const std::string& x, const std::string& y) {
              return shortlex_less(spec.alphabet, x, y);
            });
  return report;
}

}  // namespace pathguard
