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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathguard/canonicalizer.hpp"
#include "pathguard/core.hpp"
#include "pathguard/legacy_baseline.hpp"
#include "pathguard/verifier.hpp"

namespace pathguard::cli {
namespace {

using Json = nlohmann::ordered_json;

// Diagnosed before any decision; always maps to kUsageError.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{std::string("cannot open ") + what + " \"" + path + "\""};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UsageError{std::string("cannot read ") + what + " \"" + path + "\""};
  return buffer.str();
}

// Batch mode input: one path per line, only the line terminator removed.
std::vector<std::string> read_batch(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.ends_with('\r')) line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

RawPathString validate_arg(const std::string& path) {
  try {
    return validate_raw(path);
  } catch (const Error& e) {
    throw UsageError{std::string(to_string(e.code())) + ": " + e.what()};
  }
}

std::optional<CanonicalPath> parse_root(const std::string& root) {
  if (root.empty()) return std::nullopt;
  try {
    return CanonicalPath::parse(root);
  } catch (const Error& e) {
    throw UsageError{std::string("--root: ") + e.what()};
  }
}

// Canonical form of `raw`, optionally prefixed by `root`.
CanonicalPath resolve(const std::optional<CanonicalPath>& root, const RawPathString& raw,
                      std::size_t& underflows) {
  if (!root) return canonicalize(raw, underflows);
  try {
    return canonicalize(validate_raw(root->text() + "/" + raw.bytes()), underflows);
  } catch (const Error& e) {
    throw UsageError{std::string(to_string(e.code())) + ": " + e.what()};
  }
}

std::vector<std::string> collect_inputs(bool use_stdin, const std::optional<std::string>& path,
                                        std::istream& in) {
  if (use_stdin) {
    if (path) throw UsageError{"give either a path argument or --stdin, not both"};
    return read_batch(in);
  }
  if (!path) throw UsageError{"a path argument is required"};
  return {*path};
}

struct CanonOptions {
  std::optional<std::string> path;
  std::string root;
  bool strict_underflow = false;
  bool use_stdin = false;
};

int cmd_canon(const CanonOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto root = parse_root(opt.root);
  std::vector<RawPathString> inputs;
  for (const auto& s : collect_inputs(opt.use_stdin, opt.path, in)) inputs.push_back(validate_arg(s));

  std::vector<CanonicalPath> results;
  for (const auto& raw : inputs) {
    std::size_t underflows = 0;
    results.push_back(resolve(root, raw, underflows));
    if (opt.strict_underflow && underflows > 0) {
      err << "warning: " << underflows << " \"..\" token(s) above root in \"" << raw.bytes()
          << "\"\n";
    }
  }
  for (const auto& path : results) out << path.text() << '\n';
  return kAllowed;
}

struct CheckOptions {
  std::optional<std::string> path;
  std::string whitelist;
  std::string root;
  bool canonicalize_entries = false;
  bool use_stdin = false;
};

int cmd_check(const CheckOptions& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const auto root = parse_root(opt.root);
  const std::string source = read_file(opt.whitelist, "whitelist");
  Whitelist whitelist;
  try {
    whitelist = load_whitelist(source, Limits{},
                               opt.canonicalize_entries ? EntryPolicy::kCanonicalize
                                                        : EntryPolicy::kRejectNonCanonical);
  } catch (const Error& e) {
    throw UsageError{opt.whitelist + ": " + std::string(to_string(e.code())) + ": " + e.what()};
  }

  std::vector<RawPathString> inputs;
  for (const auto& s : collect_inputs(opt.use_stdin, opt.path, in)) inputs.push_back(validate_arg(s));
  std::vector<CanonicalPath> resolved;
  for (const auto& raw : inputs) {
    std::size_t underflows = 0;
    resolved.push_back(resolve(root, raw, underflows));
  }

  bool all_allowed = true;
  for (const auto& path : resolved) {
    const bool allowed = whitelist_contains(whitelist, path);
    all_allowed = all_allowed && allowed;
    out << (allowed ? "ALLOW " : "DENY ") << path.text() << '\n';
  }
  return all_allowed ? kAllowed : kDenied;
}

struct VerifyOptions {
  std::size_t max_len = 8;
  std::string alphabet = "/.abc";
  std::string target;
  std::string format = "plain";
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  EnumerationSpec spec{opt.alphabet, opt.max_len, opt.budget, opt.threads};
  std::optional<CanonicalPath> target;
  try {
    validate_spec(spec);
    enumeration_count(spec);
    if (!opt.target.empty()) target = CanonicalPath::parse(opt.target);
  } catch (const Error& e) {
    throw UsageError{std::string(to_string(e.code())) + ": " + e.what()};
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  };
  const bool structured = opt.format == "structured";

  if (target) {
    const PreimageReport report = preimages_of(spec, *target);
    if (structured) {
      Json doc;
      doc["mode"] = "preimages";
      doc["alphabet"] = spec.alphabet;
      doc["max_len"] = spec.max_len;
      doc["target"] = target->text();
      doc["records"] = Json::array();
      for (const auto& p : report.preimages) {
        doc["records"].push_back(Json{{"input", p}, {"output", target->text()}});
      }
      doc["summary"] = Json{{"visited", report.visited},
                            {"violations", 0},
                            {"preimages", report.preimages.size()},
                            {"elapsed_ms", elapsed_ms()}};
      out << doc.dump(2) << '\n';
    } else {
      for (const auto& p : report.preimages) out << p << '\n';
      out << report.preimages.size() << " preimages of " << target->text() << " / "
          << report.visited << " visited\n";
    }
    return kAllowed;
  }

  const VerifyReport report = verify_no_residue(spec);
  if (structured) {
    Json doc;
    doc["mode"] = "residue";
    doc["alphabet"] = spec.alphabet;
    doc["max_len"] = spec.max_len;
    doc["records"] = Json::array();
    for (const auto& v : report.violations) {
      doc["records"].push_back(
          Json{{"input", v.input}, {"output", v.output}, {"offending", v.offending}});
    }
    doc["summary"] = Json{{"visited", report.visited},
                          {"violations", report.violations.size()},
                          {"elapsed_ms", elapsed_ms()}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& v : report.violations) {
      out << v.input << '\t' << v.output << '\t' << v.offending << '\n';
    }
    out << report.violations.size() << " violations / " << report.visited << " visited\n";
  }
  return report.violations.empty() ? kAllowed : kDenied;
}

struct DiffCliOptions {
  std::string corpus;
  std::string format = "plain";
  std::vector<std::string> protect;
  unsigned threads = 1;
};

std::string join(const std::vector<std::string>& items, char sep) {
  std::string s;
  for (const auto& item : items) {
    if (!s.empty()) s += sep;
    s += item;
  }
  return s;
}

int cmd_diff(const DiffCliOptions& opt, std::ostream& out) {
  const std::string source = read_file(opt.corpus, "corpus");
  std::vector<RawPathString> corpus;
  DiffOptions options;
  options.threads = opt.threads;
  try {
    corpus = load_corpus(source);
    if (!opt.protect.empty()) {
      options.protected_roots.clear();
      for (const auto& p : opt.protect) options.protected_roots.push_back(CanonicalPath::parse(p));
    }
  } catch (const Error& e) {
    throw UsageError{std::string(to_string(e.code())) + ": " + e.what()};
  }

  const auto records = run_differential(corpus, options);
  std::size_t with_residue = 0;
  for (const auto& r : records) with_residue += r.residue_found.empty() ? 0 : 1;

  if (opt.format == "structured") {
    Json doc;
    doc["mode"] = "diff";
    doc["records"] = Json::array();
    for (const auto& r : records) {
      doc["records"].push_back(Json{{"input", r.input.bytes()},
                                    {"baseline_output", r.baseline_output},
                                    {"canonical_output", r.canonical_output.text()},
                                    {"residue_found", r.residue_found},
                                    {"absolute_reach", r.absolute_reach},
                                    {"canonical_residue", r.canonical_residue}});
    }
    doc["summary"] = Json{{"inputs", corpus.size()},
                          {"divergences", records.size()},
                          {"with_residue", with_residue}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : records) {
      out << r.input.bytes() << '\t' << r.baseline_output << '\t' << r.canonical_output.text()
          << "\tresidue=" << join(r.residue_found, ',')
          << "\treach=" << (r.absolute_reach ? "yes" : "no") << '\n';
    }
    out << records.size() << " divergences / " << corpus.size() << " inputs, " << with_residue
        << " with residue\n";
  }
  return with_residue > 0 ? kDenied : kAllowed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lexical path canonicalization and traversal checks", "pathguard"};
  app.require_subcommand(1);

  CanonOptions canon;
  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form of a path");
  canon_cmd->add_option("path", canon.path, "Raw path");
  canon_cmd->add_option("--root", canon.root, "Canonical root prepended to the path");
  canon_cmd->add_flag("--strict-underflow", canon.strict_underflow,
                      "Warn on stderr when \"..\" climbs above the root");
  canon_cmd->add_flag("--stdin", canon.use_stdin, "Read one path per line from stdin");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Canonicalize a path and test it against a whitelist");
  check_cmd->add_option("path", check.path, "Raw path");
  check_cmd->add_option("--whitelist", check.whitelist, "Whitelist file")->required();
  check_cmd->add_option("--root", check.root, "Canonical root prepended to the path");
  check_cmd->add_flag("--canonicalize-entries", check.canonicalize_entries,
                      "Canonicalize whitelist entries instead of rejecting them");
  check_cmd->add_flag("--stdin", check.use_stdin, "Read one path per line from stdin");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check canonical output over an alphabet");
  verify_cmd->add_option("--max-len", verify.max_len, "Maximum input length")->capture_default_str();
  verify_cmd->add_option("--alphabet", verify.alphabet, "Input characters; must include '/' and '.'")
      ->capture_default_str();
  verify_cmd->add_option("--target", verify.target, "List inputs that canonicalize to this path");
  verify_cmd->add_option("--format", verify.format, "Report format")
      ->check(CLI::IsMember({"plain", "structured"}))
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  verify_cmd->add_option("--budget", verify.budget, "Maximum number of strings to visit")
      ->capture_default_str();

  DiffCliOptions diff;
  auto* diff_cmd = app.add_subcommand("diff", "Compare de_dotdot against the canonicalizer");
  diff_cmd->add_option("--corpus", diff.corpus, "Corpus file")->required();
  diff_cmd->add_option("--format", diff.format, "Report format")
      ->check(CLI::IsMember({"plain", "structured"}))
      ->capture_default_str();
  diff_cmd->add_option("--protect", diff.protect, "Protected root (repeatable, default /etc)");
  diff_cmd->add_option("--threads", diff.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::ostringstream out_buf;
  std::ostringstream err_buf;
  int status = kUsageError;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (canon_cmd->parsed()) {
      status = cmd_canon(canon, in, out_buf, err_buf);
    } else if (check_cmd->parsed()) {
      status = cmd_check(check, in, out_buf, err_buf);
    } else if (verify_cmd->parsed()) {
      status = cmd_verify(verify, out_buf);
    } else if (diff_cmd->parsed()) {
      status = cmd_diff(diff, out_buf);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllowed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllowed;
  } catch (const CLI::ParseError& e) {
    err << "pathguard: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << err_buf.str() << "pathguard: " << e.message << '\n';
    return kUsageError;
  }
  out << out_buf.str();
  err << err_buf.str();
  return status;
}

}  // namespace pathguard::cli
