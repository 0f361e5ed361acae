// Copyright 2026 The mpcc Authors
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

#ifndef MPCC_PATTERN_MODEL_HPP
#define MPCC_PATTERN_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpcc/blocks.hpp"
#include "mpcc/corpus.hpp"

namespace mpcc {

inline constexpr int kModelFormatVersion = 1;

/// Signature frequency table learned from a corpus. Keys are full
/// signature keys ("B:V0<V1"); every stored count is at least 1.
struct PatternModel {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_sites = 0;
  std::uint64_t corpus_fingerprint = 0;
  std::vector<std::string> rules_applied;
  int format_version = kModelFormatVersion;

  std::uint64_t count(std::string_view key) const;
  std::uint64_t count(const BlockSignature &sig) const { return count(sig.key()); }
  void add(const std::string &key, std::uint64_t n = 1);

  /// Adds one predicate: every signature occurrence, and one site.
  void add_site(const Expr &expr);

  bool operator==(const PatternModel &) const = default;
};

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string &what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Rules

struct Rule {
  enum class Kind { Suppress, Rewrite, Nominal };

  Kind kind = Kind::Suppress;
  std::string pattern;  // suppress: glob; rewrite: from-key; nominal: key
  std::string target;   // rewrite only
  std::uint64_t floor = 0;
  std::size_t line = 0;

  /// One-line text form, identical to the rule file syntax.
  std::string descriptor() const;
};

struct RuleSet {
  std::vector<Rule> rules;
  bool empty() const { return rules.empty(); }
};

/// `*` matches any run, `?` one byte, `\` escapes the next byte.
bool glob_match(std::string_view pattern, std::string_view text);

/// True when `key` names a signature that normalizes to itself.
bool is_canonical_key(std::string_view key);

/// Parses rule-file text. Throws ModelError naming the offending line for
/// a syntax error, a non-canonical key, or a combination of rules whose
/// repeated application would not be idempotent.
RuleSet parse_rules(std::string_view text);
RuleSet load_rules(const std::filesystem::path &path);

/// Applies `rules` in order. Applying the same set again is a no-op.
PatternModel apply_rules(PatternModel model, const RuleSet &rules);

// ---------------------------------------------------------------------------
// Training, persistence, merging

struct TrainOptions {
  RuleSet rules;
  IngestOptions ingest;
};

struct TrainResult {
  PatternModel model;
  IngestReport report;
};

std::uint64_t fingerprint_files(const std::vector<std::filesystem::path> &sorted_files);

/// Trains over every parseable predicate under `roots`. Throws
/// ModelError("empty model") when no predicate could be used.
TrainResult train(const std::vector<std::filesystem::path> &roots,
                  const TrainOptions &options = {});

/// Pointwise sum. Requires equal format_version and rules_applied.
PatternModel merge(const std::vector<PatternModel> &models);

std::string serialize(const PatternModel &model);
PatternModel deserialize(std::string_view text);

void save(const PatternModel &model, const std::filesystem::path &path);
PatternModel load(const std::filesystem::path &path);

std::string to_hex(std::uint64_t value);

}  // namespace mpcc

#endif  // MPCC_PATTERN_MODEL_HPP
