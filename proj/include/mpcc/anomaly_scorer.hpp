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

#ifndef MPCC_ANOMALY_SCORER_HPP
#define MPCC_ANOMALY_SCORER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcc/blocks.hpp"
#include "mpcc/corpus.hpp"
#include "mpcc/pattern_model.hpp"

namespace mpcc {

struct ScorerConfig {
  double threshold = 1000.0;
  std::size_t top_n = 20;
  std::uint64_t rarity_scale = 1000;
  bool per_file = false;

  /// Throws std::invalid_argument unless threshold > 0, top_n >= 1 and
  /// rarity_scale > 0.
  void validate() const;
};

/// Exact rational score numerator / denominator.
struct Score {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool exceeds(double threshold) const;

  /// Decimal text rounded half-up to `digits` fractional digits, trailing
  /// zeros dropped: "2000", "1.998002".
  std::string decimal(int digits = 6) const;

  std::strong_ordering operator<=>(const Score &other) const;
  bool operator==(const Score &other) const { return (*this <=> other) == 0; }
};

struct ScoreResult {
  Score score;
  std::uint64_t complexity = 1;
  std::uint64_t frequency = 0;
  std::vector<std::pair<BlockSignature, std::uint64_t>> matched;
  std::vector<BlockSignature> unseen;
};

/// Operator nodes (Binary, Unary, Cast, Index, Call), at least 1.
std::uint64_t complexity(const Expr &expr);

/// score = complexity * rarity_scale / (1 + f), where f is the E-signature
/// count when the model has it and otherwise the smallest count among the
/// predicate's units (each complex block, each block outside any complex
/// block).
ScoreResult score_expr(const Expr &expr, const PatternModel &model, const ScorerConfig &cfg);
ScoreResult score_expr(const Expr &expr, const Decomposition &d, const PatternModel &model,
                       const ScorerConfig &cfg);

enum class Tag {
  PointerCheck,
  UnclearArithmetic,
  InconsistentCast,
  DisjointPredicates,
  InefficientLogic,
  ParenUtilization,
  CppSpecific,
  MixedArithBool,
  PotentialBug,
};

std::string_view to_string(Tag tag);

/// Syntactic triage labels. `raw_text` is consulted for parenthesization,
/// which the tree does not keep; pass an empty view to use print_expr.
std::vector<Tag> tag_finding(const Expr &expr, std::string_view raw_text = {});

struct AnomalyFinding {
  ConditionSite site;
  ScoreResult result;
  std::vector<Tag> tags;
  std::size_t rank = 0;
};

struct ScanReport {
  std::vector<AnomalyFinding> findings;
  IngestReport ingest;
  std::size_t sites_scored = 0;
};

/// Orders candidates by descending score, then (file, line, column), keeps
/// the top_n (globally, or per file when cfg.per_file) and assigns ranks.
std::vector<AnomalyFinding> rank_findings(std::vector<AnomalyFinding> candidates,
                                          const ScorerConfig &cfg);

/// Scores already parsed sites; only those above the threshold are kept.
std::vector<AnomalyFinding> score_sites(const std::vector<ParsedSite> &sites,
                                        const PatternModel &model, const ScorerConfig &cfg);

ScanReport scan(const std::vector<std::filesystem::path> &roots, const PatternModel &model,
                const ScorerConfig &cfg, const IngestOptions &ingest = {});

/// `file:line:col score=... tags=... | raw_text`
std::string format_text(const AnomalyFinding &f, bool color = false);

/// One JSON object with keys file, line, col, construct, raw, score,
/// matched, unseen, tags, rank in that order.
std::string format_json(const AnomalyFinding &f);

}  // namespace mpcc

#endif  // MPCC_ANOMALY_SCORER_HPP
