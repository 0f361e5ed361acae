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

#include "mpcc/anomaly_scorer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "mpcc/lexer.hpp"

namespace mpcc {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

void ScorerConfig::validate() const {
  if (!(threshold > 0)) throw std::invalid_argument("threshold must be > 0");
  if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
  if (rarity_scale == 0) throw std::invalid_argument("rarity_scale must be > 0");
}

bool Score::exceeds(double threshold) const {
  return static_cast<long double>(numerator) >
         static_cast<long double>(threshold) * static_cast<long double>(denominator);
}

std::string Score::decimal(int digits) const {
  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  u128 whole = numerator / denominator;
  u128 rem = numerator % denominator;
  u128 frac = (rem * scale * 2 + denominator) / (2 * static_cast<u128>(denominator));
  if (frac >= scale) {
    ++whole;
    frac -= scale;
  }
  auto to_str = [](u128 v) {
    std::string s;
    do {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    } while (v);
    return std::string(s.rbegin(), s.rend());
  };
  std::string out = to_str(whole);
  if (frac == 0 || digits == 0) return out;
  std::string f = to_str(frac);
  f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
  while (!f.empty() && f.back() == '0') f.pop_back();
  return out + "." + f;
}

std::strong_ordering Score::operator<=>(const Score &other) const {
  u128 a = static_cast<u128>(numerator) * other.denominator;
  u128 b = static_cast<u128>(other.numerator) * denominator;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint64_t complexity(const Expr &expr) {
  std::uint64_t n = 0;
  auto walk = [&](const auto &self, const Expr &e) -> void {
    switch (e.kind) {
      case ExprKind::Binary:
      case ExprKind::Unary:
      case ExprKind::Cast:
      case ExprKind::Index:
      case ExprKind::Call:
        ++n;
        break;
      default:
        break;
    }
    for (const auto &c : e.children) self(self, c);
  };
  walk(walk, expr);
  return std::max<std::uint64_t>(n, 1);
}

ScoreResult score_expr(const Expr &expr, const PatternModel &model, const ScorerConfig &cfg) {
  return score_expr(expr, decompose(expr), model, cfg);
}

ScoreResult score_expr(const Expr &expr, const Decomposition &d, const PatternModel &model,
                       const ScorerConfig &cfg) {
  ScoreResult r;
  r.complexity = complexity(expr);
  std::uint64_t whole = model.count(d.whole);
  if (whole > 0) {
    r.frequency = whole;
    r.matched.emplace_back(d.whole, whole);
  } else {
    r.unseen.push_back(d.whole);
    std::vector<BlockSignature> units;
    for (const auto &cb : d.complex) units.push_back(cb.signature);
    for (std::size_t b : d.isolated_blocks()) units.push_back(d.split.blocks[b].signature);
    std::set<std::string> seen_keys;
    bool first = true;
    for (const auto &u : units) {
      std::uint64_t c = model.count(u);
      r.frequency = first ? c : std::min(r.frequency, c);
      first = false;
      if (!seen_keys.insert(u.key()).second) continue;
      if (c > 0)
        r.matched.emplace_back(u, c);
      else
        r.unseen.push_back(u);
    }
  }
  r.score.numerator = r.complexity * cfg.rarity_scale;
  r.score.denominator = 1 + r.frequency;
  return r;
}

// ---------------------------------------------------------------------------
// Tags

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::PointerCheck: return "pointer-check";
    case Tag::UnclearArithmetic: return "unclear-arithmetic";
    case Tag::InconsistentCast: return "inconsistent-cast";
    case Tag::DisjointPredicates: return "disjoint-predicates";
    case Tag::InefficientLogic: return "inefficient-logic";
    case Tag::ParenUtilization: return "paren-utilization";
    case Tag::CppSpecific: return "cpp-specific";
    case Tag::MixedArithBool: return "mixed-arith-bool";
    case Tag::PotentialBug: return "potential-bug";
  }
  return "?";
}

namespace {

bool is_eq(const Expr &e) {
  return e.kind == ExprKind::Binary && (e.binary_op == BinaryOp::Eq || e.binary_op == BinaryOp::Ne);
}

bool is_relational(const Expr &e) {
  return e.kind == ExprKind::Binary && (e.binary_op == BinaryOp::Lt || e.binary_op == BinaryOp::Le ||
                                        e.binary_op == BinaryOp::Gt || e.binary_op == BinaryOp::Ge);
}

bool is_cmp(const Expr &e) { return e.kind == ExprKind::Binary && is_comparison(e.binary_op); }

template <class Pred>
bool any_node(const Expr &e, Pred pred) {
  if (pred(e)) return true;
  return std::any_of(e.children.begin(), e.children.end(),
                     [&](const Expr &c) { return any_node(c, pred); });
}

template <class Fn>
void each_node(const Expr &e, Fn fn) {
  fn(e);
  for (const auto &c : e.children) each_node(c, fn);
}

bool pointerish(const Expr &e) {
  return e.kind == ExprKind::NullLit || (e.kind == ExprKind::Unary && e.unary_op == UnaryOp::Deref) ||
         (e.kind == ExprKind::Member && e.arrow);
}

// Name of the pointer a block dereferences (p->f, *p, p[i]).
void dereferenced_names(const Expr &e, std::set<std::string> &out) {
  each_node(e, [&](const Expr &n) {
    const Expr *base = nullptr;
    if (n.kind == ExprKind::Member && n.arrow) base = &n.operand();
    if (n.kind == ExprKind::Unary && n.unary_op == UnaryOp::Deref) base = &n.operand();
    if (n.kind == ExprKind::Index) base = &n.children[0];
    if (n.kind == ExprKind::Call && n.method && n.arrow) base = &n.children[0];
    if (base && base->kind == ExprKind::Identifier) out.insert(base->text);
  });
}

// Name a block null-checks: p, !p, p == NULL, NULL != p, ...
std::string null_checked_name(const Expr &e) {
  if (e.kind == ExprKind::Identifier) return e.text;
  if (e.kind == ExprKind::Unary && e.unary_op == UnaryOp::Not && e.operand().kind == ExprKind::Identifier)
    return e.operand().text;
  if (is_eq(e)) {
    if (e.lhs().kind == ExprKind::NullLit && e.rhs().kind == ExprKind::Identifier) return e.rhs().text;
    if (e.rhs().kind == ExprKind::NullLit && e.lhs().kind == ExprKind::Identifier) return e.lhs().text;
  }
  return {};
}

bool tag_pointer_check(const Expr &expr, const BlockSplit &split) {
  // Equality chains touching NULL or a dereference.
  bool chain = any_node(expr, [](const Expr &n) {
    if (!is_eq(n)) return false;
    for (const auto &c : n.children)
      if (is_cmp(c) && (any_node(n, pointerish))) return true;
    return false;
  });
  if (chain) return true;
  // Ordering comparisons against NULL.
  if (any_node(expr, [](const Expr &n) {
        return is_relational(n) &&
               (n.lhs().kind == ExprKind::NullLit || n.rhs().kind == ExprKind::NullLit);
      }))
    return true;
  // Dereference before the null check of the same pointer in an && chain.
  if (split.connective.kind == Connective::Kind::And) {
    std::set<std::string> dereferenced;
    for (const auto &leaf : split.connective.children) {
      if (leaf.kind != Connective::Kind::Leaf) continue;
      const Expr &block = split.blocks[leaf.block].subtree;
      std::string checked = null_checked_name(block);
      if (!checked.empty() && dereferenced.count(checked)) return true;
      dereferenced_names(block, dereferenced);
    }
  }
  return false;
}

bool tag_unclear_arithmetic(const Expr &expr) {
  return any_node(expr, [](const Expr &n) {
    bool logical_parent = (n.kind == ExprKind::Binary && is_logical(n.binary_op)) ||
                          (n.kind == ExprKind::Unary && n.unary_op == UnaryOp::Not);
    if (!logical_parent) return false;
    return std::any_of(n.children.begin(), n.children.end(), [](const Expr &c) {
      return c.kind == ExprKind::Binary && is_arithmetic(c.binary_op);
    });
  });
}

bool tag_inconsistent_cast(const Expr &expr) {
  std::set<std::string> types;
  each_node(expr, [&](const Expr &n) {
    if (n.kind == ExprKind::Cast) types.insert(n.text);
  });
  return types.size() >= 2;
}

bool tag_disjoint(const BlockSplit &split) {
  if (split.blocks.size() < 4) return false;
  std::set<std::string> seen;
  for (const auto &b : split.blocks)
    for (const auto &name : b.identifiers)
      if (!seen.insert(name).second) return false;
  return true;
}

bool tag_inefficient_logic(const BlockSplit &split) {
  for (std::size_t i = 0; i < split.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < split.blocks.size(); ++j)
      if (split.blocks[i].subtree == split.blocks[j].subtree) return true;
  return false;
}

bool tag_paren_utilization(std::string_view raw) {
  std::vector<Token> toks;
  try {
    toks = tokenize(raw);
  } catch (const ParseError &) {
    return false;
  }
  auto is_punct = [&](std::size_t i, std::string_view p) {
    return i < toks.size() && toks[i].kind == TokenKind::Punct && toks[i].text == p;
  };
  auto starts_operand = [&](std::size_t i) {
    if (i >= toks.size()) return false;
    if (toks[i].kind != TokenKind::Punct) return true;
    return toks[i].text == "(" || toks[i].text == "!" || toks[i].text == "~";
  };

  // Matching parens, and && / || seen per paren group.
  std::vector<std::size_t> match(toks.size(), std::string::npos);
  std::vector<std::size_t> stack;
  struct Level {
    bool has_and = false;
    bool has_or = false;
  };
  std::vector<Level> levels(1);
  bool mixed = false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_punct(i, "(")) {
      stack.push_back(i);
      levels.emplace_back();
    } else if (is_punct(i, ")")) {
      if (stack.empty()) return false;
      match[stack.back()] = i;
      match[i] = stack.back();
      stack.pop_back();
      levels.pop_back();
    } else if (is_punct(i, "&&") || is_punct(i, "||")) {
      Level &l = levels.back();
      (is_punct(i, "&&") ? l.has_and : l.has_or) = true;
      if (l.has_and && l.has_or) mixed = true;
    }
  }
  if (!stack.empty()) return false;
  if (mixed) return true;

  std::size_t redundant = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!is_punct(i, "(")) continue;
    std::size_t close = match[i];
    bool call = i > 0 && (toks[i - 1].kind == TokenKind::Identifier || is_punct(i - 1, ")") ||
                          is_punct(i - 1, "]"));
    if (call) continue;
    bool whole = i == 0 && close + 1 == toks.size();
    bool single = close == i + 2 && toks[i + 1].kind != TokenKind::Punct && !starts_operand(close + 1);
    bool doubled = is_punct(i + 1, "(") && match[i + 1] + 1 == close;
    if (whole || single || doubled) ++redundant;
  }
  return redundant >= 3;
}

bool tag_cpp_specific(const Expr &expr) {
  return any_node(expr, [](const Expr &n) {
    if (n.kind == ExprKind::NullLit && n.text == "nullptr") return true;
    if (n.kind == ExprKind::BoolLit) return true;
    if ((n.kind == ExprKind::Member || (n.kind == ExprKind::Call && n.method)) && n.arrow &&
        n.children[0].kind == ExprKind::Identifier && n.children[0].text == "this")
      return true;
    return false;
  });
}

bool tag_mixed_arith_bool(const Expr &expr) {
  std::set<std::string> arith, boolean;
  each_node(expr, [&](const Expr &n) {
    bool a = n.kind == ExprKind::Binary && is_arithmetic(n.binary_op);
    bool b = (n.kind == ExprKind::Binary && (is_logical(n.binary_op) || is_comparison(n.binary_op))) ||
             (n.kind == ExprKind::Unary && n.unary_op == UnaryOp::Not);
    if (!a && !b) return;
    for (const auto &c : n.children)
      if (c.kind == ExprKind::Identifier && c.text != "this") (a ? arith : boolean).insert(c.text);
  });
  return std::any_of(arith.begin(), arith.end(), [&](const std::string &s) { return boolean.count(s) > 0; });
}

bool tag_potential_bug(const Expr &expr) {
  return any_node(expr, [](const Expr &n) {
    if (n.kind == ExprKind::Binary && n.binary_op == BinaryOp::Assign) return true;
    if (is_eq(n) && (is_eq(n.lhs()) || is_eq(n.rhs()))) return true;
    if (is_relational(n) && (is_relational(n.lhs()) || is_relational(n.rhs()))) return true;
    return false;
  });
}

}  // namespace

std::vector<Tag> tag_finding(const Expr &expr, std::string_view raw_text) {
  std::string printed;
  if (raw_text.empty()) {
    printed = print_expr(expr);
    raw_text = printed;
  }
  BlockSplit split = split_basic_blocks(expr);
  std::vector<Tag> tags;
  if (tag_pointer_check(expr, split)) tags.push_back(Tag::PointerCheck);
  if (tag_unclear_arithmetic(expr)) tags.push_back(Tag::UnclearArithmetic);
  if (tag_inconsistent_cast(expr)) tags.push_back(Tag::InconsistentCast);
  if (tag_disjoint(split)) tags.push_back(Tag::DisjointPredicates);
  if (tag_inefficient_logic(split)) tags.push_back(Tag::InefficientLogic);
  if (tag_paren_utilization(raw_text)) tags.push_back(Tag::ParenUtilization);
  if (tag_cpp_specific(expr)) tags.push_back(Tag::CppSpecific);
  if (tag_mixed_arith_bool(expr)) tags.push_back(Tag::MixedArithBool);
  if (tag_potential_bug(expr)) tags.push_back(Tag::PotentialBug);
  return tags;
}

// ---------------------------------------------------------------------------
// Scanning and reports

namespace {

bool finding_before(const AnomalyFinding &a, const AnomalyFinding &b) {
  auto c = a.result.score <=> b.result.score;
  if (c != 0) return c > 0;
  const std::string fa = a.site.file_path.generic_string();
  const std::string fb = b.site.file_path.generic_string();
  if (fa != fb) return fa < fb;
  if (a.site.line != b.site.line) return a.site.line < b.site.line;
  return a.site.column < b.site.column;
}

}  // namespace

std::vector<AnomalyFinding> rank_findings(std::vector<AnomalyFinding> candidates,
                                          const ScorerConfig &cfg) {
  std::sort(candidates.begin(), candidates.end(), finding_before);
  std::vector<AnomalyFinding> out;
  if (!cfg.per_file) {
    for (auto &f : candidates) {
      if (out.size() >= cfg.top_n) break;
      f.rank = out.size() + 1;
      out.push_back(std::move(f));
    }
    return out;
  }
  std::map<std::string, std::vector<AnomalyFinding>> by_file;
  for (auto &f : candidates) {
    auto &bucket = by_file[f.site.file_path.generic_string()];
    if (bucket.size() >= cfg.top_n) continue;
    f.rank = bucket.size() + 1;
    bucket.push_back(std::move(f));
  }
  for (auto &[file, bucket] : by_file)
    for (auto &f : bucket) out.push_back(std::move(f));
  return out;
}

std::vector<AnomalyFinding> score_sites(const std::vector<ParsedSite> &sites,
                                        const PatternModel &model, const ScorerConfig &cfg) {
  std::vector<AnomalyFinding> out;
  for (const auto &ps : sites) {
    ScoreResult r = score_expr(ps.expr, model, cfg);
    if (!r.score.exceeds(cfg.threshold)) continue;
    AnomalyFinding f;
    f.site = ps.site;
    f.result = std::move(r);
    f.tags = tag_finding(ps.expr, ps.site.raw_text);
    out.push_back(std::move(f));
  }
  return out;
}

ScanReport scan(const std::vector<std::filesystem::path> &roots, const PatternModel &model,
                const ScorerConfig &cfg, const IngestOptions &ingest) {
  cfg.validate();
  ScanReport report;
  CorpusScan corpus = ingest_corpus(roots, ingest);
  report.ingest = std::move(corpus.report);
  report.sites_scored = corpus.sites.size();
  report.findings = rank_findings(score_sites(corpus.sites, model, cfg), cfg);
  return report;
}

std::string format_text(const AnomalyFinding &f, bool color) {
  std::string out = f.site.file_path.generic_string() + ":" + std::to_string(f.site.line) + ":" +
                    std::to_string(f.site.column) + " score=";
  if (color) out += "\x1b[1;31m";
  out += f.result.score.decimal();
  if (color) out += "\x1b[0m";
  out += " tags=";
  if (f.tags.empty()) out += "-";
  for (std::size_t i = 0; i < f.tags.size(); ++i) {
    if (i) out += ',';
    out += to_string(f.tags[i]);
  }
  out += " | ";
  for (char c : f.site.raw_text) out += (c == '\n' || c == '\r') ? ' ' : c;
  return out;
}

std::string format_json(const AnomalyFinding &f) {
  using nlohmann::json;
  auto field = [](std::string &out, std::string_view key, const std::string &value) {
    if (out.size() > 1) out += ',';
    out += json(std::string(key)).dump();
    out += ':';
    out += value;
  };
  json matched = json::array();
  for (const auto &[sig, count] : f.result.matched)
    matched.push_back(json::object({{"signature", sig.key()}, {"count", count}}));
  json unseen = json::array();
  for (const auto &sig : f.result.unseen) unseen.push_back(sig.key());
  json tags = json::array();
  for (Tag t : f.tags) tags.push_back(std::string(to_string(t)));

  std::string out = "{";
  field(out, "file", json(f.site.file_path.generic_string()).dump());
  field(out, "line", std::to_string(f.site.line));
  field(out, "col", std::to_string(f.site.column));
  field(out, "construct", json(std::string(to_string(f.site.construct))).dump());
  field(out, "raw", json(f.site.raw_text).dump(-1, ' ', false, json::error_handler_t::replace));
  field(out, "score", f.result.score.decimal());
  field(out, "matched", matched.dump());
  field(out, "unseen", unseen.dump());
  field(out, "tags", tags.dump());
  field(out, "rank", std::to_string(f.rank));
  out += '}';
  return out;
}

}  // namespace mpcc
