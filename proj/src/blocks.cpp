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

#include "mpcc/blocks.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "mpcc/lexer.hpp"

namespace mpcc {

std::string BlockSignature::key() const {
  std::string k;
  k.reserve(text.size() + 2);
  k.push_back(static_cast<char>(ns));
  k.push_back(':');
  k += text;
  return k;
}

std::optional<BlockSignature> parse_signature_key(std::string_view key) {
  if (key.size() < 3 || key[1] != ':') return std::nullopt;
  Namespace ns;
  switch (key[0]) {
    case 'B': ns = Namespace::Basic; break;
    case 'C': ns = Namespace::Complex; break;
    case 'E': ns = Namespace::Whole; break;
    default: return std::nullopt;
  }
  return BlockSignature{ns, std::string(key.substr(2))};
}

namespace {

void collect_identifiers(const Expr &e, std::vector<std::string> &out) {
  if (e.kind == ExprKind::Identifier) {
    if (e.text != "this" && std::find(out.begin(), out.end(), e.text) == out.end())
      out.push_back(e.text);
    return;
  }
  for (const auto &c : e.children) collect_identifiers(c, out);
}

bool is_logical_node(const Expr &e) {
  return e.kind == ExprKind::Binary && is_logical(e.binary_op);
}

// Operands of a chain of `op` nodes, left to right.
void flatten(const Expr &e, BinaryOp op, std::vector<const Expr *> &out) {
  if (e.kind == ExprKind::Binary && e.binary_op == op) {
    flatten(e.lhs(), op, out);
    flatten(e.rhs(), op, out);
  } else {
    out.push_back(&e);
  }
}

void flatten_owned(Expr &&e, BinaryOp op, std::vector<Expr> &out) {
  if (e.kind == ExprKind::Binary && e.binary_op == op) {
    flatten_owned(std::move(e.children[0]), op, out);
    flatten_owned(std::move(e.children[1]), op, out);
  } else {
    out.push_back(std::move(e));
  }
}

bool contains_logical(const Expr &e) {
  if (is_logical_node(e)) return true;
  return std::any_of(e.children.begin(), e.children.end(), contains_logical);
}

Connective split_into(const Expr &e, std::vector<BasicBlock> &blocks) {
  if (!is_logical_node(e) && contains_logical(e)) {
    Connective node;
    node.kind = Connective::Kind::Context;
    Expr shell = e;
    shell.children.clear();
    node.shell = std::move(shell);
    for (const auto &c : e.children) node.children.push_back(split_into(c, blocks));
    return node;
  }
  if (is_logical_node(e)) {
    Connective node;
    node.kind = e.binary_op == BinaryOp::LogicalAnd ? Connective::Kind::And
                                                     : Connective::Kind::Or;
    std::vector<const Expr *> operands;
    flatten(e, e.binary_op, operands);
    for (const Expr *o : operands) node.children.push_back(split_into(*o, blocks));
    return node;
  }
  BasicBlock b;
  b.subtree = e;
  b.identifiers = identifiers_of(e);
  b.signature = {Namespace::Basic, normalize(e, b.identifiers)};
  Connective leaf;
  leaf.kind = Connective::Kind::Leaf;
  leaf.block = blocks.size();
  blocks.push_back(std::move(b));
  return leaf;
}

// ---------------------------------------------------------------------------
// Canonical form

bool is_commutative(BinaryOp op) {
  switch (op) {
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::Add:
    case BinaryOp::Mul:
    case BinaryOp::BitAnd:
    case BinaryOp::BitOr:
    case BinaryOp::BitXor:
      return true;
    default:
      return false;
  }
}

class CanonicalPrinter {
 public:
  explicit CanonicalPrinter(bool erase_index) : erase_index_(erase_index) {}

  std::string operand_text(const Expr &e) {
    Writer w(Writer::Style::Compact);
    print_child(w, e, e.kind == ExprKind::Binary);
    return w.take();
  }

  std::string text(const Expr &e) {
    Writer w(Writer::Style::Compact);
    print(w, e);
    return w.take();
  }

 private:
  bool erase_index_;

  void print_child(Writer &w, const Expr &e, bool parens) {
    if (parens) w.punct("(");
    print(w, e);
    if (parens) w.punct(")");
  }

  static bool needs_postfix_parens(const Expr &e) {
    return e.kind == ExprKind::Binary || e.kind == ExprKind::Cast ||
           (e.kind == ExprKind::Unary && !e.postfix);
  }

  void print(Writer &w, const Expr &e) {
    switch (e.kind) {
      case ExprKind::Identifier:
        if (erase_index_ && e.text.size() > 1 && e.text[0] == 'V' &&
            std::isdigit(static_cast<unsigned char>(e.text[1])))
          w.word("V");
        else
          w.word(e.text);
        return;
      case ExprKind::IntLit:
      case ExprKind::FloatLit:
      case ExprKind::CharLit:
      case ExprKind::StringLit:
      case ExprKind::NullLit:
      case ExprKind::BoolLit:
        w.word(e.text);
        return;
      case ExprKind::Binary: {
        if (is_logical(e.binary_op)) {
          std::vector<const Expr *> ops;
          flatten(e, e.binary_op, ops);
          for (std::size_t i = 0; i < ops.size(); ++i) {
            if (i) w.binary_op(spelling(e.binary_op));
            print_child(w, *ops[i], ops[i]->kind == ExprKind::Binary);
          }
          return;
        }
        print_child(w, e.lhs(), e.lhs().kind == ExprKind::Binary);
        w.binary_op(spelling(e.binary_op));
        print_child(w, e.rhs(), e.rhs().kind == ExprKind::Binary);
        return;
      }
      case ExprKind::Unary:
        if (e.postfix) {
          print_child(w, e.operand(), needs_postfix_parens(e.operand()));
          w.punct(spelling(e.unary_op));
        } else {
          w.punct(spelling(e.unary_op));
          print_child(w, e.operand(), e.operand().kind == ExprKind::Binary);
        }
        return;
      case ExprKind::Cast:
        if (e.text.find("_cast<") != std::string::npos && e.text.back() == '>') {
          w.word(e.text);
          w.punct("(");
          print(w, e.operand());
          w.punct(")");
        } else {
          w.punct("(");
          w.word(e.text);
          w.punct(")");
          print_child(w, e.operand(), e.operand().kind == ExprKind::Binary);
        }
        return;
      case ExprKind::Call: {
        std::size_t first = 0;
        if (e.method) {
          print_child(w, e.children[0], needs_postfix_parens(e.children[0]));
          w.punct(e.arrow ? "->" : ".");
          first = 1;
        }
        w.word(e.text);
        if (e.text.rfind("sizeof(", 0) == 0) return;
        w.punct("(");
        for (std::size_t i = first; i < e.children.size(); ++i) {
          if (i > first) w.separator(",");
          const Expr &a = e.children[i];
          print_child(w, a, a.kind == ExprKind::Binary && a.binary_op == BinaryOp::Comma);
        }
        w.punct(")");
        return;
      }
      case ExprKind::Member:
        print_child(w, e.operand(), needs_postfix_parens(e.operand()));
        w.punct(e.arrow ? "->" : ".");
        w.word(e.text);
        return;
      case ExprKind::Index:
        print_child(w, e.children[0], needs_postfix_parens(e.children[0]));
        w.punct("[");
        print(w, e.children[1]);
        w.punct("]");
        return;
    }
  }
};

using SortKey = std::pair<std::string, std::string>;

SortKey sort_key(const Expr &e) {
  return {CanonicalPrinter(true).operand_text(e), CanonicalPrinter(false).operand_text(e)};
}

// Steps 1 and 2: placeholders and literal classes.
void abstract_leaves(Expr &e, std::unordered_map<std::string, std::size_t> &index) {
  switch (e.kind) {
    case ExprKind::Identifier: {
      if (e.text == "this") return;
      auto it = index.find(e.text);
      std::size_t i;
      if (it == index.end()) {
        i = index.size();
        index.emplace(e.text, i);
      } else {
        i = it->second;
      }
      e.text = "V" + std::to_string(i);
      return;
    }
    case ExprKind::IntLit:
      switch (int_class(e.text)) {
        case IntClass::Zero: e.text = "0"; break;
        case IntClass::One: e.text = "1"; break;
        case IntClass::Other: e.text = "N"; break;
      }
      return;
    case ExprKind::FloatLit: e.text = "F"; return;
    case ExprKind::StringLit: e.text = "S"; return;
    case ExprKind::CharLit: e.text = "K"; return;
    case ExprKind::NullLit: e.text = "NULL"; return;
    default:
      for (auto &c : e.children) abstract_leaves(c, index);
  }
}

// Steps 3 and 4: relational direction and commutative ordering. `tie` is
// set when two operands of one group differ only in placeholder numbers,
// which makes their order depend on the numbering.
void canonicalize(Expr &e, bool &tie) {
  for (auto &c : e.children) canonicalize(c, tie);
  if (e.kind != ExprKind::Binary) return;
  if (e.binary_op == BinaryOp::Gt || e.binary_op == BinaryOp::Ge) {
    std::swap(e.children[0], e.children[1]);
    e.binary_op = e.binary_op == BinaryOp::Gt ? BinaryOp::Lt : BinaryOp::Le;
    return;
  }
  if (is_logical(e.binary_op)) {
    BinaryOp op = e.binary_op;
    std::vector<Expr> operands;
    flatten_owned(std::move(e), op, operands);
    std::vector<std::pair<SortKey, std::size_t>> keyed;
    keyed.reserve(operands.size());
    for (std::size_t i = 0; i < operands.size(); ++i)
      keyed.emplace_back(sort_key(operands[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < keyed.size(); ++i)
      if (keyed[i].first.first == keyed[i - 1].first.first && keyed[i].first.second != keyed[i - 1].first.second)
        tie = true;
    Expr rebuilt = std::move(operands[keyed[0].second]);
    for (std::size_t i = 1; i < keyed.size(); ++i)
      rebuilt = make_binary(op, std::move(rebuilt), std::move(operands[keyed[i].second]));
    e = std::move(rebuilt);
    return;
  }
  if (!is_commutative(e.binary_op)) return;
  SortKey l = sort_key(e.lhs());
  SortKey r = sort_key(e.rhs());
  if (l.first == r.first && l.second != r.second) tie = true;
  if (r < l) std::swap(e.children[0], e.children[1]);
}

// Orderings chosen for groups of operands whose erased texts are equal.
// Groups are met in the same sequence on every pass, because erased texts
// do not depend on numbering, so the choices form an odometer.
class TieChoices {
 public:
  static constexpr std::size_t kLimit = 5040;

  std::size_t next(std::size_t group_size) {
    if (cursor_ == radix_.size()) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= group_size && f <= kLimit; ++i) f *= i;
      radix_.push_back(f);
      value_.push_back(0);
    }
    return value_[cursor_++];
  }

  std::size_t combinations() const {
    std::size_t total = 1;
    for (std::size_t r : radix_) {
      if (r > kLimit || total * r > kLimit) return kLimit + 1;
      total *= r;
    }
    return total;
  }

  bool advance() {
    cursor_ = 0;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      if (++value_[i] < radix_[i]) return true;
      value_[i] = 0;
    }
    return false;
  }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> value_;
  std::size_t cursor_ = 0;
};

std::string erased_text(const Expr &e) { return CanonicalPrinter(true).operand_text(e); }

// Steps 3 and 4 with operands ordered by erased text alone; tied groups
// take the ordering named by `choices`.
void canonicalize_guided(Expr &e, TieChoices &choices) {
  // A logical chain is flattened before its operands are visited, so nested
  // spellings of one chain consume the same tie groups.
  if (e.kind == ExprKind::Binary && is_logical(e.binary_op)) {
    BinaryOp op = e.binary_op;
    std::vector<Expr> operands;
    flatten_owned(std::move(e), op, operands);
    for (auto &c : operands) canonicalize_guided(c, choices);
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(operands.size());
    for (std::size_t i = 0; i < operands.size(); ++i) keyed.emplace_back(erased_text(operands[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto &x, const auto &y) { return x.first < y.first; });
    for (std::size_t i = 0; i < keyed.size();) {
      std::size_t j = i + 1;
      while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
      if (j - i > 1) {
        std::size_t k = choices.next(j - i);
        for (std::size_t step = 0; step < k; ++step)
          std::next_permutation(keyed.begin() + static_cast<std::ptrdiff_t>(i),
                                keyed.begin() + static_cast<std::ptrdiff_t>(j),
                                [](const auto &x, const auto &y) { return x.second < y.second; });
      }
      i = j;
    }
    Expr rebuilt = std::move(operands[keyed[0].second]);
    for (std::size_t i = 1; i < keyed.size(); ++i)
      rebuilt = make_binary(op, std::move(rebuilt), std::move(operands[keyed[i].second]));
    e = std::move(rebuilt);
    return;
  }
  for (auto &c : e.children) canonicalize_guided(c, choices);
  if (e.kind != ExprKind::Binary) return;
  if (e.binary_op == BinaryOp::Gt || e.binary_op == BinaryOp::Ge) {
    std::swap(e.children[0], e.children[1]);
    e.binary_op = e.binary_op == BinaryOp::Gt ? BinaryOp::Lt : BinaryOp::Le;
    return;
  }
  if (!is_commutative(e.binary_op)) return;
  std::string l = erased_text(e.lhs());
  std::string r = erased_text(e.rhs());
  if (l == r ? choices.next(2) == 1 : r < l) std::swap(e.children[0], e.children[1]);
}

// Renumbers placeholders by first occurrence; returns true if any changed.
bool renumber(Expr &e, std::unordered_map<std::string, std::string> &mapping) {
  bool changed = false;
  if (e.kind == ExprKind::Identifier && e.text != "this") {
    auto it = mapping.find(e.text);
    if (it == mapping.end())
      it = mapping.emplace(e.text, "V" + std::to_string(mapping.size())).first;
    changed = it->second != e.text;
    e.text = it->second;
    return changed;
  }
  for (auto &c : e.children) changed |= renumber(c, mapping);
  return changed;
}

Expr build_unit(const Connective &c, const std::vector<BasicBlock> &blocks) {
  if (c.kind == Connective::Kind::Leaf) return blocks.at(c.block).subtree;
  if (c.kind == Connective::Kind::Context) {
    Expr out = *c.shell;
    for (const auto &ch : c.children) out.children.push_back(build_unit(ch, blocks));
    return out;
  }
  BinaryOp op = c.kind == Connective::Kind::And ? BinaryOp::LogicalAnd : BinaryOp::LogicalOr;
  Expr out = build_unit(c.children.at(0), blocks);
  for (std::size_t i = 1; i < c.children.size(); ++i)
    out = make_binary(op, std::move(out), build_unit(c.children[i], blocks));
  return out;
}

void collect_leaves(const Connective &c, std::vector<std::size_t> &out) {
  if (c.kind == Connective::Kind::Leaf) {
    out.push_back(c.block);
    return;
  }
  for (const auto &ch : c.children) collect_leaves(ch, out);
}

}  // namespace

std::vector<std::string> identifiers_of(const Expr &expr) {
  std::vector<std::string> out;
  collect_identifiers(expr, out);
  return out;
}

BlockSplit split_basic_blocks(const Expr &expr) {
  BlockSplit out;
  out.connective = split_into(expr, out.blocks);
  return out;
}

Expr reassemble(const Connective &connective, const std::vector<BasicBlock> &blocks) {
  return build_unit(connective, blocks);
}

namespace {

long long evaluate_int(const Connective &c, const std::vector<bool> &outcome) {
  if (c.kind != Connective::Kind::Context) return evaluate(c, outcome) ? 1 : 0;
  const Expr &shell = *c.shell;
  if (shell.kind == ExprKind::Unary && !shell.postfix) {
    long long v = evaluate_int(c.children.at(0), outcome);
    switch (shell.unary_op) {
      case UnaryOp::Not: return !v;
      case UnaryOp::Neg: return -v;
      case UnaryOp::BitNot: return ~v;
      default: break;
    }
  } else if (shell.kind == ExprKind::Binary) {
    long long a = evaluate_int(c.children.at(0), outcome);
    long long b = evaluate_int(c.children.at(1), outcome);
    switch (shell.binary_op) {
      case BinaryOp::Eq: return a == b;
      case BinaryOp::Ne: return a != b;
      case BinaryOp::Lt: return a < b;
      case BinaryOp::Le: return a <= b;
      case BinaryOp::Gt: return a > b;
      case BinaryOp::Ge: return a >= b;
      case BinaryOp::Add: return a + b;
      case BinaryOp::Sub: return a - b;
      case BinaryOp::Mul: return a * b;
      case BinaryOp::Div:
        if (b == 0) break;
        return a / b;
      case BinaryOp::Mod:
        if (b == 0) break;
        return a % b;
      case BinaryOp::BitAnd: return a & b;
      case BinaryOp::BitOr: return a | b;
      case BinaryOp::BitXor: return a ^ b;
      case BinaryOp::Shl:
        if (b < 0 || b > 62 || a < 0) break;
        return a << b;
      case BinaryOp::Shr:
        if (b < 0 || b > 62 || a < 0) break;
        return a >> b;
      case BinaryOp::Comma: return b;
      default: break;
    }
  }
  throw std::domain_error("context has no integer meaning");
}

}  // namespace

bool evaluate(const Connective &c, const std::vector<bool> &outcome) {
  switch (c.kind) {
    case Connective::Kind::Context:
      return evaluate_int(c, outcome) != 0;
    case Connective::Kind::Leaf:
      return outcome.at(c.block);
    case Connective::Kind::And:
      return std::all_of(c.children.begin(), c.children.end(),
                         [&](const Connective &ch) { return evaluate(ch, outcome); });
    case Connective::Kind::Or:
      return std::any_of(c.children.begin(), c.children.end(),
                         [&](const Connective &ch) { return evaluate(ch, outcome); });
  }
  return false;
}

std::optional<Connective> restrict_connective(const Connective &c,
                                              const std::vector<std::size_t> &keep) {
  if (c.kind == Connective::Kind::Leaf) {
    if (std::binary_search(keep.begin(), keep.end(), c.block)) return c;
    return std::nullopt;
  }
  Connective node;
  node.kind = c.kind;
  if (c.kind == Connective::Kind::Context) {
    // The operator survives only with all of its operands; otherwise the
    // surviving operands are joined by &&.
    std::vector<Connective> kept;
    for (const auto &ch : c.children)
      if (auto r = restrict_connective(ch, keep)) kept.push_back(std::move(*r));
    if (kept.empty()) return std::nullopt;
    if (kept.size() == c.children.size()) {
      node.shell = c.shell;
      node.children = std::move(kept);
      return node;
    }
    if (kept.size() == 1) return std::move(kept.front());
    node.kind = Connective::Kind::And;
    for (auto &k : kept) {
      if (k.kind == Connective::Kind::And) {
        for (auto &g : k.children) node.children.push_back(std::move(g));
      } else {
        node.children.push_back(std::move(k));
      }
    }
    return node;
  }
  for (const auto &ch : c.children) {
    auto r = restrict_connective(ch, keep);
    if (!r) continue;
    if (r->kind == c.kind) {
      for (auto &g : r->children) node.children.push_back(std::move(g));
    } else {
      node.children.push_back(std::move(*r));
    }
  }
  if (node.children.empty()) return std::nullopt;
  if (node.children.size() == 1) return std::move(node.children.front());
  return node;
}

std::string normalize(const Expr &expr, const std::vector<std::string> &unit_identifiers) {
  Expr base = expr;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto &name : unit_identifiers) index.emplace(name, index.size());
  abstract_leaves(base, index);

  auto settle = [](Expr tree, TieChoices &choices) {
    canonicalize_guided(tree, choices);
    std::unordered_map<std::string, std::string> mapping;
    renumber(tree, mapping);
    return CanonicalPrinter(false).text(tree);
  };

  // Every ordering of tied operands is tried and the smallest text wins;
  // the candidate set depends only on the tree up to renaming and operand
  // order, so the result does too.
  TieChoices choices;
  std::string best = settle(base, choices);
  if (choices.combinations() <= TieChoices::kLimit) {
    while (choices.advance()) {
      std::string text = settle(base, choices);
      if (text < best) best = std::move(text);
    }
    return best;
  }

  // Too many tied orderings: break ties by placeholder number and iterate
  // numbering and sorting to a fixed point instead.
  Expr tree = std::move(base);
  for (int round = 0; round < 16; ++round) {
    bool ignored = false;
    canonicalize(tree, ignored);
    std::unordered_map<std::string, std::string> mapping;
    if (!renumber(tree, mapping)) break;
  }
  return CanonicalPrinter(false).text(tree);
}

std::string normalize(const Expr &expr) { return normalize(expr, identifiers_of(expr)); }

std::vector<ComplexBlock> build_complex_blocks(const std::vector<BasicBlock> &blocks,
                                               const Connective &connective) {
  const std::size_t n = blocks.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto &name : blocks[i].identifiers) owners[name].push_back(i);
  for (const auto &[name, list] : owners)
    for (std::size_t k = 1; k < list.size(); ++k) {
      std::size_t a = find(list[0]), b = find(list[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(i);

  std::vector<ComplexBlock> out;
  for (auto &[root, members] : components) {
    if (members.size() < 2) continue;
    ComplexBlock cb;
    cb.members = members;
    cb.connective_shape = *restrict_connective(connective, members);
    for (const auto &[name, list] : owners) {
      std::size_t in_component = std::count_if(list.begin(), list.end(), [&](std::size_t b) {
        return std::binary_search(members.begin(), members.end(), b);
      });
      if (in_component >= 2) cb.shared_identifiers.push_back(name);
    }
    std::vector<std::size_t> order;
    collect_leaves(cb.connective_shape, order);
    std::vector<std::string> unit;
    for (std::size_t b : order)
      for (const auto &name : blocks[b].identifiers)
        if (std::find(unit.begin(), unit.end(), name) == unit.end()) unit.push_back(name);
    cb.signature = {Namespace::Complex, normalize(build_unit(cb.connective_shape, blocks), unit)};
    out.push_back(std::move(cb));
  }
  return out;
}

std::vector<std::size_t> Decomposition::isolated_blocks() const {
  std::vector<bool> covered(split.blocks.size(), false);
  for (const auto &cb : complex)
    for (std::size_t m : cb.members) covered[m] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) out.push_back(i);
  return out;
}

Decomposition decompose(const Expr &expr) {
  Decomposition d;
  d.split = split_basic_blocks(expr);
  d.complex = build_complex_blocks(d.split.blocks, d.split.connective);
  d.whole = {Namespace::Whole, normalize(expr)};
  return d;
}

std::vector<BlockSignature> signature_occurrences(const Decomposition &d) {
  std::vector<BlockSignature> out;
  out.reserve(d.split.blocks.size() + d.complex.size() + 1);
  for (const auto &b : d.split.blocks) out.push_back(b.signature);
  for (const auto &c : d.complex) out.push_back(c.signature);
  out.push_back(d.whole);
  return out;
}

std::vector<BlockSignature> signature_set(const Expr &expr) {
  auto all = signature_occurrences(decompose(expr));
  std::sort(all.begin(), all.end(),
            [](const BlockSignature &a, const BlockSignature &b) { return a.key() < b.key(); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace mpcc
