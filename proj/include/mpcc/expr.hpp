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

#ifndef MPCC_EXPR_HPP
#define MPCC_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpcc {

enum class ExprKind {
  Identifier,
  IntLit,
  FloatLit,
  CharLit,
  StringLit,
  NullLit,
  BoolLit,
  Binary,
  Unary,
  Call,
  Member,
  Index,
  Cast,
};

enum class BinaryOp {
  LogicalAnd,
  LogicalOr,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  BitAnd,
  BitOr,
  BitXor,
  Shl,
  Shr,
  Assign,
  Comma,
};

enum class UnaryOp { Not, Neg, BitNot, Deref, AddressOf, Inc, Dec };

std::string_view spelling(BinaryOp op);
std::string_view spelling(UnaryOp op);

/// Binding strength used by the parser and both printers. Higher binds
/// tighter; comma is 1, the prefix-unary level is 13, postfix is 14.
int precedence(BinaryOp op);

bool is_logical(BinaryOp op);     // && ||
bool is_comparison(BinaryOp op);  // == != < <= > >=
bool is_arithmetic(BinaryOp op);  // + - * / %

/// Parsed predicate expression. Parentheses are never represented.
///
/// Field use by kind:
///   Identifier  text = name ("this" is kept as an identifier)
///   IntLit      text = spelling as written (value class via int_class())
///   FloatLit, CharLit, StringLit  text = spelling
///   NullLit     text = "NULL" or "nullptr"
///   BoolLit     text = "true" or "false"
///   Binary      binary_op, children = {lhs, rhs}
///   Unary       unary_op, postfix, children = {operand}
///   Call        text = callee name; children = args, preceded by the
///               receiver object when `method` is set (arrow selects ->)
///   Member      text = field name, arrow, children = {base}
///   Index       children = {base, index}
///   Cast        text = type text (C cast) or "static_cast<T>" style
///               spelling, children = {operand}
struct Expr {
  ExprKind kind = ExprKind::Identifier;
  std::string text;
  BinaryOp binary_op = BinaryOp::Comma;
  UnaryOp unary_op = UnaryOp::Not;
  bool postfix = false;
  bool arrow = false;
  bool method = false;
  std::vector<Expr> children;

  bool operator==(const Expr &other) const;

  const Expr &lhs() const { return children.at(0); }
  const Expr &rhs() const { return children.at(1); }
  const Expr &operand() const { return children.at(0); }
};

Expr make_identifier(std::string name);
Expr make_literal(ExprKind kind, std::string text);
Expr make_binary(BinaryOp op, Expr lhs, Expr rhs);
Expr make_unary(UnaryOp op, Expr operand, bool postfix = false);
Expr make_call(std::string callee, std::vector<Expr> args);
Expr make_method_call(Expr receiver, std::string name, bool arrow,
                      std::vector<Expr> args);
Expr make_member(Expr base, std::string field, bool arrow);
Expr make_index(Expr base, Expr index);
Expr make_cast(std::string type_text, Expr operand);

enum class IntClass { Zero, One, Other };
IntClass int_class(std::string_view spelling);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected);

  std::size_t offset() const { return offset_; }
  const std::string &expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Lexicon selection. Canonical mode reads signature text back: the
/// literal-class tokens N, F, S and K become literals instead of names.
enum class ParseMode { Source, Canonical };

/// Parses a predicate under C precedence and associativity. Throws
/// ParseError on anything outside the supported subset.
Expr parse_expr(std::string_view text, ParseMode mode = ParseMode::Source);

/// Minimally parenthesized, human-spaced form ("a && b", "(a + b) * c").
/// parse_expr(print_expr(e)) == e for every tree the parser can produce.
std::string print_expr(const Expr &expr);

/// Number of nodes in the tree.
std::size_t node_count(const Expr &expr);

}  // namespace mpcc

#endif  // MPCC_EXPR_HPP
