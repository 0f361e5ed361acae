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

#include "mpcc/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "mpcc/lexer.hpp"

namespace mpcc {

namespace {

constexpr int kUnaryPrec = 13;
constexpr int kPostfixPrec = 14;
constexpr int kPrimaryPrec = 15;

}  // namespace

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::LogicalAnd: return "&&";
    case BinaryOp::LogicalOr: return "||";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::Assign: return "=";
    case BinaryOp::Comma: return ",";
  }
  return "?";
}

std::string_view spelling(UnaryOp op) {
  switch (op) {
    case UnaryOp::Not: return "!";
    case UnaryOp::Neg: return "-";
    case UnaryOp::BitNot: return "~";
    case UnaryOp::Deref: return "*";
    case UnaryOp::AddressOf: return "&";
    case UnaryOp::Inc: return "++";
    case UnaryOp::Dec: return "--";
  }
  return "?";
}

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Comma: return 1;
    case BinaryOp::Assign: return 2;
    case BinaryOp::LogicalOr: return 3;
    case BinaryOp::LogicalAnd: return 4;
    case BinaryOp::BitOr: return 5;
    case BinaryOp::BitXor: return 6;
    case BinaryOp::BitAnd: return 7;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 8;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 9;
    case BinaryOp::Shl:
    case BinaryOp::Shr: return 10;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 11;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 12;
  }
  return 0;
}

bool is_logical(BinaryOp op) {
  return op == BinaryOp::LogicalAnd || op == BinaryOp::LogicalOr;
}

bool is_comparison(BinaryOp op) {
  return op == BinaryOp::Eq || op == BinaryOp::Ne || op == BinaryOp::Lt ||
         op == BinaryOp::Le || op == BinaryOp::Gt || op == BinaryOp::Ge;
}

bool is_arithmetic(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul ||
         op == BinaryOp::Div || op == BinaryOp::Mod;
}

bool Expr::operator==(const Expr &other) const {
  if (kind != other.kind || text != other.text) return false;
  switch (kind) {
    case ExprKind::Binary:
      if (binary_op != other.binary_op) return false;
      break;
    case ExprKind::Unary:
      if (unary_op != other.unary_op || postfix != other.postfix) return false;
      break;
    case ExprKind::Call:
      if (method != other.method || (method && arrow != other.arrow))
        return false;
      break;
    case ExprKind::Member:
      if (arrow != other.arrow) return false;
      break;
    default:
      break;
  }
  return children == other.children;
}

Expr make_identifier(std::string name) {
  Expr e;
  e.kind = ExprKind::Identifier;
  e.text = std::move(name);
  return e;
}

Expr make_literal(ExprKind kind, std::string text) {
  Expr e;
  e.kind = kind;
  e.text = std::move(text);
  return e;
}

Expr make_binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::Binary;
  e.binary_op = op;
  e.children.reserve(2);
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

Expr make_unary(UnaryOp op, Expr operand, bool postfix) {
  Expr e;
  e.kind = ExprKind::Unary;
  e.unary_op = op;
  e.postfix = postfix;
  e.children.push_back(std::move(operand));
  return e;
}

Expr make_call(std::string callee, std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::Call;
  e.text = std::move(callee);
  e.children = std::move(args);
  return e;
}

Expr make_method_call(Expr receiver, std::string name, bool arrow,
                      std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::Call;
  e.text = std::move(name);
  e.method = true;
  e.arrow = arrow;
  e.children.reserve(args.size() + 1);
  e.children.push_back(std::move(receiver));
  for (auto &a : args) e.children.push_back(std::move(a));
  return e;
}

Expr make_member(Expr base, std::string field, bool arrow) {
  Expr e;
  e.kind = ExprKind::Member;
  e.text = std::move(field);
  e.arrow = arrow;
  e.children.push_back(std::move(base));
  return e;
}

Expr make_index(Expr base, Expr index) {
  Expr e;
  e.kind = ExprKind::Index;
  e.children.push_back(std::move(base));
  e.children.push_back(std::move(index));
  return e;
}

Expr make_cast(std::string type_text, Expr operand) {
  Expr e;
  e.kind = ExprKind::Cast;
  e.text = std::move(type_text);
  e.children.push_back(std::move(operand));
  return e;
}

IntClass int_class(std::string_view spelling) {
  std::string digits;
  for (char c : spelling)
    if (c != '\'') digits.push_back(c);
  while (!digits.empty() &&
         (digits.back() == 'u' || digits.back() == 'U' || digits.back() == 'l' ||
          digits.back() == 'L' || digits.back() == 'z' || digits.back() == 'Z'))
    digits.pop_back();
  int base = 10;
  std::string_view body = digits;
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    base = 16;
    body.remove_prefix(2);
  } else if (body.size() > 2 && body[0] == '0' &&
             (body[1] == 'b' || body[1] == 'B')) {
    base = 2;
    body.remove_prefix(2);
  } else if (body.size() > 1 && body[0] == '0') {
    base = 8;
    body.remove_prefix(1);
  }
  unsigned long long value = 0;
  auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), value, base);
  if (ec != std::errc{} || ptr != body.data() + body.size()) return IntClass::Other;
  if (value == 0) return IntClass::Zero;
  if (value == 1) return IntClass::One;
  return IntClass::Other;
}

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_builtin_type_word(std::string_view w) {
  static constexpr std::array<std::string_view, 16> kWords = {
      "void",  "char",     "short",  "int",    "long",     "float",
      "double", "signed",  "unsigned", "bool", "_Bool",    "const",
      "volatile", "struct", "union",  "enum"};
  return std::find(kWords.begin(), kWords.end(), w) != kWords.end();
}

bool is_qualifier(std::string_view w) { return w == "const" || w == "volatile"; }

bool looks_like_typedef(std::string_view w) {
  return w.size() > 2 && w.substr(w.size() - 2) == "_t";
}

class Parser {
 public:
  Parser(std::string_view text, ParseMode mode)
      : tokens_(tokenize(text)), mode_(mode), end_offset_(text.size()) {}

  Expr parse() {
    Expr e = parse_binary(1);
    if (!at_end()) fail("end of expression");
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseMode mode_;
  std::size_t end_offset_;

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token *peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool peek_punct(std::string_view p, std::size_t ahead = 0) const {
    const Token *t = peek(ahead);
    return t && t->kind == TokenKind::Punct && t->text == p;
  }

  bool peek_word(std::string_view w, std::size_t ahead = 0) const {
    const Token *t = peek(ahead);
    return t && t->kind == TokenKind::Identifier && t->text == w;
  }

  std::size_t offset() const {
    return at_end() ? end_offset_ : tokens_[pos_].offset;
  }

  [[noreturn]] void fail(std::string expected) const {
    throw ParseError(offset(), std::move(expected));
  }

  void expect_punct(std::string_view p) {
    if (!peek_punct(p)) fail("'" + std::string(p) + "'");
    ++pos_;
  }

  static bool binary_from(std::string_view p, BinaryOp &op) {
    static const std::pair<std::string_view, BinaryOp> kTable[] = {
        {"&&", BinaryOp::LogicalAnd}, {"||", BinaryOp::LogicalOr},
        {"==", BinaryOp::Eq},         {"!=", BinaryOp::Ne},
        {"<", BinaryOp::Lt},          {"<=", BinaryOp::Le},
        {">", BinaryOp::Gt},          {">=", BinaryOp::Ge},
        {"+", BinaryOp::Add},         {"-", BinaryOp::Sub},
        {"*", BinaryOp::Mul},         {"/", BinaryOp::Div},
        {"%", BinaryOp::Mod},         {"&", BinaryOp::BitAnd},
        {"|", BinaryOp::BitOr},       {"^", BinaryOp::BitXor},
        {"<<", BinaryOp::Shl},        {">>", BinaryOp::Shr},
        {"=", BinaryOp::Assign},      {",", BinaryOp::Comma},
    };
    for (const auto &[s, o] : kTable) {
      if (s == p) {
        op = o;
        return true;
      }
    }
    return false;
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    for (;;) {
      const Token *t = peek();
      if (!t || t->kind != TokenKind::Punct) break;
      BinaryOp op;
      if (!binary_from(t->text, op)) {
        if (t->text == "?") fail("operator (conditional expressions are unsupported)");
        if (t->text.size() >= 2 && t->text.back() == '=' && t->text != "==" &&
            t->text != "!=" && t->text != "<=" && t->text != ">=")
          fail("operator (compound assignment is unsupported)");
        break;
      }
      int prec = precedence(op);
      if (prec < min_prec) break;
      ++pos_;
      Expr rhs = parse_binary(op == BinaryOp::Assign ? prec : prec + 1);
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  // Type-name detection for the token range [begin, end).
  bool is_type_name(std::size_t begin, std::size_t end) const {
    if (begin >= end) return false;
    std::size_t i = begin;
    bool have_base = false;
    bool builtin = false;
    while (i < end && tokens_[i].kind == TokenKind::Identifier &&
           is_qualifier(tokens_[i].text))
      ++i;
    if (i < end && tokens_[i].kind == TokenKind::Identifier) {
      const std::string &w = tokens_[i].text;
      if (w == "struct" || w == "union" || w == "enum") {
        if (i + 1 >= end || tokens_[i + 1].kind != TokenKind::Identifier) return false;
        i += 2;
        have_base = true;
        builtin = true;
      } else if (is_builtin_type_word(w)) {
        while (i < end && tokens_[i].kind == TokenKind::Identifier &&
               is_builtin_type_word(tokens_[i].text) && tokens_[i].text != "struct" &&
               tokens_[i].text != "union" && tokens_[i].text != "enum")
          ++i;
        have_base = true;
        builtin = true;
      } else {
        ++i;
        have_base = true;
      }
    }
    if (!have_base) return false;
    bool declarator = false;
    while (i < end) {
      const Token &t = tokens_[i];
      if (t.kind == TokenKind::Punct && (t.text == "*" || t.text == "&")) {
        declarator = true;
      } else if (t.kind == TokenKind::Identifier && is_qualifier(t.text)) {
      } else {
        return false;
      }
      ++i;
    }
    if (builtin || declarator) return true;
    return looks_like_typedef(tokens_[begin].text) ||
           looks_like_typedef(tokens_[end - 1].text);
  }

  std::string join_tokens(std::size_t begin, std::size_t end) const {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
      if (!out.empty()) out.push_back(' ');
      out += tokens_[i].text;
    }
    return out;
  }

  // Returns the index of the ')' matching the '(' at `open`, or npos.
  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < tokens_.size(); ++i) {
      if (tokens_[i].kind != TokenKind::Punct) continue;
      if (tokens_[i].text == "(") ++depth;
      if (tokens_[i].text == ")" && --depth == 0) return i;
    }
    return std::string::npos;
  }

  static bool starts_operand(const Token &t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::Number:
      case TokenKind::Char:
      case TokenKind::String:
        return true;
      case TokenKind::Punct:
        return t.text == "(" || t.text == "!" || t.text == "~";
    }
    return false;
  }

  // Decides whether the '(' at pos_ opens a C cast.
  bool at_cast(std::size_t &close) const {
    close = matching_paren(pos_);
    if (close == std::string::npos) return false;
    std::size_t begin = pos_ + 1;
    if (!is_type_name(begin, close)) {
      // A lone name in parentheses followed by an operand is a cast.
      if (close == begin + 1 && tokens_[begin].kind == TokenKind::Identifier &&
          close + 1 < tokens_.size() && starts_operand(tokens_[close + 1]) &&
          !is_reserved(tokens_[begin].text))
        return true;
      return false;
    }
    return close + 1 < tokens_.size();
  }

  bool is_reserved(std::string_view w) const {
    return w == "NULL" || w == "nullptr" || w == "true" || w == "false" ||
           w == "this" || w == "sizeof";
  }

  Expr parse_unary() {
    const Token *t = peek();
    if (!t) fail("operand");
    if (t->kind == TokenKind::Punct) {
      static const std::pair<std::string_view, UnaryOp> kPrefix[] = {
          {"!", UnaryOp::Not},      {"-", UnaryOp::Neg},
          {"~", UnaryOp::BitNot},   {"*", UnaryOp::Deref},
          {"&", UnaryOp::AddressOf}, {"++", UnaryOp::Inc},
          {"--", UnaryOp::Dec},
      };
      for (const auto &[s, op] : kPrefix) {
        if (t->text == s) {
          ++pos_;
          return make_unary(op, parse_unary());
        }
      }
      if (t->text == "+") fail("operand (unary + is unsupported)");
      if (t->text == "&&") fail("operand (label address is unsupported)");
      if (t->text == "(") {
        std::size_t close;
        if (at_cast(close)) {
          std::string type = join_tokens(pos_ + 1, close);
          pos_ = close + 1;
          return make_cast(std::move(type), parse_unary());
        }
      }
    } else if (t->kind == TokenKind::Identifier && t->text == "sizeof") {
      ++pos_;
      if (peek_punct("(")) {
        std::size_t close = matching_paren(pos_);
        if (close != std::string::npos && is_type_name(pos_ + 1, close)) {
          std::string callee = "sizeof(" + join_tokens(pos_ + 1, close) + ")";
          pos_ = close + 1;
          return parse_postfix(make_call(std::move(callee), {}));
        }
      }
      std::vector<Expr> args;
      args.push_back(parse_unary());
      return make_call("sizeof", std::move(args));
    }
    return parse_postfix(parse_primary());
  }

  Expr parse_postfix(Expr base) {
    for (;;) {
      if (peek_punct("(")) {
        std::size_t at = offset();
        ++pos_;
        std::vector<Expr> args;
        if (!peek_punct(")")) {
          for (;;) {
            args.push_back(parse_binary(2));
            if (peek_punct(",")) {
              ++pos_;
              continue;
            }
            break;
          }
        }
        expect_punct(")");
        if (base.kind == ExprKind::Identifier && base.text != "this") {
          base = make_call(std::move(base.text), std::move(args));
        } else if (base.kind == ExprKind::Member) {
          Expr receiver = std::move(base.children[0]);
          base = make_method_call(std::move(receiver), std::move(base.text),
                                  base.arrow, std::move(args));
        } else {
          throw ParseError(at, "named callee");
        }
      } else if (peek_punct("[")) {
        ++pos_;
        Expr index = parse_binary(1);
        expect_punct("]");
        base = make_index(std::move(base), std::move(index));
      } else if (peek_punct(".") || peek_punct("->")) {
        bool arrow = peek_punct("->");
        ++pos_;
        const Token *name = peek();
        if (!name || name->kind != TokenKind::Identifier) fail("member name");
        std::string field = name->text;
        ++pos_;
        base = make_member(std::move(base), std::move(field), arrow);
      } else if (peek_punct("++") || peek_punct("--")) {
        UnaryOp op = peek_punct("++") ? UnaryOp::Inc : UnaryOp::Dec;
        ++pos_;
        base = make_unary(op, std::move(base), true);
      } else {
        break;
      }
    }
    return base;
  }

  Expr parse_cxx_cast(std::string keyword) {
    expect_punct("<");
    std::size_t begin = pos_;
    int depth = 1;
    while (!at_end()) {
      const Token &t = tokens_[pos_];
      if (t.kind == TokenKind::Punct && t.text == "<") ++depth;
      if (t.kind == TokenKind::Punct && t.text == ">" && --depth == 0) break;
      if (t.kind == TokenKind::Punct && t.text == ">>") fail("'>' (nested template arguments are unsupported)");
      ++pos_;
    }
    if (at_end() || pos_ == begin) fail("'>' closing cast type");
    std::string type = keyword + "<" + join_tokens(begin, pos_) + ">";
    ++pos_;
    expect_punct("(");
    Expr operand = parse_binary(1);
    expect_punct(")");
    return make_cast(std::move(type), std::move(operand));
  }

  Expr parse_primary() {
    const Token *t = peek();
    if (!t) fail("operand");
    const Token tok = *t;
    switch (tok.kind) {
      case TokenKind::Number:
        ++pos_;
        return make_literal(tok.is_float ? ExprKind::FloatLit : ExprKind::IntLit,
                            tok.text);
      case TokenKind::Char:
        ++pos_;
        return make_literal(ExprKind::CharLit, tok.text);
      case TokenKind::String: {
        ++pos_;
        std::string text = tok.text;
        while (peek() && peek()->kind == TokenKind::String) {
          text += ' ';
          text += peek()->text;
          ++pos_;
        }
        return make_literal(ExprKind::StringLit, std::move(text));
      }
      case TokenKind::Identifier:
        return parse_name(tok);
      case TokenKind::Punct:
        break;
    }
    if (tok.text == "(") {
      if (peek_punct("{", 1)) fail("expression (statement expressions are unsupported)");
      ++pos_;
      Expr inner = parse_binary(1);
      expect_punct(")");
      return inner;
    }
    if (tok.text == "[") fail("operand (lambdas are unsupported)");
    if (tok.text == "{") fail("operand (braced initializers are unsupported)");
    fail("operand");
  }

  Expr parse_name(const Token &tok) {
    const std::string &w = tok.text;
    if (w == "NULL" || w == "nullptr") {
      ++pos_;
      return make_literal(ExprKind::NullLit, w);
    }
    if (w == "true" || w == "false") {
      ++pos_;
      return make_literal(ExprKind::BoolLit, w);
    }
    if (w == "static_cast" || w == "reinterpret_cast" || w == "const_cast" ||
        w == "dynamic_cast") {
      ++pos_;
      return parse_cxx_cast(w);
    }
    if (w == "new" || w == "delete" || w == "throw" || w == "co_await" ||
        w == "typeid" || w == "alignof" || w == "_Alignof" || w == "decltype" ||
        w == "operator" || w == "template" || w == "typename" ||
        w == "noexcept" || w == "requires")
      fail("operand ('" + w + "' is unsupported)");
    if (is_builtin_type_word(w)) fail("operand (type name '" + w + "' outside a cast)");
    if (mode_ == ParseMode::Canonical && w.size() == 1) {
      switch (w[0]) {
        case 'N': ++pos_; return make_literal(ExprKind::IntLit, "N");
        case 'F': ++pos_; return make_literal(ExprKind::FloatLit, "F");
        case 'S': ++pos_; return make_literal(ExprKind::StringLit, "S");
        case 'K': ++pos_; return make_literal(ExprKind::CharLit, "K");
        default: break;
      }
    }
    ++pos_;
    if (peek_punct("<") && (peek_punct(">", 2) || peek_punct("::", 2)) &&
        peek(1) && peek(1)->kind == TokenKind::Identifier &&
        is_builtin_type_word(peek(1)->text))
      fail("operand (template arguments are unsupported)");
    return make_identifier(w);
  }
};

// ---------------------------------------------------------------------------
// Printer

int node_prec(const Expr &e) {
  switch (e.kind) {
    case ExprKind::Binary: return precedence(e.binary_op);
    case ExprKind::Unary: return e.postfix ? kPostfixPrec : kUnaryPrec;
    case ExprKind::Cast:
      return e.text.find('<') != std::string::npos ? kPostfixPrec : kUnaryPrec;
    case ExprKind::Call:
    case ExprKind::Member:
    case ExprKind::Index: return kPostfixPrec;
    default: return kPrimaryPrec;
  }
}

bool is_cxx_cast(const std::string &type_text) {
  return type_text.find("_cast<") != std::string::npos && !type_text.empty() &&
         type_text.back() == '>';
}

class Printer {
 public:
  explicit Printer(Writer &w) : w_(w) {}

  void print(const Expr &e) {
    switch (e.kind) {
      case ExprKind::Identifier:
      case ExprKind::IntLit:
      case ExprKind::FloatLit:
      case ExprKind::CharLit:
      case ExprKind::StringLit:
      case ExprKind::NullLit:
      case ExprKind::BoolLit:
        w_.word(e.text);
        return;
      case ExprKind::Binary: {
        int p = precedence(e.binary_op);
        bool right_assoc = e.binary_op == BinaryOp::Assign;
        const Expr &l = e.lhs();
        const Expr &r = e.rhs();
        int lp = node_prec(l);
        int rp = node_prec(r);
        child(l, lp < p || (right_assoc && lp == p));
        w_.binary_op(spelling(e.binary_op));
        child(r, rp < p || (!right_assoc && rp == p));
        return;
      }
      case ExprKind::Unary:
        if (e.postfix) {
          child(e.operand(), node_prec(e.operand()) < kPostfixPrec);
          w_.punct(spelling(e.unary_op));
        } else {
          w_.punct(spelling(e.unary_op));
          child(e.operand(), node_prec(e.operand()) < kUnaryPrec);
        }
        return;
      case ExprKind::Cast:
        if (is_cxx_cast(e.text)) {
          w_.word(e.text);
          w_.punct("(");
          print(e.operand());
          w_.punct(")");
        } else {
          w_.punct("(");
          w_.word(e.text);
          w_.punct(")");
          child(e.operand(), node_prec(e.operand()) < kUnaryPrec);
        }
        return;
      case ExprKind::Call: {
        std::size_t first_arg = 0;
        if (e.method) {
          child(e.children[0], node_prec(e.children[0]) < kPostfixPrec);
          w_.punct(e.arrow ? "->" : ".");
          first_arg = 1;
        }
        w_.word(e.text);
        if (e.text.rfind("sizeof(", 0) == 0) return;
        w_.punct("(");
        for (std::size_t i = first_arg; i < e.children.size(); ++i) {
          if (i > first_arg) w_.separator(",");
          const Expr &a = e.children[i];
          child(a, a.kind == ExprKind::Binary && a.binary_op == BinaryOp::Comma);
        }
        w_.punct(")");
        return;
      }
      case ExprKind::Member:
        child(e.operand(), node_prec(e.operand()) < kPostfixPrec);
        w_.punct(e.arrow ? "->" : ".");
        w_.word(e.text);
        return;
      case ExprKind::Index:
        child(e.children[0], node_prec(e.children[0]) < kPostfixPrec);
        w_.punct("[");
        print(e.children[1]);
        w_.punct("]");
        return;
    }
  }

 private:
  Writer &w_;

  void child(const Expr &e, bool parens) {
    if (parens) w_.punct("(");
    print(e);
    if (parens) w_.punct(")");
  }
};

}  // namespace

Expr parse_expr(std::string_view text, ParseMode mode) {
  std::size_t first = text.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) throw ParseError(0, "expression");
  Parser p(text, mode);
  return p.parse();
}

std::string print_expr(const Expr &expr) {
  Writer w(Writer::Style::Spaced);
  Printer(w).print(expr);
  return w.take();
}

std::size_t node_count(const Expr &expr) {
  std::size_t n = 1;
  for (const auto &c : expr.children) n += node_count(c);
  return n;
}

}  // namespace mpcc
