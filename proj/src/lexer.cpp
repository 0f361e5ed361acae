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

#include "mpcc/lexer.hpp"

#include <array>
#include <cctype>

#include "mpcc/expr.hpp"

namespace mpcc {

namespace {

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_literal_prefix(std::string_view s) {
  return s == "L" || s == "u" || s == "U" || s == "u8" || s == "R" ||
         s == "LR" || s == "uR" || s == "UR" || s == "u8R";
}

constexpr std::array<std::string_view, 26> kPunct3And2 = {
    "<<=", ">>=", "...", "->*", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&", "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "::", ".*", "##"};

std::size_t scan_quoted(std::string_view text, std::size_t i, char quote) {
  // i points at the opening quote.
  ++i;
  while (i < text.size() && text[i] != quote) {
    if (text[i] == '\\') ++i;
    if (i < text.size() && text[i] == '\n') break;
    ++i;
  }
  if (i >= text.size() || text[i] != quote)
    throw ParseError(i, std::string("closing ") + quote);
  return i + 1;
}

std::size_t scan_raw_string(std::string_view text, std::size_t i) {
  // i points at the opening quote of R"delim( ... )delim".
  std::size_t open = text.find('(', i + 1);
  if (open == std::string_view::npos) throw ParseError(i, "raw string delimiter");
  std::string close = ")";
  close += text.substr(i + 1, open - i - 1);
  close += '"';
  std::size_t end = text.find(close, open + 1);
  if (end == std::string_view::npos) throw ParseError(i, "raw string terminator");
  return end + close.size();
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view word = text.substr(start, i - start);
      if (i < text.size() && (text[i] == '"' || text[i] == '\'') &&
          is_literal_prefix(word)) {
        bool raw = word.back() == 'R';
        if (text[i] == '\'') {
          i = scan_quoted(text, i, '\'');
          out.push_back({TokenKind::Char, std::string(text.substr(start, i - start)), start});
        } else {
          i = raw ? scan_raw_string(text, i) : scan_quoted(text, i, '"');
          out.push_back({TokenKind::String, std::string(text.substr(start, i - start)), start});
        }
        continue;
      }
      // Qualified names: a::b::c
      while (i + 2 < text.size() && text[i] == ':' && text[i + 1] == ':' &&
             ident_start(static_cast<unsigned char>(text[i + 2]))) {
        i += 2;
        while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c) ||
        (c == '.' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      bool hex = c == '0' && i + 1 < text.size() && (text[i + 1] == 'x' || text[i + 1] == 'X');
      bool is_float = false;
      while (i < text.size()) {
        char d = text[i];
        if ((d == '+' || d == '-') && i > start) {
          char prev = text[i - 1];
          bool exp = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
          if (!exp) break;
          is_float = true;
          ++i;
          continue;
        }
        if (d == '\'' && i + 1 < text.size() &&
            std::isxdigit(static_cast<unsigned char>(text[i + 1]))) {
          ++i;
          continue;
        }
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '.' || d == '_')) break;
        if (d == '.') is_float = true;
        if (!hex && (d == 'e' || d == 'E')) is_float = true;
        if (hex && (d == 'p' || d == 'P')) is_float = true;
        ++i;
      }
      Token t{TokenKind::Number, std::string(text.substr(start, i - start)), start};
      t.is_float = is_float;
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      i = scan_quoted(text, i, '"');
      out.push_back({TokenKind::String, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (c == '\'') {
      i = scan_quoted(text, i, '\'');
      out.push_back({TokenKind::Char, std::string(text.substr(start, i - start)), start});
      continue;
    }
    bool matched = false;
    for (std::string_view p : kPunct3And2) {
      if (text.substr(i, p.size()) == p) {
        if (p == "::" && i + 2 < text.size() &&
            ident_start(static_cast<unsigned char>(text[i + 2]))) {
          // Leading global qualifier: ::name
          break;
        }
        out.push_back({TokenKind::Punct, std::string(p), start});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (text.substr(i, 2) == "::") {
      i += 2;
      while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
      while (i + 2 < text.size() && text[i] == ':' && text[i + 1] == ':' &&
             ident_start(static_cast<unsigned char>(text[i + 2]))) {
        i += 2;
        while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), start});
      continue;
    }
    static constexpr std::string_view kSingles = "()[]{}.,?:;+-*/%&|^!~<>=#";
    if (kSingles.find(static_cast<char>(c)) == std::string_view::npos)
      throw ParseError(i, "token");
    out.push_back({TokenKind::Punct, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  return out;
}

void Writer::glue(std::string_view next) {
  if (out_.empty() || next.empty()) return;
  unsigned char a = static_cast<unsigned char>(out_.back());
  unsigned char b = static_cast<unsigned char>(next.front());
  if (ident_char(a) && (ident_char(b) || b == '\'' || b == '"')) {
    out_.push_back(' ');
    return;
  }
  if (a == ' ') return;
  char pair[2] = {static_cast<char>(a), static_cast<char>(b)};
  std::string_view two(pair, 2);
  for (std::string_view p : kPunct3And2) {
    if (p.substr(0, 2) == two) {
      out_.push_back(' ');
      return;
    }
  }
  if (two == "/*" || two == "//") out_.push_back(' ');
}

void Writer::word(std::string_view w) {
  glue(w);
  out_ += w;
}

void Writer::punct(std::string_view p) {
  glue(p);
  out_ += p;
}

void Writer::binary_op(std::string_view op) {
  if (style_ == Style::Spaced) {
    if (op == ",") {
      out_ += ", ";
      return;
    }
    out_.push_back(' ');
    out_ += op;
    out_.push_back(' ');
    return;
  }
  punct(op);
}

void Writer::separator(std::string_view sep) {
  out_ += sep;
  if (style_ == Style::Spaced) out_.push_back(' ');
}

}  // namespace mpcc
