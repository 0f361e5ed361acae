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

#ifndef MPCC_LEXER_HPP
#define MPCC_LEXER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mpcc {

enum class TokenKind { Identifier, Number, Char, String, Punct };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
  bool is_float = false;
};

/// Splits expression text into tokens. Qualified names (`a::b`) are a
/// single Identifier. Throws ParseError on characters outside C's token
/// set or an unterminated literal.
std::vector<Token> tokenize(std::string_view text);

/// Token-joining output buffer shared by the source and canonical printers.
/// Inserts a space only where two tokens would otherwise fuse.
class Writer {
 public:
  enum class Style { Spaced, Compact };

  explicit Writer(Style style) : style_(style) {}

  void word(std::string_view w);
  void punct(std::string_view p);
  void binary_op(std::string_view op);
  void separator(std::string_view sep);

  std::string take() { return std::move(out_); }

 private:
  Style style_;
  std::string out_;

  void glue(std::string_view next);
};

}  // namespace mpcc

#endif  // MPCC_LEXER_HPP
