// Copyright 2026 The gforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokenizer shared by the pp-notation reader and the script reader.

#ifndef GFORGE_SRC_PP_LEXER_HPP_
#define GFORGE_SRC_PP_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/error.hpp"
#include "gforge/grammar.hpp"

namespace gforge::detail {

enum class Tok {
  kName,
  kTerminal,
  kEpsilon,
  kAny,
  kLParen,
  kRParen,
  kLAngle,
  kRAngle,
  kBar,
  kQuestion,
  kStar,
  kPlus,
  kColon,
  kComma,
  kSemicolon,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;  // name or unescaped terminal text
  int line = 1;
  int col = 1;
  // Column of the first non-blank character on this token's line.
  int line_indent = 1;
  bool first_on_line = false;
};

// Name characters: ASCII alphanumerics, '_', '-', and any byte >= 0x80.
// A run of '?' is also part of a name when it touches an underscore, which
// covers pseudo-names such as ??_tab_??.
bool is_name_byte(unsigned char c);

// Tokenizes text. "//" starts a comment running to end of line when
// allow_comments is set. Throws Error(error_kind) on malformed input.
std::vector<Token> tokenize(std::string_view text, bool allow_comments,
                            ErrorKind error_kind);

// Recursive-descent reader over a token vector.
class ExprReader {
 public:
  ExprReader(const std::vector<Token>& tokens, ErrorKind error_kind)
      : tokens_(tokens), error_kind_(error_kind) {}

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }
  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at(Tok kind) const { return peek().kind == kind; }
  void expect(Tok kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, std::string_view message) const;

  // Reads a choice expression. Sequences stop at a name equal to stop_word
  // (used for the script keyword "in") and, when stop_line > 0, at the first
  // token on a later line whose indentation is <= stop_indent.
  Expr read_choice();

  std::string stop_word;
  int stop_line = 0;
  int stop_indent = 0;

 private:
  Expr read_sequence();
  Expr read_postfix();
  Expr read_atom();
  bool at_sequence_end() const;

  const std::vector<Token>& tokens_;
  ErrorKind error_kind_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace gforge::detail

#endif  // GFORGE_SRC_PP_LEXER_HPP_
