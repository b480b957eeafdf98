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

#include "pp_lexer.hpp"

#include <utility>

namespace gforge::detail {

bool is_name_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c >= 0x80;
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, bool allow_comments, ErrorKind error_kind)
      : text_(text), allow_comments_(allow_comments), error_kind_(error_kind) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blanks();
      if (pos_ >= text_.size()) break;
      out.push_back(scan_one());
    }
    Token end{Tok::kEnd, {}, line_, col(), line_indent_, false};
    out.push_back(end);
    return out;
  }

 private:
  int col() const { return static_cast<int>(pos_ - line_start_) + 1; }

  void newline() {
    ++line_;
    line_start_ = pos_;
    line_indent_ = -1;
    line_has_token_ = false;
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        newline();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (allow_comments_ && c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(error_kind_, std::to_string(line_) + ":" +
                                 std::to_string(col()) + ": " + message);
  }

  bool question_run_then_underscore(std::size_t at) const {
    while (at < text_.size() && text_[at] == '?') ++at;
    return at < text_.size() && text_[at] == '_';
  }

  Token scan_one() {
    if (line_indent_ < 0) line_indent_ = col();
    Token tok{Tok::kEnd, {}, line_, col(), line_indent_, !line_has_token_};
    line_has_token_ = true;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c == '"') {
      tok.kind = Tok::kTerminal;
      tok.text = scan_terminal();
      return tok;
    }
    if (is_name_byte(c) || (c == '?' && question_run_then_underscore(pos_))) {
      tok.text = scan_name();
      if (tok.text == "EPSILON") {
        tok.kind = Tok::kEpsilon;
      } else if (tok.text == "ANY") {
        tok.kind = Tok::kAny;
      } else {
        tok.kind = Tok::kName;
      }
      return tok;
    }
    ++pos_;
    switch (c) {
      case '(': tok.kind = Tok::kLParen; break;
      case ')': tok.kind = Tok::kRParen; break;
      case '<': tok.kind = Tok::kLAngle; break;
      case '>': tok.kind = Tok::kRAngle; break;
      case '|': tok.kind = Tok::kBar; break;
      case '?': tok.kind = Tok::kQuestion; break;
      case '*': tok.kind = Tok::kStar; break;
      case '+': tok.kind = Tok::kPlus; break;
      case ':': tok.kind = Tok::kColon; break;
      case ',': tok.kind = Tok::kComma; break;
      case ';': tok.kind = Tok::kSemicolon; break;
      default:
        --pos_;
        fail(std::string("unexpected character '") + static_cast<char>(c) +
             "'");
    }
    tok.text = std::string(1, static_cast<char>(c));
    return tok;
  }

  std::string scan_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (is_name_byte(c)) {
        ++pos_;
      } else if (c == '?' &&
                 ((pos_ > start && text_[pos_ - 1] == '_') ||
                  question_run_then_underscore(pos_))) {
        while (pos_ < text_.size() && text_[pos_] == '?') ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string scan_terminal() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        fail("unterminated terminal");
      }
      char c = text_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= text_.size()) fail("dangling escape");
      char e = text_[pos_++];
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    return out;
  }

  std::string_view text_;
  bool allow_comments_;
  ErrorKind error_kind_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  int line_indent_ = -1;
  bool line_has_token_ = false;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, bool allow_comments,
                            ErrorKind error_kind) {
  return Scanner(text, allow_comments, error_kind).run();
}

const Token& ExprReader::peek(std::size_t ahead) const {
  std::size_t at = pos_ + ahead;
  if (at >= tokens_.size()) return tokens_.back();
  return tokens_[at];
}

const Token& ExprReader::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

void ExprReader::fail(const Token& at, std::string_view message) const {
  std::string where = at.kind == Tok::kEnd ? "end of input" : "'" + at.text + "'";
  throw Error(error_kind_, std::to_string(at.line) + ":" +
                               std::to_string(at.col) + ": " +
                               std::string(message) + " at " + where);
}

void ExprReader::expect(Tok kind, std::string_view what) {
  if (!at(kind)) fail(peek(), std::string("expected ") + std::string(what));
  next();
}

bool ExprReader::at_sequence_end() const {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::kRParen:
    case Tok::kRAngle:
    case Tok::kBar:
    case Tok::kComma:
    case Tok::kSemicolon:
    case Tok::kColon:
    case Tok::kEnd:
      return true;
    default:
      break;
  }
  if (depth_ > 0) return false;
  if (stop_line > 0 && t.line > stop_line && t.first_on_line &&
      t.col <= stop_indent) {
    return true;
  }
  if (t.kind == Tok::kName) {
    if (!stop_word.empty() && t.text == stop_word) return true;
    if (peek(1).kind == Tok::kColon) return true;
  }
  return false;
}

Expr ExprReader::read_choice() {
  std::vector<Expr> alternatives;
  alternatives.push_back(read_sequence());
  while (at(Tok::kBar)) {
    next();
    alternatives.push_back(read_sequence());
  }
  if (alternatives.size() == 1) return std::move(alternatives.front());
  return Expr::choice(std::move(alternatives));
}

Expr ExprReader::read_sequence() {
  std::vector<Expr> parts;
  while (!at_sequence_end()) parts.push_back(read_postfix());
  if (parts.empty()) fail(peek(), "expected expression");
  if (parts.size() == 1) return std::move(parts.front());
  return Expr::sequence(std::move(parts));
}

Expr ExprReader::read_postfix() {
  Expr e = read_atom();
  while (true) {
    if (at(Tok::kQuestion)) {
      e = Expr::optional(std::move(e));
    } else if (at(Tok::kStar)) {
      e = Expr::star(std::move(e));
    } else if (at(Tok::kPlus)) {
      e = Expr::plus(std::move(e));
    } else {
      break;
    }
    next();
  }
  return e;
}

Expr ExprReader::read_atom() {
  const Token& t = next();
  switch (t.kind) {
    case Tok::kName:
      return Expr::nonterminal(t.text);
    case Tok::kTerminal:
      return Expr::terminal(t.text);
    case Tok::kEpsilon:
      return Expr::epsilon();
    case Tok::kAny:
      return Expr::any();
    case Tok::kLParen: {
      ++depth_;
      Expr inner = read_choice();
      expect(Tok::kRParen, "')'");
      --depth_;
      return inner;
    }
    case Tok::kLAngle: {
      ++depth_;
      Expr inner = read_choice();
      expect(Tok::kRAngle, "'>'");
      --depth_;
      return Expr::marked(std::move(inner));
    }
    default:
      fail(t, "expected expression");
  }
}

}  // namespace gforge::detail
