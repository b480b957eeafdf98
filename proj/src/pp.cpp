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

#include "gforge/pp.hpp"

#include <sstream>
#include <vector>

#include "gforge/error.hpp"
#include "pp_lexer.hpp"

namespace gforge {
namespace {

using detail::ExprReader;
using detail::Tok;
using detail::Token;

enum Level { kTop = 0, kInSequence = 1, kOperand = 2 };

void print_into(const Expr& e, Level level, std::string& out) {
  switch (e.kind()) {
    case ExprKind::kEpsilon:
      out += "EPSILON";
      return;
    case ExprKind::kAny:
      out += "ANY";
      return;
    case ExprKind::kTerminal:
      out += quote_terminal(e.text());
      return;
    case ExprKind::kNonterminal:
      if (!is_printable_name(e.text())) {
        throw Error(ErrorKind::kUnprintableName, "'" + e.text() + "'");
      }
      out += e.text();
      return;
    case ExprKind::kOptional:
    case ExprKind::kStar:
    case ExprKind::kPlus:
      print_into(e.inner(), kOperand, out);
      out += e.is(ExprKind::kOptional) ? "?" : e.is(ExprKind::kStar) ? "*" : "+";
      return;
    case ExprKind::kMarked:
      out += "<";
      print_into(e.inner(), kTop, out);
      out += ">";
      return;
    case ExprKind::kSequence:
    case ExprKind::kChoice: {
      auto children = e.children();
      if (children.empty()) {
        out += "EPSILON";
        return;
      }
      if (children.size() == 1) {
        print_into(children.front(), level, out);
        return;
      }
      bool is_choice = e.is(ExprKind::kChoice);
      bool parens = is_choice ? level >= kInSequence : level >= kOperand;
      if (parens) out += "(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += is_choice ? " | " : " ";
        print_into(children[i], is_choice ? kInSequence : kOperand, out);
      }
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

Expr parse_expr(std::string_view text) {
  std::vector<Token> tokens = detail::tokenize(text, false, ErrorKind::kParse);
  ExprReader reader(tokens, ErrorKind::kParse);
  Expr e = reader.read_choice();
  if (!reader.at(Tok::kEnd)) reader.fail(reader.peek(), "trailing input");
  return e;
}

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  std::ostringstream body;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line.compare(first, 2, "//") == 0) {
      body << '\n';
      continue;
    }
    if (line.rfind("%start", 0) == 0) {
      std::istringstream names(line.substr(6));
      std::string name;
      while (names >> name) {
        if (!is_printable_name(name)) {
          throw Error(ErrorKind::kParse, std::to_string(line_no) +
                                             ": bad start name '" + name + "'");
        }
        g.starts.insert(name);
      }
      body << '\n';
      continue;
    }
    body << line << '\n';
  }

  std::vector<Token> tokens =
      detail::tokenize(body.str(), false, ErrorKind::kParse);
  ExprReader reader(tokens, ErrorKind::kParse);
  while (!reader.at(Tok::kEnd)) {
    const Token lhs = reader.next();
    if (lhs.kind != Tok::kName) reader.fail(lhs, "expected production name");
    reader.expect(Tok::kColon, "':'");
    reader.stop_line = lhs.line;
    reader.stop_indent = lhs.col;
    g.productions.push_back({lhs.text, reader.read_choice()});
    if (!reader.at(Tok::kEnd) && !(reader.peek().first_on_line &&
                                   reader.peek().col <= lhs.col)) {
      reader.fail(reader.peek(), "unexpected token");
    }
  }
  return normalize(g);
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, kTop, out);
  return out;
}

std::string print_production(const Production& p) {
  if (!is_printable_name(p.lhs)) {
    throw Error(ErrorKind::kUnprintableName, "'" + p.lhs + "'");
  }
  return p.lhs + ": " + print_expr(p.rhs);
}

std::string print_grammar(const Grammar& g) {
  Grammar n = normalize(g);
  std::string out;
  if (!n.starts.empty()) {
    out += "%start";
    for (const auto& s : n.starts) {
      if (!is_printable_name(s)) {
        throw Error(ErrorKind::kUnprintableName, "'" + s + "'");
      }
      out += " " + s;
    }
    out += "\n";
  }
  for (const auto& p : n.productions) {
    out += print_production(p);
    out += "\n";
  }
  return out;
}

std::string quote_terminal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

bool is_printable_name(std::string_view name) {
  if (name.empty()) return false;
  try {
    std::vector<Token> tokens =
        detail::tokenize(name, false, ErrorKind::kParse);
    return tokens.size() == 2 && tokens[0].kind == Tok::kName &&
           tokens[0].text == name;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace gforge
