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

#include <cstdio>
#include <map>

#include "gforge/pp.hpp"
#include "gforge/xbgf.hpp"
#include "pp_lexer.hpp"

namespace gforge {
namespace {

using detail::ExprReader;
using detail::Tok;
using detail::Token;

enum class Args {
  kOneName,
  kOneNameScoped,
  kTwoNames,
  kScopeOnly,
  kTwoTerminals,
  kTwoExprsScoped,
  kProductions,
  kOneProduction,
};

const std::map<std::string, Args, std::less<>>& catalogue() {
  static const std::map<std::string, Args, std::less<>> ops{
      {"renameN", Args::kTwoNames},
      {"renameT", Args::kTwoTerminals},
      {"unite", Args::kTwoNames},
      {"define", Args::kProductions},
      {"redefine", Args::kProductions},
      {"eliminate", Args::kOneName},
      {"inline", Args::kOneName},
      {"fold", Args::kOneNameScoped},
      {"unfold", Args::kOneNameScoped},
      {"massage", Args::kTwoExprsScoped},
      {"deyaccify", Args::kOneName},
      {"vertical", Args::kScopeOnly},
      {"horizontal", Args::kScopeOnly},
      {"distribute", Args::kScopeOnly},
      {"addV", Args::kOneProduction},
      {"removeV", Args::kOneProduction},
      {"replace", Args::kTwoExprsScoped},
      {"widen", Args::kTwoExprsScoped},
      {"project", Args::kOneProduction},
      {"abstractize", Args::kOneProduction},
  };
  return ops;
}

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text)
      : tokens_(detail::tokenize(text, true, ErrorKind::kScriptParse)),
        reader_(tokens_, ErrorKind::kScriptParse) {}

  TransformScript run() {
    TransformScript script;
    while (!reader_.at(Tok::kEnd)) script.steps.push_back(step());
    return script;
  }

 private:
  Step step() {
    const Token op = reader_.next();
    if (op.kind != Tok::kName) reader_.fail(op, "expected an operator name");
    auto it = catalogue().find(op.text);
    if (it == catalogue().end()) reader_.fail(op, "unknown operator '" + op.text + "'");
    Step s;
    s.op = op.text;
    s.line = op.line;
    reader_.expect(Tok::kLParen, "'('");
    switch (it->second) {
      case Args::kOneName:
        s.names.push_back(name());
        break;
      case Args::kOneNameScoped:
        s.names.push_back(name());
        s.scope = scope();
        break;
      case Args::kTwoNames:
        s.names.push_back(name());
        reader_.expect(Tok::kComma, "','");
        s.names.push_back(name());
        break;
      case Args::kScopeOnly:
        s.scope = scope();
        if (!s.scope) reader_.fail(reader_.peek(), "expected 'in <name>'");
        break;
      case Args::kTwoTerminals:
        s.texts.push_back(terminal());
        reader_.expect(Tok::kComma, "','");
        s.texts.push_back(terminal());
        break;
      case Args::kTwoExprsScoped:
        s.exprs.push_back(expr());
        s.scope = scope();
        reader_.expect(Tok::kComma, "','");
        s.exprs.push_back(expr());
        if (!s.scope) s.scope = scope();
        break;
      case Args::kProductions:
        s.productions = productions();
        break;
      case Args::kOneProduction:
        s.productions = productions();
        if (s.productions.size() != 1) {
          reader_.fail(op, op.text + " takes exactly one production");
        }
        break;
    }
    reader_.expect(Tok::kRParen, "')'");
    reader_.expect(Tok::kSemicolon, "';'");
    return s;
  }

  std::string name() {
    const Token t = reader_.next();
    if (t.kind != Tok::kName) reader_.fail(t, "expected a nonterminal name");
    return t.text;
  }

  std::string terminal() {
    const Token t = reader_.next();
    if (t.kind != Tok::kTerminal) reader_.fail(t, "expected a terminal");
    return t.text;
  }

  std::optional<std::string> scope() {
    if (reader_.at(Tok::kName) && reader_.peek().text == "in") {
      reader_.next();
      return name();
    }
    return std::nullopt;
  }

  Expr expr() {
    reader_.stop_word = "in";
    reader_.stop_line = 0;
    Expr e = reader_.read_choice();
    reader_.stop_word.clear();
    return e;
  }

  // `lhs:` blocks; lines at the first body line's indentation are
  // alternatives of one production, deeper lines continue the previous one.
  std::vector<Production> productions() {
    std::vector<Production> out;
    do {
      std::string lhs = name();
      reader_.expect(Tok::kColon, "':'");
      const Token first = reader_.peek();
      std::vector<Expr> alts;
      reader_.stop_line = first.line;
      reader_.stop_indent = first.col;
      for (;;) {
        alts.push_back(reader_.read_choice());
        const Token& t = reader_.peek();
        bool new_lhs = t.kind == Tok::kName && reader_.peek(1).kind == Tok::kColon;
        if (t.first_on_line && t.col == first.col && t.kind != Tok::kRParen &&
            t.kind != Tok::kEnd && !new_lhs) {
          reader_.stop_line = t.line;
          continue;
        }
        break;
      }
      reader_.stop_line = 0;
      out.push_back({lhs, alts.size() == 1 ? alts.front() : Expr::choice(std::move(alts))});
    } while (reader_.at(Tok::kName) && reader_.peek(1).kind == Tok::kColon);
    return out;
  }

  std::vector<Token> tokens_;
  ExprReader reader_;
};

std::string strip_kind(const Error& e) {
  std::string what = e.what();
  std::string prefix = std::string(kind_name(e.kind())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

std::string safe_expr(const Expr& e) {
  try {
    return print_expr(e);
  } catch (const Error&) {
    return "<expression>";
  }
}

}  // namespace

TransformScript parse_script(std::string_view text) { return ScriptParser(text).run(); }

std::string describe(const Step& step) {
  std::string args;
  auto add = [&](const std::string& a) {
    if (!args.empty()) args += ", ";
    args += a;
  };
  for (const auto& n : step.names) add(n);
  for (const auto& t : step.texts) add(quote_terminal(t));
  for (const auto& e : step.exprs) {
    add(e.is(ExprKind::kChoice) ? "(" + safe_expr(e) + ")" : safe_expr(e));
  }
  for (const auto& p : step.productions) add(p.lhs + ": " + safe_expr(p.rhs));
  if (step.scope) args += (args.empty() ? "in " : " in ") + *step.scope;
  return step.op + "(" + args + ")";
}

Grammar apply_step(const Grammar& g, const Step& s) {
  const std::string& op = s.op;
  auto arg = [&](std::size_t i) -> const std::string& { return s.names.at(i); };
  if (op == "renameN") return xbgf::rename_n(g, arg(0), arg(1));
  if (op == "renameT") return xbgf::rename_t(g, s.texts.at(0), s.texts.at(1));
  if (op == "unite") return xbgf::unite(g, arg(0), arg(1));
  if (op == "define") return xbgf::define(g, s.productions);
  if (op == "redefine") return xbgf::redefine(g, s.productions);
  if (op == "eliminate") return xbgf::eliminate(g, arg(0));
  if (op == "inline") return xbgf::inline_nonterminal(g, arg(0));
  if (op == "fold") return xbgf::fold(g, arg(0), s.scope);
  if (op == "unfold") return xbgf::unfold(g, arg(0), s.scope);
  if (op == "massage") return xbgf::massage(g, s.exprs.at(0), s.exprs.at(1), s.scope);
  if (op == "deyaccify") return xbgf::deyaccify(g, arg(0));
  if (op == "vertical") return xbgf::vertical(g, s.scope.value());
  if (op == "horizontal") return xbgf::horizontal(g, s.scope.value());
  if (op == "distribute") return xbgf::distribute(g, s.scope.value());
  if (op == "addV") return xbgf::add_v(g, s.productions.at(0));
  if (op == "removeV") return xbgf::remove_v(g, s.productions.at(0));
  if (op == "replace") return xbgf::replace(g, s.exprs.at(0), s.exprs.at(1), s.scope);
  if (op == "widen") return xbgf::widen(g, s.exprs.at(0), s.exprs.at(1), s.scope);
  if (op == "project") return xbgf::project(g, s.productions.at(0));
  if (op == "abstractize") return xbgf::abstractize(g, s.productions.at(0));
  throw Error(ErrorKind::kScriptParse, "unknown operator '" + op + "'");
}

StepError::StepError(std::size_t index, const Step& step, const Error& cause)
    : Error(cause.kind(), "step " + std::to_string(index) + " (line " +
                              std::to_string(step.line) + ") " + describe(step) + ": " +
                              strip_kind(cause)),
      index_(index),
      op_(step.op) {}

RunResult run_script(const TransformScript& script, const Grammar& g) {
  RunResult r;
  r.grammar = normalize(g);
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const Step& step = script.steps[i];
    Metrics before = metrics(r.grammar);
    try {
      Grammar next = apply_step(r.grammar, step);
      r.log.push_back({i + 1, describe(step), before, metrics(next)});
      r.grammar = std::move(next);
    } catch (const Error& e) {
      r.error.emplace(i + 1, step, e);
      break;
    }
  }
  return r;
}

std::string format_step_log(const std::vector<StepLog>& log) {
  std::string out;
  char buf[160];
  for (const auto& l : log) {
    std::snprintf(buf, sizeof buf,
                  "%4zu  TERM %zu->%zu  VAR %zu->%zu  PROD %zu->%zu  Bottom %zu->%zu  "
                  "Top %zu->%zu  ",
                  l.index, l.before.term, l.after.term, l.before.var, l.after.var,
                  l.before.prod, l.after.prod, l.before.bottoms.size(),
                  l.after.bottoms.size(), l.before.tops.size(), l.after.tops.size());
    out += buf + l.step + "\n";
  }
  return out;
}

}  // namespace gforge
