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

#include "gforge/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "gforge/error.hpp"
#include "gforge/pp.hpp"

namespace gforge {
namespace {

constexpr std::string_view kDefiningVariants[] = {"::=", ":=", "="};

bool name_byte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

unsigned role_bit(Role r) { return 1u << static_cast<int>(r); }

enum class TK { kMeta, kTerminal, kName, kPunct, kRewrite };

struct Tok {
  TK kind;
  std::string text;
  unsigned roles = 0;
  int line = 1;
  int col = 1;
  bool line_start = false;
  bool attached = false;  // no whitespace between this and the previous token
  std::size_t rewrite = 0;

  bool has(Role r) const { return kind == TK::kMeta && (roles & role_bit(r)); }
};

struct Literal {
  std::string text;
  unsigned roles = 0;
  std::optional<std::size_t> rewrite;
};

class Lexer {
 public:
  Lexer(std::string_view text, const NotationSpec& spec, const ExtractOptions& options,
        std::vector<Defect>& defects)
      : text_(text), spec_(spec), defects_(defects) {
    for (const auto& [role, lit] : spec.metasymbols) {
      if (role == Role::kStartGrammar || role == Role::kEndGrammar) continue;
      auto it = std::find_if(literals_.begin(), literals_.end(),
                             [&](const Literal& l) { return l.text == lit && !l.rewrite; });
      if (it == literals_.end()) {
        literals_.push_back({lit, role_bit(role), std::nullopt});
      } else {
        it->roles |= role_bit(role);
      }
    }
    for (std::size_t i = 0; i < options.rewrites.size(); ++i) {
      literals_.push_back({options.rewrites[i].literal, 0, i});
    }
  }

  std::vector<Tok> run() {
    while (pos_ < text_.size()) {
      unsigned char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance(1);
        spaced_ = true;
        continue;
      }
      const Literal* lit = longest_literal();
      if (lit && lit->rewrite) {
        emit(TK::kRewrite, lit->text, lit->text.size(), 0)->rewrite = *lit->rewrite;
      } else if (lit && (lit->roles & role_bit(Role::kStartComment))) {
        skip_comment(lit->text.size());
      } else if (lit && (lit->roles & role_bit(Role::kStartTerminal))) {
        lex_terminal(*lit);
      } else if (lit) {
        emit(TK::kMeta, lit->text, lit->text.size(), lit->roles);
      } else if (name_byte(c)) {
        std::size_t end = pos_;
        while (end < text_.size() && name_byte(text_[end])) ++end;
        emit(TK::kName, std::string(text_.substr(pos_, end - pos_)), end - pos_, 0);
      } else {
        emit(TK::kPunct, std::string(1, static_cast<char>(c)), 1, 0);
      }
    }
    return std::move(tokens_);
  }

 private:
  const Literal* longest_literal() const {
    const Literal* best = nullptr;
    for (const auto& l : literals_) {
      if (text_.compare(pos_, l.text.size(), l.text) != 0) continue;
      if (!best || l.text.size() > best->text.size() ||
          (l.text.size() == best->text.size() && l.rewrite)) {
        best = &l;
      }
    }
    return best;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
        line_fresh_ = true;
      } else {
        ++col_;
      }
    }
  }

  Tok* emit(TK kind, std::string text, std::size_t width, unsigned roles) {
    Tok t{kind, std::move(text), roles, line_, col_, line_fresh_,
          !spaced_ && !tokens_.empty(), 0};
    tokens_.push_back(std::move(t));
    line_fresh_ = false;
    spaced_ = false;
    advance(width);
    return &tokens_.back();
  }

  void skip_comment(std::size_t open_width) {
    int line = line_, col = col_;
    const std::string& close = spec_.get(Role::kEndComment);
    std::size_t end = close.empty() ? std::string_view::npos
                                    : text_.find(close, pos_ + open_width);
    if (end == std::string_view::npos) {
      defects_.push_back({DefectKind::kUnbalancedBracket, line, col,
                          "comment is never closed", "comment runs to end of fragment"});
      advance(text_.size() - pos_);
    } else {
      advance(end + close.size() - pos_);
    }
    spaced_ = true;
  }

  void lex_terminal(const Literal& open) {
    const std::string& close = spec_.get(Role::kEndTerminal).empty()
                                   ? open.text
                                   : spec_.get(Role::kEndTerminal);
    std::size_t from = pos_ + open.text.size();
    std::size_t eol = text_.find('\n', from);
    std::size_t end = text_.find(close, from);
    if (end == std::string_view::npos || (eol != std::string_view::npos && end > eol)) {
      emit(TK::kPunct, open.text, open.text.size(), 0);
      return;
    }
    emit(TK::kTerminal, std::string(text_.substr(from, end - from)),
         end + close.size() - pos_, 0);
  }

  std::string_view text_;
  const NotationSpec& spec_;
  std::vector<Defect>& defects_;
  std::vector<Literal> literals_;
  std::vector<Tok> tokens_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool line_fresh_ = true;
  bool spaced_ = true;
};

struct Head {
  std::string lhs;
  std::size_t body = 0;  // first body token
};

class Parser {
 public:
  Parser(std::vector<Tok> tokens, const NotationSpec& spec, const ExtractOptions& options,
         std::vector<Defect>& defects)
      : toks_(std::move(tokens)), spec_(spec), options_(options), defects_(defects) {}

  std::vector<Production> run() {
    std::vector<Production> out;
    std::size_t i = 0;
    bool after_terminator = true;
    while (i < toks_.size()) {
      std::optional<Head> head;
      if (after_terminator || toks_[i].line_start) head = head_at(i, true);
      if (!head) {
        std::size_t k = i + 1;
        while (k < toks_.size() && !(toks_[k].line_start && head_at(k, false))) ++k;
        defect(DefectKind::kOrphanText, toks_[i],
               "text outside any production: " + spell(i, k), "dropped");
        i = k;
        after_terminator = false;
        continue;
      }
      std::size_t end = head->body;
      bool terminated = false;
      while (end < toks_.size()) {
        if (toks_[end].has(Role::kTerminator)) {
          terminated = true;
          break;
        }
        if (toks_[end].line_start && head_at(end, false)) break;
        ++end;
      }
      if (spec_.has(Role::kTerminator) && !terminated) {
        const Tok& at = toks_[end == 0 ? 0 : end - 1];
        defect(DefectKind::kMissingTerminator, at,
               "production of " + head->lhs + " is not terminated",
               end < toks_.size() ? "ended before the next production"
                                  : "ended at end of fragment");
      }
      end_ = end;
      pos_ = head->body;
      stack_.clear();
      Expr rhs = parse_choice(true);
      out.push_back({head->lhs, normalize(rhs)});
      i = terminated ? end + 1 : end;
      after_terminator = terminated;
    }
    return out;
  }

 private:
  std::optional<Head> head_at(std::size_t i, bool log) {
    if (i >= toks_.size()) return std::nullopt;
    std::size_t j = i;
    std::string lhs;
    bool unbalanced = false;
    if (toks_[j].has(Role::kStartNonterminal) && j + 1 < toks_.size() &&
        toks_[j + 1].kind == TK::kName) {
      lhs = toks_[j + 1].text;
      if (j + 2 < toks_.size() && toks_[j + 2].has(Role::kEndNonterminal)) {
        j += 3;
      } else {
        unbalanced = true;
        j += 2;
      }
    } else if (toks_[j].kind == TK::kName) {
      lhs = toks_[j].text;
      j += 1;
    } else {
      return std::nullopt;
    }
    if (j >= toks_.size() || toks_[j].line != toks_[i].line) return std::nullopt;
    std::size_t body = 0;
    if (toks_[j].has(Role::kDefining)) {
      body = j + 1;
    } else if (options_.tolerate_defining_variants) {
      for (std::string_view variant : kDefiningVariants) {
        std::string joined;
        std::size_t k = j;
        while (k < toks_.size() && joined.size() < variant.size() &&
               (k == j || toks_[k].attached) &&
               (toks_[k].kind == TK::kPunct || toks_[k].kind == TK::kMeta)) {
          joined += toks_[k++].text;
        }
        if (joined == variant) {
          body = k;
          if (log) {
            defect(DefectKind::kWrongDefiningSymbol, toks_[j],
                   "'" + joined + "' used as defining symbol",
                   "accepted as '" + spec_.get(Role::kDefining) + "'");
          }
          break;
        }
      }
      if (body == 0) return std::nullopt;
    } else {
      return std::nullopt;
    }
    if (unbalanced && log) {
      defect(DefectKind::kUnbalancedNonterminal, toks_[i],
             "nonterminal " + lhs + " is not closed", "name ends at " + lhs);
    }
    return Head{lhs, body};
  }

  std::string spell(std::size_t from, std::size_t to) const {
    std::string out;
    for (std::size_t k = from; k < to && k < toks_.size(); ++k) {
      if (!out.empty() && !toks_[k].attached) out += ' ';
      out += toks_[k].kind == TK::kTerminal ? quote_terminal(toks_[k].text) : toks_[k].text;
    }
    return out;
  }

  void defect(DefectKind kind, const Tok& at, std::string message, std::string resolution) {
    defects_.push_back({kind, at.line, at.col, std::move(message), std::move(resolution)});
  }

  bool done() const { return pos_ >= end_; }
  const Tok& cur() const { return toks_[pos_]; }

  static constexpr Role kClosers[] = {Role::kEndOption, Role::kEndGroup, Role::kEndStar,
                                      Role::kEndPlus};

  bool expected_closer(const Tok& t) const {
    for (unsigned mask : stack_) {
      if (t.roles & mask) return true;
    }
    return false;
  }

  bool any_closer(const Tok& t) const {
    for (Role r : kClosers) {
      if (t.has(r)) return true;
    }
    return false;
  }

  Expr parse_choice(bool top) {
    std::vector<Expr> alts;
    if (top && !done() && cur().has(Role::kDefinitionSeparator)) {
      defect(DefectKind::kLeadingBar, cur(), "definition separator before first alternative",
             "separator dropped");
      ++pos_;
    }
    for (;;) {
      alts.push_back(parse_sequence());
      if (!done() && cur().has(Role::kDefinitionSeparator)) {
        ++pos_;
        continue;
      }
      break;
    }
    return alts.size() == 1 ? alts.front() : Expr::choice(std::move(alts));
  }

  Expr parse_sequence() {
    std::vector<Expr> items;
    while (!done()) {
      const Tok& t = cur();
      if (t.has(Role::kDefinitionSeparator)) break;
      if (any_closer(t) && expected_closer(t)) break;
      parse_item(items);
    }
    if (items.size() == 1) return items.front();
    return Expr::sequence(std::move(items));
  }

  void stray(std::vector<Expr>& items, const Tok& t, std::string text) {
    defect(DefectKind::kStrayTokenAsTerminal, t, "stray '" + t.text + "'",
           "read as terminal " + quote_terminal(text));
    items.push_back(Expr::terminal(std::move(text)));
    ++pos_;
  }

  void parse_item(std::vector<Expr>& items) {
    const Tok& t = cur();
    switch (t.kind) {
      case TK::kTerminal:
        items.push_back(Expr::terminal(t.text));
        ++pos_;
        return;
      case TK::kRewrite:
        items.push_back(options_.rewrites[t.rewrite].replacement);
        ++pos_;
        return;
      case TK::kName:
        if (all_digits(t.text)) {
          stray(items, t, t.text);
        } else {
          items.push_back(Expr::nonterminal(t.text));
          ++pos_;
        }
        return;
      case TK::kPunct:
        if (t.text == "?") {
          stray(items, t, t.attached ? "??" : "?");
        } else {
          stray(items, t, t.text);
        }
        return;
      case TK::kMeta:
        break;
    }
    if (t.has(Role::kStartSpecial)) {
      items.push_back(parse_special());
    } else if (t.has(Role::kStartNonterminal)) {
      parse_nonterminal(items);
    } else if (t.has(Role::kStartOption)) {
      items.push_back(Expr::optional(bracketed(role_bit(Role::kEndOption), nullptr)));
    } else if (t.has(Role::kStartGroup)) {
      const Tok& open = t;
      Expr inner = bracketed(role_bit(Role::kEndGroup), nullptr);
      if (!inner.is(ExprKind::kSequence) && !inner.is(ExprKind::kChoice)) {
        defect(DefectKind::kExcessiveBrackets, open, "group around a single element",
               "brackets dropped");
      }
      items.push_back(inner);
    } else if (t.has(Role::kStartStar) && t.has(Role::kStartPlus)) {
      const Tok& open = t;
      const Tok* closer = nullptr;
      Expr inner =
          bracketed(role_bit(Role::kEndStar) | role_bit(Role::kEndPlus), &closer);
      if (closer && closer->has(Role::kEndPlus) && !closer->has(Role::kEndStar)) {
        defect(DefectKind::kAmbiguousRepetition, open,
               "'" + open.text + "' opens both star and plus",
               "closed by '" + closer->text + "', read as plus");
        items.push_back(Expr::plus(inner));
      } else {
        items.push_back(Expr::star(inner));
      }
    } else if (t.has(Role::kStartStar)) {
      items.push_back(Expr::star(bracketed(role_bit(Role::kEndStar), nullptr)));
    } else if (t.has(Role::kStartPlus)) {
      items.push_back(Expr::plus(bracketed(role_bit(Role::kEndPlus), nullptr)));
    } else if (t.has(Role::kException)) {
      parse_exception(items);
    } else if (t.has(Role::kPostfixStar) || t.has(Role::kPostfixPlus) ||
               t.has(Role::kPostfixOption)) {
      if (items.empty()) {
        stray(items, t, t.text);
        return;
      }
      Expr last = items.back();
      if (t.has(Role::kPostfixStar)) {
        items.back() = Expr::star(last);
      } else if (t.has(Role::kPostfixPlus)) {
        items.back() = Expr::plus(last);
      } else {
        items.back() = Expr::optional(last);
      }
      ++pos_;
    } else if (t.has(Role::kConcatenate)) {
      ++pos_;
    } else {
      stray(items, t, t.text);
    }
  }

  // Parses from an opening token to its closer; the closer is consumed when
  // present.
  Expr bracketed(unsigned closers, const Tok** closer_out) {
    const Tok& open = cur();
    ++pos_;
    stack_.push_back(closers);
    Expr inner = parse_choice(false);
    stack_.pop_back();
    if (!done() && (cur().roles & closers)) {
      if (closer_out) *closer_out = &cur();
      ++pos_;
    } else {
      defect(DefectKind::kUnbalancedBracket, open, "'" + open.text + "' is never closed",
             "closed at end of enclosing construct");
    }
    return inner;
  }

  Expr parse_special() {
    const Tok& open = cur();
    ++pos_;
    while (!done() && cur().has(Role::kStartSpecial) && cur().attached) ++pos_;
    std::vector<std::string> words;
    bool closed = false;
    while (!done()) {
      if (cur().has(Role::kEndSpecial)) {
        closed = true;
        ++pos_;
        while (!done() && cur().has(Role::kEndSpecial) && cur().attached) ++pos_;
        break;
      }
      if (cur().kind == TK::kName) words.push_back(cur().text);
      ++pos_;
    }
    std::string name = "??";
    for (const auto& w : words) name += "_" + w;
    name += "_??";
    if (!closed) {
      defect(DefectKind::kUnbalancedBracket, open, "special sequence is never closed",
             "read as " + name);
    }
    return Expr::nonterminal(name);
  }

  void parse_nonterminal(std::vector<Expr>& items) {
    const Tok& open = cur();
    std::size_t p = pos_ + 1;
    if (p < end_ && toks_[p].kind == TK::kName && toks_[p].attached) {
      if (p + 1 < end_ && toks_[p + 1].has(Role::kEndNonterminal)) {
        items.push_back(Expr::nonterminal(toks_[p].text));
        pos_ = p + 2;
        return;
      }
      defect(DefectKind::kUnbalancedNonterminal, open,
             "nonterminal " + toks_[p].text + " is not closed",
             "name ends at " + toks_[p].text);
      items.push_back(Expr::nonterminal(toks_[p].text));
      pos_ = p + 1;
      return;
    }
    std::size_t q = p;
    while (q < end_ && toks_[q].line == open.line &&
           (toks_[q].kind == TK::kName || toks_[q].kind == TK::kPunct)) {
      ++q;
    }
    if (q > p && q < end_ && toks_[q].has(Role::kEndNonterminal)) {
      pos_ = p;
      while (pos_ < q) parse_item(items);
      pos_ = q + 1;
      return;
    }
    stray(items, open, open.text);
  }

  void parse_exception(std::vector<Expr>& items) {
    const Tok& minus = cur();
    ++pos_;
    std::vector<Expr> next;
    if (!done() && !cur().has(Role::kDefinitionSeparator) && !any_closer(cur())) {
      parse_item(next);
    }
    if (items.empty() || !items.back().is(ExprKind::kNonterminal)) {
      defect(DefectKind::kStrayTokenAsTerminal, minus,
             "exception without a nonterminal on its left",
             "read as terminal " + quote_terminal(minus.text));
      items.push_back(Expr::terminal(minus.text));
      items.insert(items.end(), next.begin(), next.end());
      return;
    }
    std::string left = items.back().text();
    if (next.size() == 1 && next.front().is(ExprKind::kNonterminal)) {
      items.back() = Expr::nonterminal(left + "_-_" + next.front().text());
      return;
    }
    items.back() = Expr::nonterminal(left + "_-");
    items.insert(items.end(), next.begin(), next.end());
  }

  std::vector<Tok> toks_;
  const NotationSpec& spec_;
  const ExtractOptions& options_;
  std::vector<Defect>& defects_;
  std::vector<unsigned> stack_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

std::size_t match_tolerant(std::string_view doc, std::size_t i, std::string_view lit) {
  std::size_t j = i;
  for (char c : lit) {
    if (c == '"') continue;
    while (j < doc.size() && doc[j] == '"' && j > i) ++j;
    if (j >= doc.size() || doc[j] != c) return std::string_view::npos;
    ++j;
  }
  while (j < doc.size() && doc[j] == '"') ++j;
  return j;
}

void position_after(std::string_view doc, std::size_t upto, int& line, int& col) {
  line = 1;
  col = 1;
  for (std::size_t k = 0; k < upto; ++k) {
    if (doc[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

class DialectPrinter {
 public:
  explicit DialectPrinter(const NotationSpec& spec) : spec_(spec) {}

  std::string production(const Production& p) {
    if (!plain_name(p.lhs)) unprintable("name " + p.lhs);
    std::string out = wrap_name(p.lhs) + " " + spec_.get(Role::kDefining) + " " +
                      expr(p.rhs, Ctx::kTop);
    if (spec_.has(Role::kTerminator)) out += " " + spec_.get(Role::kTerminator);
    return out;
  }

 private:
  enum class Ctx { kTop, kItem, kOperand };

  [[noreturn]] void unprintable(const std::string& what) const {
    throw Error(ErrorKind::kUnprintable, what + " has no rendering in this dialect");
  }

  std::vector<Tok> relex(const std::string& text) const {
    std::vector<Defect> ignored;
    ExtractOptions none;
    return Lexer(text, spec_, none, ignored).run();
  }

  bool plain_name(const std::string& n) const {
    std::vector<Tok> t = relex(n);
    return t.size() == 1 && t[0].kind == TK::kName && t[0].text == n && !all_digits(n);
  }

  std::string wrap_name(const std::string& n) const {
    if (!spec_.has(Role::kStartNonterminal)) return n;
    return spec_.get(Role::kStartNonterminal) + n + spec_.get(Role::kEndNonterminal);
  }

  std::string name(const std::string& n) const {
    if (spec_.has(Role::kException) && n.find("_-") != std::string::npos) {
      const std::string& minus = spec_.get(Role::kException);
      std::size_t cut = n.find("_-_");
      if (cut != std::string::npos) {
        return name(n.substr(0, cut)) + " " + minus + " " + name(n.substr(cut + 3));
      }
      if (n.size() > 2 && n.ends_with("_-")) {
        return name(n.substr(0, n.size() - 2)) + " " + minus;
      }
    }
    if (plain_name(n)) return wrap_name(n);
    if (spec_.has(Role::kStartSpecial) && n.size() > 6 && n.starts_with("??_") &&
        n.ends_with("_??")) {
      std::string body = n.substr(3, n.size() - 6);
      std::string words;
      std::size_t from = 0;
      for (;;) {
        std::size_t to = body.find('_', from);
        std::string w = body.substr(from, to == std::string::npos ? to : to - from);
        if (!plain_name(w)) unprintable("name " + n);
        words += w + " ";
        if (to == std::string::npos) break;
        from = to + 1;
      }
      return spec_.get(Role::kStartSpecial) + " " + words + spec_.get(Role::kEndSpecial);
    }
    unprintable("name " + n);
  }

  std::string terminal(const std::string& text) const {
    if (!spec_.has(Role::kStartTerminal)) unprintable("terminal " + quote_terminal(text));
    const std::string& close = spec_.has(Role::kEndTerminal) ? spec_.get(Role::kEndTerminal)
                                                             : spec_.get(Role::kStartTerminal);
    std::string out = spec_.get(Role::kStartTerminal) + text + close;
    std::vector<Tok> t = relex(out);
    bool ok = text.empty() ? t.size() == 1 && t[0].kind == TK::kTerminal && t[0].text.empty()
                           : t.size() == 1 && t[0].kind == TK::kTerminal && t[0].text == text;
    if (!ok) unprintable("terminal " + quote_terminal(text));
    return out;
  }

  std::string group(const std::string& inner) const {
    if (!spec_.has(Role::kStartGroup)) unprintable("nested group");
    return spec_.get(Role::kStartGroup) + " " + inner + " " + spec_.get(Role::kEndGroup);
  }

  std::string bracket(Role open, Role close, const Expr& inner) {
    return spec_.get(open) + " " + expr(inner, Ctx::kTop) + " " + spec_.get(close);
  }

  std::string postfix(Role role, const Expr& inner) {
    return expr(inner, Ctx::kOperand) + spec_.get(role);
  }

  std::string star(const Expr& inner) {
    if (spec_.has(Role::kStartStar)) return bracket(Role::kStartStar, Role::kEndStar, inner);
    if (spec_.has(Role::kPostfixStar)) return postfix(Role::kPostfixStar, inner);
    unprintable("repetition");
  }

  std::string expr(const Expr& e, Ctx ctx) {
    switch (e.kind()) {
      case ExprKind::kEpsilon:
        return terminal("");
      case ExprKind::kTerminal:
        return terminal(e.text());
      case ExprKind::kNonterminal:
        return name(e.text());
      case ExprKind::kAny:
        if (!spec_.has(Role::kStartSpecial)) unprintable("ANY");
        return spec_.get(Role::kStartSpecial) + " ANY " + spec_.get(Role::kEndSpecial);
      case ExprKind::kMarked:
        unprintable("marked expression");
      case ExprKind::kSequence: {
        std::string sep = spec_.has(Role::kConcatenate)
                              ? " " + spec_.get(Role::kConcatenate) + " "
                              : std::string(" ");
        std::string out;
        for (const auto& c : e.children()) {
          if (!out.empty()) out += sep;
          out += expr(c, Ctx::kItem);
        }
        return ctx == Ctx::kOperand ? group(out) : out;
      }
      case ExprKind::kChoice: {
        if (!spec_.has(Role::kDefinitionSeparator)) unprintable("choice");
        std::string out;
        for (const auto& c : e.children()) {
          if (!out.empty()) out += " " + spec_.get(Role::kDefinitionSeparator) + " ";
          out += expr(c, Ctx::kTop);
        }
        return ctx == Ctx::kTop ? out : group(out);
      }
      case ExprKind::kOptional:
        if (spec_.has(Role::kStartOption)) {
          return bracket(Role::kStartOption, Role::kEndOption, e.inner());
        }
        if (spec_.has(Role::kPostfixOption)) return postfix(Role::kPostfixOption, e.inner());
        return expr(Expr::choice({e.inner(), Expr::epsilon()}), ctx);
      case ExprKind::kStar:
        return star(e.inner());
      case ExprKind::kPlus: {
        if (spec_.has(Role::kStartPlus)) {
          return bracket(Role::kStartPlus, Role::kEndPlus, e.inner());
        }
        if (spec_.has(Role::kPostfixPlus)) return postfix(Role::kPostfixPlus, e.inner());
        return expr(Expr::sequence({e.inner(), Expr::star(e.inner())}), ctx);
      }
    }
    unprintable("expression");
  }

  const NotationSpec& spec_;
};

}  // namespace

std::string_view defect_kind_name(DefectKind kind) {
  switch (kind) {
    case DefectKind::kUnbalancedNonterminal: return "unbalanced-nonterminal";
    case DefectKind::kStrayTokenAsTerminal: return "stray-token-as-terminal";
    case DefectKind::kAmbiguousRepetition: return "ambiguous-repetition";
    case DefectKind::kExcessiveBrackets: return "excessive-brackets";
    case DefectKind::kWrongDefiningSymbol: return "wrong-defining-symbol";
    case DefectKind::kMissingTerminator: return "missing-terminator";
    case DefectKind::kLeadingBar: return "leading-bar";
    case DefectKind::kUnbalancedBracket: return "unbalanced-bracket";
    case DefectKind::kOrphanText: return "orphan-text";
  }
  return "unknown";
}

std::string format_defect(const Defect& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.col) + " " +
         std::string(defect_kind_name(d.kind)) + " " + d.message + " | " + d.resolution;
}

std::vector<Rewrite> parse_rewrites(std::string_view text) {
  std::vector<Rewrite> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos || raw[b] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorKind::kConfig, "rewrites line " + std::to_string(line) + ": " + msg);
    };
    if (raw[b] != '"') fail("expected a quoted literal");
    std::string literal;
    std::size_t i = b + 1;
    for (; i < raw.size() && raw[i] != '"'; ++i) {
      if (raw[i] == '\\' && i + 1 < raw.size()) {
        char e = raw[++i];
        literal.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e == 'r' ? '\r' : e);
      } else {
        literal.push_back(raw[i]);
      }
    }
    if (i >= raw.size()) fail("unterminated literal");
    if (literal.empty()) fail("empty literal");
    std::size_t arrow = raw.find("->", i + 1);
    if (arrow == std::string::npos) fail("expected '->'");
    try {
      out.push_back({literal, parse_expr(raw.substr(arrow + 2))});
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return out;
}

std::vector<Fragment> locate_fragments(std::string_view document, const NotationSpec& spec) {
  if (!spec.has(Role::kStartGrammar)) return {Fragment{std::string(document), 1, 1}};
  const std::string& open = spec.get(Role::kStartGrammar);
  const std::string& close = spec.get(Role::kEndGrammar);
  std::vector<Fragment> out;
  std::size_t i = 0;
  while (i < document.size()) {
    std::size_t body = std::string_view::npos;
    std::size_t at = i;
    for (; at < document.size(); ++at) {
      body = match_tolerant(document, at, open);
      if (body != std::string_view::npos) break;
    }
    if (body == std::string_view::npos) break;
    std::size_t end = close.empty() ? document.size() : document.find(close, body);
    int line, col;
    position_after(document, body, line, col);
    if (end == std::string_view::npos) {
      throw Error(ErrorKind::kUnterminatedFragment,
                  "fragment opened at line " + std::to_string(line) + " is never closed");
    }
    out.push_back({std::string(document.substr(body, end - body)), line, col});
    i = end + close.size();
  }
  return out;
}

std::vector<std::string> split_fragments(std::string_view document, const NotationSpec& spec) {
  std::vector<std::string> out;
  for (auto& f : locate_fragments(document, spec)) out.push_back(std::move(f.text));
  return out;
}

ExtractionReport extract(std::string_view fragment, const NotationSpec& spec,
                         const ExtractOptions& options) {
  ExtractionReport report;
  std::vector<Tok> tokens = Lexer(fragment, spec, options, report.defects).run();
  std::vector<Production> prods =
      Parser(std::move(tokens), spec, options, report.defects).run();
  if (prods.empty()) {
    throw Error(ErrorKind::kFatalSyntax, "no production could be recovered");
  }
  report.grammar.productions = std::move(prods);
  report.grammar = normalize(report.grammar);
  return report;
}

ExtractionReport extract_document(std::string_view document, const NotationSpec& spec,
                                  const ExtractOptions& options) {
  ExtractionReport out;
  std::vector<Grammar> parts;
  for (const auto& f : locate_fragments(document, spec)) {
    ExtractionReport r = extract(f.text, spec, options);
    for (auto d : r.defects) {
      if (d.line == 1) d.col += f.col - 1;
      d.line += f.line - 1;
      out.defects.push_back(std::move(d));
    }
    parts.push_back(std::move(r.grammar));
  }
  if (parts.empty()) throw Error(ErrorKind::kFatalSyntax, "document has no grammar fragment");
  out.grammar = merge(parts);
  return out;
}

Grammar merge(const std::vector<Grammar>& parts) {
  Grammar out;
  std::set<std::pair<std::string, Expr>> seen;
  for (const auto& g : parts) {
    for (const auto& p : g.productions) {
      if (seen.insert({p.lhs, p.rhs}).second) out.productions.push_back(p);
    }
    out.starts.insert(g.starts.begin(), g.starts.end());
  }
  return out;
}

std::string pretty_print(const Grammar& g, const NotationSpec& spec) {
  DialectPrinter printer(spec);
  std::string out;
  if (spec.has(Role::kStartGrammar)) out += spec.get(Role::kStartGrammar) + "\n";
  for (const auto& p : g.productions) out += printer.production(p) + "\n";
  if (spec.has(Role::kEndGrammar)) out += spec.get(Role::kEndGrammar) + "\n";
  return out;
}

}  // namespace gforge
