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

#include "gforge/grammar.hpp"

#include <algorithm>
#include <utility>

namespace gforge {

Expr Expr::epsilon() { return Expr(ExprKind::kEpsilon, {}, {}); }
Expr Expr::any() { return Expr(ExprKind::kAny, {}, {}); }
Expr Expr::terminal(std::string text) {
  return Expr(ExprKind::kTerminal, std::move(text), {});
}
Expr Expr::nonterminal(std::string name) {
  return Expr(ExprKind::kNonterminal, std::move(name), {});
}
Expr Expr::sequence(std::vector<Expr> parts) {
  return Expr(ExprKind::kSequence, {}, std::move(parts));
}
Expr Expr::choice(std::vector<Expr> alternatives) {
  return Expr(ExprKind::kChoice, {}, std::move(alternatives));
}
Expr Expr::optional(Expr inner) {
  return Expr(ExprKind::kOptional, {}, {std::move(inner)});
}
Expr Expr::star(Expr inner) {
  return Expr(ExprKind::kStar, {}, {std::move(inner)});
}
Expr Expr::plus(Expr inner) {
  return Expr(ExprKind::kPlus, {}, {std::move(inner)});
}
Expr Expr::marked(Expr inner) {
  return Expr(ExprKind::kMarked, {}, {std::move(inner)});
}

Expr Expr::with_children(std::vector<Expr> children) const {
  return Expr(kind_, text_, std::move(children));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind_ != b.kind_ || a.text_ != b.text_ ||
      a.children_.size() != b.children_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children_.size(); ++i) {
    if (!(a.children_[i] == b.children_[i])) return false;
  }
  return true;
}

bool operator<(const Expr& a, const Expr& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.text_ != b.text_) return a.text_ < b.text_;
  return std::lexicographical_compare(a.children_.begin(), a.children_.end(),
                                      b.children_.begin(), b.children_.end());
}

bool Grammar::defines(std::string_view name) const {
  return std::any_of(productions.begin(), productions.end(),
                     [&](const Production& p) { return p.lhs == name; });
}

std::vector<std::size_t> Grammar::productions_of(std::string_view name) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < productions.size(); ++i) {
    if (productions[i].lhs == name) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Grammar::defined_names() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& p : productions) {
    if (seen.insert(p.lhs).second) out.push_back(p.lhs);
  }
  return out;
}

Expr normalize(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::kEpsilon:
    case ExprKind::kAny:
    case ExprKind::kNonterminal:
      return e;
    case ExprKind::kTerminal:
      return e.text().empty() ? Expr::epsilon() : e;
    case ExprKind::kOptional:
      return Expr::optional(normalize(e.inner()));
    case ExprKind::kStar:
      return Expr::star(normalize(e.inner()));
    case ExprKind::kPlus:
      return Expr::plus(normalize(e.inner()));
    case ExprKind::kMarked: {
      Expr inner = normalize(e.inner());
      if (inner.is(ExprKind::kMarked)) return inner;
      return Expr::marked(std::move(inner));
    }
    case ExprKind::kSequence: {
      std::vector<Expr> parts;
      for (const auto& child : e.children()) {
        Expr n = normalize(child);
        if (n.is(ExprKind::kEpsilon)) continue;
        if (n.is(ExprKind::kSequence)) {
          parts.insert(parts.end(), n.children().begin(), n.children().end());
        } else {
          parts.push_back(std::move(n));
        }
      }
      if (parts.empty()) return Expr::epsilon();
      if (parts.size() == 1) return std::move(parts.front());
      return Expr::sequence(std::move(parts));
    }
    case ExprKind::kChoice: {
      std::vector<Expr> alternatives;
      for (const auto& child : e.children()) {
        Expr n = normalize(child);
        if (n.is(ExprKind::kChoice)) {
          alternatives.insert(alternatives.end(), n.children().begin(),
                              n.children().end());
        } else {
          alternatives.push_back(std::move(n));
        }
      }
      if (alternatives.empty()) return Expr::epsilon();
      if (alternatives.size() == 1) return std::move(alternatives.front());
      return Expr::choice(std::move(alternatives));
    }
  }
  return e;
}

Grammar normalize(const Grammar& g) {
  Grammar out;
  out.starts = g.starts;
  for (const auto& p : g.productions) {
    Production n{p.lhs, normalize(p.rhs)};
    if (std::find(out.productions.begin(), out.productions.end(), n) ==
        out.productions.end()) {
      out.productions.push_back(std::move(n));
    }
  }
  return out;
}

bool equal(const Grammar& a, const Grammar& b) {
  if (a.starts != b.starts) return false;
  if (a.productions.size() != b.productions.size()) return false;
  for (std::size_t i = 0; i < a.productions.size(); ++i) {
    if (a.productions[i].lhs != b.productions[i].lhs) return false;
    if (normalize(a.productions[i].rhs) != normalize(b.productions[i].rhs)) {
      return false;
    }
  }
  return true;
}

Expr transform(const Expr& e, const std::function<Expr(const Expr&)>& fn) {
  if (e.children().empty()) return fn(e);
  std::vector<Expr> children;
  children.reserve(e.children().size());
  for (const auto& child : e.children()) {
    children.push_back(transform(child, fn));
  }
  return fn(e.with_children(std::move(children)));
}

void visit(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  for (const auto& child : e.children()) visit(child, fn);
}

void collect_nonterminals(const Expr& e, std::set<std::string>& out) {
  visit(e, [&](const Expr& n) {
    if (n.is(ExprKind::kNonterminal)) out.insert(n.text());
  });
}

void collect_terminals(const Expr& e, std::set<std::string>& out) {
  visit(e, [&](const Expr& n) {
    if (n.is(ExprKind::kTerminal)) out.insert(n.text());
  });
}

bool mentions(const Expr& e, std::string_view name) {
  if (e.is(ExprKind::kNonterminal)) return e.text() == name;
  return std::any_of(e.children().begin(), e.children().end(),
                     [&](const Expr& c) { return mentions(c, name); });
}

bool contains_terminal(const Expr& e, std::string_view text) {
  if (e.is(ExprKind::kTerminal)) return e.text() == text;
  return std::any_of(e.children().begin(), e.children().end(),
                     [&](const Expr& c) { return contains_terminal(c, text); });
}

bool contains(const Expr& haystack, const Expr& needle) {
  if (haystack == needle) return true;
  return std::any_of(haystack.children().begin(), haystack.children().end(),
                     [&](const Expr& c) { return contains(c, needle); });
}

std::set<std::string> all_names(const Grammar& g) {
  std::set<std::string> names = g.starts;
  for (const auto& p : g.productions) {
    names.insert(p.lhs);
    collect_nonterminals(p.rhs, names);
  }
  return names;
}

bool occurs(const Grammar& g, std::string_view name) {
  if (g.starts.count(std::string(name)) != 0) return true;
  return std::any_of(g.productions.begin(), g.productions.end(),
                     [&](const Production& p) {
                       return p.lhs == name || mentions(p.rhs, name);
                     });
}

Expr rename_nonterminal(const Expr& e, std::string_view from,
                        std::string_view to) {
  return transform(e, [&](const Expr& n) {
    if (n.is(ExprKind::kNonterminal) && n.text() == from) {
      return Expr::nonterminal(std::string(to));
    }
    return n;
  });
}

}  // namespace gforge
