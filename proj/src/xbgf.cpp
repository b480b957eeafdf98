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

#include "gforge/xbgf.hpp"

#include <algorithm>
#include <span>

#include "gforge/pp.hpp"

namespace gforge::xbgf {
namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

std::string show(const Expr& e) {
  try {
    return print_expr(e);
  } catch (const Error&) {
    return "<expression>";
  }
}

void require_defined(const Grammar& g, const std::string& n) {
  if (!g.defines(n)) fail(ErrorKind::kNotDefined, n + " is not defined");
}

const Production& single_production(const Grammar& g, const std::string& n) {
  require_defined(g, n);
  std::vector<std::size_t> idx = g.productions_of(n);
  if (idx.size() != 1) {
    fail(ErrorKind::kMultipleProductions,
         n + " has " + std::to_string(idx.size()) + " productions");
  }
  return g.productions[idx.front()];
}

bool used_outside(const Grammar& g, const std::string& n) {
  for (const auto& p : g.productions) {
    if (p.lhs != n && mentions(p.rhs, n)) return true;
  }
  return false;
}

// Replaces every occurrence of a pattern, scanning top-down and leftmost;
// replacements are not rescanned.
class Rewriter {
 public:
  Rewriter(Expr pattern, Expr replacement)
      : pattern_(normalize(pattern)), replacement_(normalize(replacement)) {}

  Expr apply(const Expr& e) {
    if (e == pattern_) {
      ++count_;
      return replacement_;
    }
    if (e.children().empty()) return e;
    bool slices = (e.is(ExprKind::kSequence) && pattern_.is(ExprKind::kSequence)) ||
                  (e.is(ExprKind::kChoice) && pattern_.is(ExprKind::kChoice));
    std::span<const Expr> kids = e.children();
    std::vector<Expr> out;
    std::size_t k = slices ? pattern_.children().size() : 0;
    for (std::size_t i = 0; i < kids.size();) {
      if (slices && i + k <= kids.size() &&
          std::equal(pattern_.children().begin(), pattern_.children().end(),
                     kids.begin() + static_cast<std::ptrdiff_t>(i))) {
        out.push_back(replacement_);
        ++count_;
        i += k;
      } else {
        out.push_back(apply(kids[i]));
        ++i;
      }
    }
    return e.with_children(std::move(out));
  }

  std::size_t count() const { return count_; }

 private:
  Expr pattern_;
  Expr replacement_;
  std::size_t count_ = 0;
};

void check_scope(const Grammar& g, const Scope& scope) {
  if (scope) require_defined(g, *scope);
}

bool in_scope(const Production& p, const Scope& scope) {
  return !scope || p.lhs == *scope;
}

// Rewrites pattern -> replacement in the scoped productions, skipping those
// of `exclude`. Returns the number of replacements.
std::size_t rewrite(Grammar& g, const Scope& scope, const std::string& exclude,
                    const Expr& pattern, const Expr& replacement) {
  Rewriter r(pattern, replacement);
  for (auto& p : g.productions) {
    if (!in_scope(p, scope) || p.lhs == exclude) continue;
    p.rhs = normalize(r.apply(p.rhs));
  }
  return r.count();
}

std::string scope_text(const Scope& scope) {
  return scope ? " in " + *scope : std::string();
}

Expr unmark(const Expr& e) {
  return normalize(
      transform(e, [](const Expr& x) { return x.is(ExprKind::kMarked) ? x.inner() : x; }));
}

Expr drop_marked(const Expr& e) {
  return normalize(
      transform(e, [](const Expr& x) { return x.is(ExprKind::kMarked) ? Expr::epsilon() : x; }));
}

Expr canon_node(const Expr& e) {
  auto unary = [](const Expr& x) {
    return x.is(ExprKind::kOptional) || x.is(ExprKind::kStar) || x.is(ExprKind::kPlus);
  };
  if (unary(e) && unary(e.inner())) {
    ExprKind outer = e.kind(), inner = e.inner().kind();
    const Expr& x = e.inner().inner();
    if (outer == inner) return e.inner();
    return Expr::star(x);
  }
  if (e.is(ExprKind::kChoice)) {
    std::vector<Expr> rest;
    for (const auto& c : e.children()) {
      if (!c.is(ExprKind::kEpsilon)) rest.push_back(c);
    }
    if (rest.size() < e.children().size() && !rest.empty()) {
      return Expr::optional(rest.size() == 1 ? rest.front() : Expr::choice(std::move(rest)));
    }
    return e;
  }
  if (e.is(ExprKind::kSequence)) {
    std::vector<Expr> kids(e.children().begin(), e.children().end());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (!kids[i].is(ExprKind::kStar)) continue;
      const Expr x = kids[i].inner();
      std::vector<Expr> body = x.is(ExprKind::kSequence)
                                   ? std::vector<Expr>(x.children().begin(), x.children().end())
                                   : std::vector<Expr>{x};
      std::size_t k = body.size();
      if (i >= k && std::equal(body.begin(), body.end(), kids.begin() + (i - k))) {
        kids.erase(kids.begin() + (i - k), kids.begin() + i + 1);
        kids.insert(kids.begin() + (i - k), Expr::plus(x));
        return Expr::sequence(std::move(kids));
      }
      if (i + k < kids.size() && std::equal(body.begin(), body.end(), kids.begin() + i + 1)) {
        kids.erase(kids.begin() + i, kids.begin() + i + 1 + k);
        kids.insert(kids.begin() + i, Expr::plus(x));
        return Expr::sequence(std::move(kids));
      }
    }
  }
  return e;
}

Expr canonical(const Expr& e) {
  Expr x = normalize(e);
  for (;;) {
    Expr y = normalize(transform(x, canon_node));
    if (y == x) return x;
    x = y;
  }
}

Expr distribute_expr(const Expr& e) {
  if (e.is(ExprKind::kChoice)) {
    std::vector<Expr> alts;
    for (const auto& c : e.children()) {
      Expr d = distribute_expr(c);
      if (d.is(ExprKind::kChoice)) {
        alts.insert(alts.end(), d.children().begin(), d.children().end());
      } else {
        alts.push_back(d);
      }
    }
    return Expr::choice(std::move(alts));
  }
  if (!e.is(ExprKind::kSequence)) return e;
  std::vector<std::vector<Expr>> rows{{}};
  for (const auto& c : e.children()) {
    Expr d = distribute_expr(c);
    std::vector<Expr> options =
        d.is(ExprKind::kChoice) ? std::vector<Expr>(d.children().begin(), d.children().end())
                                : std::vector<Expr>{d};
    std::vector<std::vector<Expr>> next;
    for (const auto& row : rows) {
      for (const auto& o : options) {
        next.push_back(row);
        next.back().push_back(o);
      }
    }
    rows = std::move(next);
  }
  if (rows.size() == 1) return Expr::sequence(std::move(rows.front()));
  std::vector<Expr> alts;
  for (auto& row : rows) alts.push_back(Expr::sequence(std::move(row)));
  return Expr::choice(std::move(alts));
}

std::string same_lhs(const std::vector<Production>& ps) {
  if (ps.empty()) fail(ErrorKind::kShapeMismatch, "no productions given");
  for (const auto& p : ps) {
    if (p.lhs != ps.front().lhs) {
      fail(ErrorKind::kShapeMismatch, "productions define both " + ps.front().lhs + " and " + p.lhs);
    }
  }
  return ps.front().lhs;
}

std::size_t last_index_of(const Grammar& g, const std::string& n) {
  return g.productions_of(n).back();
}

Grammar project_impl(const Grammar& g, const Production& p) {
  Expr plain = unmark(p.rhs);
  for (std::size_t i = 0; i < g.productions.size(); ++i) {
    const Production& q = g.productions[i];
    if (q.lhs == p.lhs && q.rhs == plain) {
      Grammar out = g;
      out.productions[i].rhs = drop_marked(p.rhs);
      return normalize(out);
    }
  }
  fail(ErrorKind::kNoSuchProduction,
       "no production " + p.lhs + ": " + show(plain));
}

}  // namespace

bool massage_equivalent(const Expr& a, const Expr& b) {
  return canonical(a) == canonical(b);
}

bool widens(const Expr& narrow, const Expr& wide) {
  Expr a = normalize(narrow), b = normalize(wide);
  if ((b.is(ExprKind::kOptional) || b.is(ExprKind::kStar) || b.is(ExprKind::kPlus)) &&
      b.inner() == a) {
    return true;
  }
  if ((a.is(ExprKind::kPlus) || a.is(ExprKind::kOptional)) && b.is(ExprKind::kStar) &&
      a.inner() == b.inner()) {
    return true;
  }
  if (a.kind() != b.kind() || a.text() != b.text() || a.children().empty() ||
      a.children().size() != b.children().size()) {
    return false;
  }
  bool any = false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (a.children()[i] == b.children()[i]) continue;
    if (!widens(a.children()[i], b.children()[i])) return false;
    any = true;
  }
  return any;
}

Grammar rename_n(const Grammar& g, const std::string& from, const std::string& to) {
  if (!occurs(g, from)) fail(ErrorKind::kSourceMissing, from + " does not occur");
  if (occurs(g, to)) fail(ErrorKind::kTargetNotFresh, to + " already occurs");
  Grammar out = g;
  for (auto& p : out.productions) {
    if (p.lhs == from) p.lhs = to;
    p.rhs = rename_nonterminal(p.rhs, from, to);
  }
  if (out.starts.erase(from)) out.starts.insert(to);
  return normalize(out);
}

Grammar rename_t(const Grammar& g, const std::string& from, const std::string& to) {
  bool found = std::any_of(g.productions.begin(), g.productions.end(),
                           [&](const Production& p) { return contains_terminal(p.rhs, from); });
  if (!found) fail(ErrorKind::kSourceMissing, "terminal " + quote_terminal(from) + " does not occur");
  Grammar out = g;
  for (auto& p : out.productions) {
    p.rhs = normalize(transform(p.rhs, [&](const Expr& x) {
      return x.is(ExprKind::kTerminal) && x.text() == from ? Expr::terminal(to) : x;
    }));
  }
  return normalize(out);
}

Grammar unite(const Grammar& g, const std::string& donor, const std::string& receiver) {
  if (donor == receiver) fail(ErrorKind::kSameName, "cannot unite " + donor + " with itself");
  if (!occurs(g, donor)) fail(ErrorKind::kSourceMissing, donor + " does not occur");
  if (!occurs(g, receiver)) fail(ErrorKind::kSourceMissing, receiver + " does not occur");
  Grammar out;
  out.starts = g.starts;
  if (out.starts.erase(donor)) out.starts.insert(receiver);
  std::vector<Production> moved;
  bool receiver_defined = g.defines(receiver);
  for (const auto& p : g.productions) {
    Production q{p.lhs == donor ? receiver : p.lhs, rename_nonterminal(p.rhs, donor, receiver)};
    if (p.lhs == donor && receiver_defined) {
      moved.push_back(std::move(q));
    } else {
      out.productions.push_back(std::move(q));
    }
  }
  if (!moved.empty()) {
    std::size_t at = last_index_of(out, receiver) + 1;
    out.productions.insert(out.productions.begin() + static_cast<std::ptrdiff_t>(at),
                           moved.begin(), moved.end());
  }
  return normalize(out);
}

Grammar define(const Grammar& g, const std::vector<Production>& ps) {
  std::string n = same_lhs(ps);
  if (g.defines(n)) fail(ErrorKind::kAlreadyDefined, n + " is already defined");
  Grammar out = g;
  for (const auto& p : ps) out.productions.push_back({p.lhs, normalize(p.rhs)});
  return normalize(out);
}

Grammar redefine(const Grammar& g, const std::vector<Production>& ps) {
  std::string n = same_lhs(ps);
  require_defined(g, n);
  Grammar out;
  out.starts = g.starts;
  bool placed = false;
  for (const auto& p : g.productions) {
    if (p.lhs != n) {
      out.productions.push_back(p);
    } else if (!placed) {
      for (const auto& q : ps) out.productions.push_back({q.lhs, normalize(q.rhs)});
      placed = true;
    }
  }
  return normalize(out);
}

Grammar eliminate(const Grammar& g, const std::string& n) {
  require_defined(g, n);
  if (used_outside(g, n)) fail(ErrorKind::kStillUsed, n + " is still used");
  Grammar out;
  out.starts = g.starts;
  out.starts.erase(n);
  for (const auto& p : g.productions) {
    if (p.lhs != n) out.productions.push_back(p);
  }
  return out;
}

Grammar inline_nonterminal(const Grammar& g, const std::string& n) {
  const Production& def = single_production(g, n);
  if (mentions(def.rhs, n)) fail(ErrorKind::kSelfReference, n + " refers to itself");
  Expr body = def.rhs;
  Grammar out;
  out.starts = g.starts;
  out.starts.erase(n);
  for (const auto& p : g.productions) {
    if (p.lhs == n) continue;
    out.productions.push_back({p.lhs, normalize(transform(p.rhs, [&](const Expr& x) {
                                 return x.is(ExprKind::kNonterminal) && x.text() == n ? body : x;
                               }))});
  }
  return normalize(out);
}

Grammar fold(const Grammar& g, const std::string& n, const Scope& scope) {
  const Production& def = single_production(g, n);
  check_scope(g, scope);
  Grammar out = g;
  if (rewrite(out, scope, n, def.rhs, Expr::nonterminal(n)) == 0) {
    fail(ErrorKind::kNothingToFold, "body of " + n + " does not occur" + scope_text(scope));
  }
  return normalize(out);
}

Grammar unfold(const Grammar& g, const std::string& n, const Scope& scope) {
  const Production& def = single_production(g, n);
  check_scope(g, scope);
  Grammar out = g;
  if (rewrite(out, scope, n, Expr::nonterminal(n), def.rhs) == 0) {
    fail(ErrorKind::kNothingToUnfold, n + " does not occur" + scope_text(scope));
  }
  return normalize(out);
}

Grammar massage(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope) {
  if (!massage_equivalent(from, to)) {
    fail(ErrorKind::kNotEquivalent, show(from) + " and " + show(to) + " are not related by a law");
  }
  check_scope(g, scope);
  Grammar out = g;
  if (rewrite(out, scope, "", from, to) == 0) {
    fail(ErrorKind::kNothingMatched, show(from) + " does not occur" + scope_text(scope));
  }
  return normalize(out);
}

Grammar deyaccify(const Grammar& g, const std::string& n) {
  std::vector<std::size_t> idx = g.productions_of(n);
  if (idx.size() != 2) {
    fail(ErrorKind::kPatternMismatch,
         n + " has " + std::to_string(idx.size()) + " productions, expected 2");
  }
  const Expr& a = g.productions[idx[0]].rhs;
  const Expr& b = g.productions[idx[1]].rhs;
  bool am = mentions(a, n), bm = mentions(b, n);
  if (am == bm) fail(ErrorKind::kPatternMismatch, n + " is not defined by a base and a recursive case");
  const Expr& base = am ? b : a;
  const Expr& rec = am ? a : b;
  if (!rec.is(ExprKind::kSequence)) fail(ErrorKind::kPatternMismatch, "recursive case of " + n + " has no body");
  std::span<const Expr> kids = rec.children();
  Expr self = Expr::nonterminal(n);
  bool left = kids.front() == self;
  if (!left && kids.back() != self) {
    fail(ErrorKind::kPatternMismatch, n + " is neither left nor right recursive");
  }
  Expr y = normalize(left ? Expr::sequence({kids.begin() + 1, kids.end()})
                          : Expr::sequence({kids.begin(), kids.end() - 1}));
  if (mentions(y, n)) fail(ErrorKind::kPatternMismatch, n + " recurses more than once");
  Expr result = y == base ? Expr::plus(base)
                : left    ? Expr::sequence({base, Expr::star(y)})
                          : Expr::sequence({Expr::star(y), base});
  Grammar out = g;
  out.productions[idx[0]].rhs = normalize(result);
  out.productions.erase(out.productions.begin() + static_cast<std::ptrdiff_t>(idx[1]));
  return normalize(out);
}

Grammar vertical(const Grammar& g, const std::string& n) {
  require_defined(g, n);
  std::vector<std::size_t> idx = g.productions_of(n);
  if (idx.size() != 1 || !g.productions[idx[0]].rhs.is(ExprKind::kChoice)) {
    fail(ErrorKind::kShapeMismatch, n + " is not a single production with a choice");
  }
  Grammar out = g;
  Expr rhs = g.productions[idx[0]].rhs;
  std::vector<Production> split;
  for (const auto& c : rhs.children()) split.push_back({n, c});
  out.productions.erase(out.productions.begin() + static_cast<std::ptrdiff_t>(idx[0]));
  out.productions.insert(out.productions.begin() + static_cast<std::ptrdiff_t>(idx[0]),
                         split.begin(), split.end());
  return normalize(out);
}

Grammar horizontal(const Grammar& g, const std::string& n) {
  require_defined(g, n);
  std::vector<std::size_t> idx = g.productions_of(n);
  if (idx.size() < 2) fail(ErrorKind::kShapeMismatch, n + " has a single production");
  std::vector<Expr> alts;
  for (std::size_t i : idx) alts.push_back(g.productions[i].rhs);
  Grammar out;
  out.starts = g.starts;
  for (std::size_t i = 0; i < g.productions.size(); ++i) {
    if (i == idx.front()) {
      out.productions.push_back({n, normalize(Expr::choice(alts))});
    } else if (g.productions[i].lhs != n) {
      out.productions.push_back(g.productions[i]);
    }
  }
  return normalize(out);
}

Grammar distribute(const Grammar& g, const std::string& n) {
  require_defined(g, n);
  Grammar out = g;
  for (auto& p : out.productions) {
    if (p.lhs == n) p.rhs = normalize(distribute_expr(p.rhs));
  }
  return normalize(out);
}

Grammar add_v(const Grammar& g, const Production& p) {
  require_defined(g, p.lhs);
  Expr rhs = normalize(p.rhs);
  for (std::size_t i : g.productions_of(p.lhs)) {
    if (g.productions[i].rhs == rhs) {
      fail(ErrorKind::kDuplicate, p.lhs + ": " + show(rhs) + " is already present");
    }
  }
  Grammar out = g;
  std::size_t at = last_index_of(g, p.lhs) + 1;
  out.productions.insert(out.productions.begin() + static_cast<std::ptrdiff_t>(at),
                         {p.lhs, rhs});
  return out;
}

Grammar remove_v(const Grammar& g, const Production& p) {
  require_defined(g, p.lhs);
  Expr rhs = normalize(p.rhs);
  std::vector<std::size_t> idx = g.productions_of(p.lhs);
  for (std::size_t i : idx) {
    if (g.productions[i].rhs != rhs) continue;
    if (idx.size() == 1) fail(ErrorKind::kLastAlternative, p.lhs + " has no other production");
    Grammar out = g;
    out.productions.erase(out.productions.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }
  // A single horizontal production: remove the matching top alternative.
  if (idx.size() == 1 && g.productions[idx[0]].rhs.is(ExprKind::kChoice)) {
    std::span<const Expr> alts = g.productions[idx[0]].rhs.children();
    auto it = std::find(alts.begin(), alts.end(), rhs);
    if (it != alts.end()) {
      std::vector<Expr> rest(alts.begin(), it);
      rest.insert(rest.end(), it + 1, alts.end());
      Grammar out = g;
      out.productions[idx[0]].rhs = normalize(Expr::choice(std::move(rest)));
      return out;
    }
  }
  fail(ErrorKind::kNotFound, "no production " + p.lhs + ": " + show(rhs));
}

Grammar replace(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope) {
  check_scope(g, scope);
  Grammar out = g;
  if (rewrite(out, scope, "", from, to) == 0) {
    fail(ErrorKind::kNothingMatched, show(from) + " does not occur" + scope_text(scope));
  }
  return normalize(out);
}

Grammar widen(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope) {
  if (!widens(from, to)) {
    fail(ErrorKind::kNotWidening, show(to) + " does not widen " + show(from));
  }
  check_scope(g, scope);
  Grammar out = g;
  if (rewrite(out, scope, "", from, to) == 0) {
    fail(ErrorKind::kNothingMatched, show(from) + " does not occur" + scope_text(scope));
  }
  return normalize(out);
}

Grammar project(const Grammar& g, const Production& p) { return project_impl(g, p); }

Grammar abstractize(const Grammar& g, const Production& p) {
  visit(p.rhs, [](const Expr& m) {
    if (!m.is(ExprKind::kMarked)) return;
    visit(m.inner(), [](const Expr& x) {
      if (x.is(ExprKind::kNonterminal) || x.is(ExprKind::kAny)) {
        fail(ErrorKind::kMarkedNotConcrete, "marked part contains " + show(x));
      }
    });
  });
  return project_impl(g, p);
}

}  // namespace gforge::xbgf
