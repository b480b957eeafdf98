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

// Notation-neutral grammar representation.
//
// An Expr is an immutable value tree describing the right-hand side of a
// production. Construction does not normalize; call normalize() to obtain the
// canonical shape every operator and comparison works on:
//   - no Sequence or Choice with fewer than two members,
//   - no Sequence directly inside a Sequence, no Choice directly inside a
//     Choice,
//   - no Epsilon inside a Sequence,
//   - no empty Terminal (it becomes Epsilon),
//   - no Marked directly inside a Marked.
// Repetition and option wrappers are never simplified here; collapsing
// (x*)* and friends is a language-level decision left to massage.

#ifndef GFORGE_GRAMMAR_HPP_
#define GFORGE_GRAMMAR_HPP_

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gforge {

enum class ExprKind {
  kEpsilon,
  kAny,
  kTerminal,
  kNonterminal,
  kSequence,
  kChoice,
  kOptional,
  kStar,
  kPlus,
  kMarked,
};

class Expr {
 public:
  static Expr epsilon();
  static Expr any();
  static Expr terminal(std::string text);
  static Expr nonterminal(std::string name);
  static Expr sequence(std::vector<Expr> parts);
  static Expr choice(std::vector<Expr> alternatives);
  static Expr optional(Expr inner);
  static Expr star(Expr inner);
  static Expr plus(Expr inner);
  static Expr marked(Expr inner);

  ExprKind kind() const { return kind_; }
  bool is(ExprKind kind) const { return kind_ == kind; }
  bool is_unary() const {
    return kind_ == ExprKind::kOptional || kind_ == ExprKind::kStar ||
           kind_ == ExprKind::kPlus || kind_ == ExprKind::kMarked;
  }
  bool is_nary() const {
    return kind_ == ExprKind::kSequence || kind_ == ExprKind::kChoice;
  }

  // Terminal text or nonterminal name; empty for every other kind.
  const std::string& text() const { return text_; }
  // Members of a Sequence/Choice, or the single operand of a unary node.
  std::span<const Expr> children() const { return children_; }
  const Expr& inner() const { return children_.front(); }

  // Same kind, same payload, new children.
  Expr with_children(std::vector<Expr> children) const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator<(const Expr& a, const Expr& b);

 private:
  Expr(ExprKind kind, std::string text, std::vector<Expr> children)
      : kind_(kind), text_(std::move(text)), children_(std::move(children)) {}

  ExprKind kind_;
  std::string text_;
  std::vector<Expr> children_;
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

struct Production {
  std::string lhs;
  Expr rhs;

  friend bool operator==(const Production& a, const Production& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct Grammar {
  std::vector<Production> productions;
  std::set<std::string> starts;

  bool defines(std::string_view name) const;
  // Indices into productions whose lhs is name, in order.
  std::vector<std::size_t> productions_of(std::string_view name) const;
  // Defined names in first-definition order.
  std::vector<std::string> defined_names() const;
};

Expr normalize(const Expr& e);
// Normalizes every right-hand side and drops repeated (lhs, rhs) pairs,
// keeping the first occurrence.
Grammar normalize(const Grammar& g);

// Pairwise structural equality of the normalized production lists plus equal
// start sets. Production order matters.
bool equal(const Grammar& a, const Grammar& b);

// --- traversal helpers -----------------------------------------------------

// Bottom-up rebuild: children are mapped first, then fn sees the node with
// already-mapped children.
Expr transform(const Expr& e, const std::function<Expr(const Expr&)>& fn);

// Pre-order visit of every node.
void visit(const Expr& e, const std::function<void(const Expr&)>& fn);

void collect_nonterminals(const Expr& e, std::set<std::string>& out);
void collect_terminals(const Expr& e, std::set<std::string>& out);
bool mentions(const Expr& e, std::string_view name);
bool contains_terminal(const Expr& e, std::string_view text);
bool contains(const Expr& haystack, const Expr& needle);

// Names that occur anywhere in g: lhs, rhs, or starts.
std::set<std::string> all_names(const Grammar& g);
bool occurs(const Grammar& g, std::string_view name);

Expr rename_nonterminal(const Expr& e, std::string_view from,
                        std::string_view to);

}  // namespace gforge

#endif  // GFORGE_GRAMMAR_HPP_
