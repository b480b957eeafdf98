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

#include "gforge/enumerate.hpp"

#include <map>

#include "gforge/error.hpp"

namespace gforge {
namespace {

// String -> fewest tokens over all derivations found so far.
using Lang = std::map<std::string, std::size_t>;

class Enumerator {
 public:
  Enumerator(const Grammar& g, std::size_t max_len,
             const EnumerationOptions& options)
      : g_(g), max_len_(max_len), options_(options) {
    if (max_len > options.max_len_cap) {
      throw Error(ErrorKind::kEnumerationLimit,
                  "max_len " + std::to_string(max_len) + " exceeds cap " +
                      std::to_string(options.max_len_cap));
    }
  }

  // Computes the least fixpoint for every nonterminal reachable from e.
  Lang run(const Expr& e) {
    std::set<std::string> reachable;
    std::vector<std::string> todo;
    std::set<std::string> seeds;
    collect_nonterminals(e, seeds);
    todo.assign(seeds.begin(), seeds.end());
    while (!todo.empty()) {
      std::string n = todo.back();
      todo.pop_back();
      if (!reachable.insert(n).second) continue;
      auto indices = g_.productions_of(n);
      if (indices.empty()) {
        throw Error(ErrorKind::kUndefinedNonterminal, "'" + n + "'");
      }
      for (std::size_t i : indices) {
        std::set<std::string> used;
        collect_nonterminals(g_.productions[i].rhs, used);
        for (const auto& u : used) {
          if (reachable.count(u) == 0) todo.push_back(u);
        }
      }
    }
    for (const auto& n : reachable) env_[n];
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& n : reachable) {
        Lang next;
        for (std::size_t i : g_.productions_of(n)) {
          merge(next, eval(g_.productions[i].rhs));
        }
        if (next != env_[n]) {
          env_[n] = std::move(next);
          changed = true;
        }
      }
    }
    return eval(e);
  }

 private:
  void check_size(const Lang& l) const {
    if (l.size() > options_.max_strings) {
      throw Error(ErrorKind::kEnumerationLimit,
                  "more than " + std::to_string(options_.max_strings) +
                      " strings");
    }
  }

  static void add(Lang& l, const std::string& s, std::size_t len) {
    auto [it, inserted] = l.emplace(s, len);
    if (!inserted && len < it->second) it->second = len;
  }

  void merge(Lang& into, const Lang& from) const {
    for (const auto& [s, len] : from) add(into, s, len);
    check_size(into);
  }

  Lang concat(const Lang& a, const Lang& b) const {
    Lang out;
    for (const auto& [sa, la] : a) {
      for (const auto& [sb, lb] : b) {
        if (la + lb <= max_len_) add(out, sa + sb, la + lb);
      }
    }
    check_size(out);
    return out;
  }

  Lang closure(const Lang& inner) const {
    Lang out{{"", 0}};
    while (true) {
      Lang grown = out;
      merge(grown, concat(out, inner));
      if (grown == out) return out;
      out = std::move(grown);
    }
  }

  Lang eval(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::kEpsilon:
        return {{"", 0}};
      case ExprKind::kTerminal:
        if (e.text().empty()) return {{"", 0}};
        if (max_len_ == 0) return {};
        return {{e.text(), 1}};
      case ExprKind::kAny: {
        Lang out;
        if (max_len_ == 0) return out;
        for (const auto& c : options_.any_alphabet) add(out, c, 1);
        return out;
      }
      case ExprKind::kNonterminal: {
        auto it = env_.find(e.text());
        if (it == env_.end()) {
          throw Error(ErrorKind::kUndefinedNonterminal, "'" + e.text() + "'");
        }
        return it->second;
      }
      case ExprKind::kSequence: {
        Lang out{{"", 0}};
        for (const auto& c : e.children()) out = concat(out, eval(c));
        return out;
      }
      case ExprKind::kChoice: {
        Lang out;
        for (const auto& c : e.children()) merge(out, eval(c));
        return out;
      }
      case ExprKind::kOptional: {
        Lang out = eval(e.inner());
        add(out, "", 0);
        return out;
      }
      case ExprKind::kStar:
        return closure(eval(e.inner()));
      case ExprKind::kPlus: {
        Lang inner = eval(e.inner());
        return concat(inner, closure(inner));
      }
      case ExprKind::kMarked:
        return eval(e.inner());
    }
    return {};
  }

  const Grammar& g_;
  std::size_t max_len_;
  const EnumerationOptions& options_;
  std::map<std::string, Lang> env_;
};

std::set<std::string> keys(const Lang& l) {
  std::set<std::string> out;
  for (const auto& [s, len] : l) out.insert(s);
  return out;
}

}  // namespace

std::set<std::string> enumerate_language(const Grammar& g,
                                         std::string_view start,
                                         std::size_t max_len,
                                         const EnumerationOptions& options) {
  if (!g.defines(start)) {
    throw Error(ErrorKind::kUndefinedNonterminal,
                "start '" + std::string(start) + "'");
  }
  Enumerator en(g, max_len, options);
  return keys(en.run(Expr::nonterminal(std::string(start))));
}

std::set<std::string> enumerate_expr(const Grammar& g, const Expr& e,
                                     std::size_t max_len,
                                     const EnumerationOptions& options) {
  Enumerator en(g, max_len, options);
  return keys(en.run(e));
}

}  // namespace gforge
