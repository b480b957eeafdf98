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

#include "gforge/analysis.hpp"

#include <cstdio>
#include <deque>
#include <set>

#include "gforge/error.hpp"

namespace gforge {

Metrics metrics(const Grammar& g) {
  Metrics m;
  std::set<std::string> terminals, defined, used, used_elsewhere;
  for (const auto& p : g.productions) {
    defined.insert(p.lhs);
    collect_terminals(p.rhs, terminals);
    std::set<std::string> names;
    collect_nonterminals(p.rhs, names);
    for (const auto& n : names) {
      used.insert(n);
      if (n != p.lhs) used_elsewhere.insert(n);
    }
    m.prod += p.rhs.is(ExprKind::kChoice) ? p.rhs.children().size() : 1;
  }
  terminals.erase("");
  m.term = terminals.size();
  m.var = defined.size();
  for (const auto& n : used) {
    if (!defined.count(n)) m.bottoms.push_back(n);
  }
  for (const auto& n : defined) {
    if (!used_elsewhere.count(n)) m.tops.push_back(n);
  }
  return m;
}

Grammar subgrammar(const Grammar& g, const std::string& root) {
  if (!g.defines(root)) {
    throw Error(ErrorKind::kRootUndefined, "root " + root + " is not defined");
  }
  std::set<std::string> reached{root};
  std::deque<std::string> work{root};
  while (!work.empty()) {
    std::string n = work.front();
    work.pop_front();
    for (const auto& p : g.productions) {
      if (p.lhs != n) continue;
      std::set<std::string> names;
      collect_nonterminals(p.rhs, names);
      for (const auto& m : names) {
        if (reached.insert(m).second) work.push_back(m);
      }
    }
  }
  Grammar out;
  for (const auto& p : g.productions) {
    if (reached.count(p.lhs)) out.productions.push_back(p);
  }
  out.starts = {root};
  return out;
}

std::string format_metrics_header() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-36s %5s %5s %5s %6s %5s\n", "Stage", "TERM", "VAR",
                "PROD", "Bottom", "Top");
  return buf;
}

std::string format_metrics_row(const std::string& label, const Metrics& m) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-36s %5zu %5zu %5zu %6zu %5zu\n", label.c_str(), m.term,
                m.var, m.prod, m.bottoms.size(), m.tops.size());
  return buf;
}

std::string format_name_lists(const Metrics& m) {
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += " " + n;
    return out;
  };
  return "bottoms:" + join(m.bottoms) + "\ntops:" + join(m.tops) + "\n";
}

}  // namespace gforge
