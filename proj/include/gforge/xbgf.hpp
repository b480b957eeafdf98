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

// Grammar transformation operators and the script runner.
//
// Every operator takes a grammar by const reference and returns a new one,
// so a failing precondition (reported as Error) never alters the input.
// Expression arguments match whole normalized subexpressions, contiguous
// slices of sequences and runs of adjacent choice alternatives.

#ifndef GFORGE_XBGF_HPP_
#define GFORGE_XBGF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/analysis.hpp"
#include "gforge/error.hpp"
#include "gforge/grammar.hpp"

namespace gforge {

namespace xbgf {

using Scope = std::optional<std::string>;

Grammar rename_n(const Grammar& g, const std::string& from, const std::string& to);
Grammar rename_t(const Grammar& g, const std::string& from, const std::string& to);
Grammar unite(const Grammar& g, const std::string& donor, const std::string& receiver);
Grammar define(const Grammar& g, const std::vector<Production>& ps);
Grammar redefine(const Grammar& g, const std::vector<Production>& ps);
Grammar eliminate(const Grammar& g, const std::string& n);
Grammar inline_nonterminal(const Grammar& g, const std::string& n);
Grammar fold(const Grammar& g, const std::string& n, const Scope& scope = {});
Grammar unfold(const Grammar& g, const std::string& n, const Scope& scope = {});
Grammar massage(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope = {});
Grammar deyaccify(const Grammar& g, const std::string& n);
Grammar vertical(const Grammar& g, const std::string& n);
Grammar horizontal(const Grammar& g, const std::string& n);
Grammar distribute(const Grammar& g, const std::string& n);
Grammar add_v(const Grammar& g, const Production& p);
Grammar remove_v(const Grammar& g, const Production& p);
Grammar replace(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope = {});
Grammar widen(const Grammar& g, const Expr& from, const Expr& to, const Scope& scope = {});
Grammar project(const Grammar& g, const Production& p);
Grammar abstractize(const Grammar& g, const Production& p);

// The closed law tables behind massage and widen.
bool massage_equivalent(const Expr& a, const Expr& b);
bool widens(const Expr& narrow, const Expr& wide);

}  // namespace xbgf

struct Step {
  std::string op;
  std::vector<std::string> names;
  std::vector<std::string> texts;  // terminal arguments of renameT
  std::vector<Expr> exprs;
  std::vector<Production> productions;
  std::optional<std::string> scope;
  int line = 0;
};

struct TransformScript {
  std::vector<Step> steps;
};

// Statements `op(args);`, `//` comments. Throws Error(kScriptParse).
TransformScript parse_script(std::string_view text);

// One-line rendering of a step, e.g. "fold(characters in html-comment)".
std::string describe(const Step& step);

// Throws the operator's Error.
Grammar apply_step(const Grammar& g, const Step& step);

class StepError : public Error {
 public:
  StepError(std::size_t index, const Step& step, const Error& cause);

  std::size_t index() const { return index_; }  // 1-based
  const std::string& op() const { return op_; }

 private:
  std::size_t index_;
  std::string op_;
};

struct StepLog {
  std::size_t index = 0;  // 1-based
  std::string step;
  Metrics before;
  Metrics after;
};

struct RunResult {
  Grammar grammar;  // after the last successful step
  std::vector<StepLog> log;
  std::optional<StepError> error;
};

RunResult run_script(const TransformScript& script, const Grammar& g);

// "  3 fold(space)  PROD 681 -> 681  Bottom 37 -> 36 ..." per step.
std::string format_step_log(const std::vector<StepLog>& log);

}  // namespace gforge

#endif  // GFORGE_XBGF_HPP_
