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

// pp-notation: the canonical text form of grammars.
//
//   %start wiki-page
//   name: "term" other-name? (a | b)* <marked> EPSILON ANY
//
// One production per line; a body may continue on following lines as long
// as they are indented. Lines starting with "//" are comments. Terminals use
// the escapes \" \\ \n \r \t.

#ifndef GFORGE_PP_HPP_
#define GFORGE_PP_HPP_

#include <string>
#include <string_view>

#include "gforge/grammar.hpp"

namespace gforge {

// Throws Error(kParse).
Expr parse_expr(std::string_view text);
Grammar parse_grammar(std::string_view text);

// Throws Error(kUnprintableName) for names the lexer cannot read back.
std::string print_expr(const Expr& e);
std::string print_production(const Production& p);
// Normalizes first; output ends with a newline when non-empty.
std::string print_grammar(const Grammar& g);

std::string quote_terminal(std::string_view text);
bool is_printable_name(std::string_view name);

}  // namespace gforge

#endif  // GFORGE_PP_HPP_
