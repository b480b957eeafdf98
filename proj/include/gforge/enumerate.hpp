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

// Brute-force language enumeration, used as a test oracle.
//
// Length is measured in terminal tokens: a derivation producing the
// terminals "ab" "c" has length 2 and contributes the string "abc". ANY
// stands for one character drawn from a probe alphabet. Marked regions are
// enumerated as their contents.

#ifndef GFORGE_ENUMERATE_HPP_
#define GFORGE_ENUMERATE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/grammar.hpp"

namespace gforge {

struct EnumerationOptions {
  std::size_t max_len_cap = 12;
  std::size_t max_strings = 200000;
  std::vector<std::string> any_alphabet = {"a"};
};

// Throws Error(kUndefinedNonterminal) when a name reachable from start has no
// production, Error(kEnumerationLimit) when max_len or the string cap is
// exceeded.
std::set<std::string> enumerate_language(
    const Grammar& g, std::string_view start, std::size_t max_len,
    const EnumerationOptions& options = {});

// Enumerates a bare expression; nonterminals resolve against g.
std::set<std::string> enumerate_expr(const Grammar& g, const Expr& e,
                                     std::size_t max_len,
                                     const EnumerationOptions& options = {});

}  // namespace gforge

#endif  // GFORGE_ENUMERATE_HPP_
