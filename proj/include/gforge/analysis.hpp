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

// Grammar metrics and reachability.

#ifndef GFORGE_ANALYSIS_HPP_
#define GFORGE_ANALYSIS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gforge/grammar.hpp"

namespace gforge {

struct Metrics {
  std::size_t term = 0;  // distinct terminal texts
  std::size_t var = 0;   // distinct defined nonterminals
  std::size_t prod = 0;  // productions, a top-level choice counting per alternative
  std::vector<std::string> bottoms;  // used, never defined
  std::vector<std::string> tops;     // defined, never used outside own productions

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics metrics(const Grammar& g);

// Productions of every nonterminal reachable from root, in original order.
// Throws Error(kRootUndefined).
Grammar subgrammar(const Grammar& g, const std::string& root);

// Aligned rows: a header, then "label TERM VAR PROD Bottom Top".
std::string format_metrics_header();
std::string format_metrics_row(const std::string& label, const Metrics& m);
// Name lists, one "bottoms: ..." and one "tops: ..." line.
std::string format_name_lists(const Metrics& m);

}  // namespace gforge

#endif  // GFORGE_ANALYSIS_HPP_
