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

// Dialect-driven grammar extraction with defect recovery.

#ifndef GFORGE_EXTRACTOR_HPP_
#define GFORGE_EXTRACTOR_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gforge/grammar.hpp"
#include "gforge/notation.hpp"

namespace gforge {

enum class DefectKind {
  kUnbalancedNonterminal,
  kStrayTokenAsTerminal,
  kAmbiguousRepetition,
  kExcessiveBrackets,
  kWrongDefiningSymbol,
  kMissingTerminator,
  kLeadingBar,
  kUnbalancedBracket,
  kOrphanText,
};

std::string_view defect_kind_name(DefectKind kind);

struct Defect {
  DefectKind kind;
  int line = 0;
  int col = 0;
  std::string message;
  std::string resolution;
};

// "LINE:COL KIND message | resolution"
std::string format_defect(const Defect& d);

struct ExtractionReport {
  Grammar grammar;
  std::vector<Defect> defects;
};

// A literal found in the source and the pp-notation expression standing for
// it, e.g. "(?=EOF)" -> EPSILON.
struct Rewrite {
  std::string literal;
  Expr replacement;
};

// Rewrite table file: one `"literal" -> expression` per line, '#' comments.
std::vector<Rewrite> parse_rewrites(std::string_view text);

struct ExtractOptions {
  // Accept "=", ":=" and "::=" as defining symbols, logging a defect when
  // the variant differs from the dialect's own.
  bool tolerate_defining_variants = false;
  std::vector<Rewrite> rewrites;
};

struct Fragment {
  std::string text;
  int line = 1;  // document line of text[0]
  int col = 1;
};

// Text between grammar delimiters. The start delimiter matches with or
// without quotes around attribute values. Without a start-grammar role the
// whole document is one fragment. Throws Error(kUnterminatedFragment).
std::vector<std::string> split_fragments(std::string_view document,
                                         const NotationSpec& spec);
std::vector<Fragment> locate_fragments(std::string_view document,
                                       const NotationSpec& spec);

// Throws Error(kFatalSyntax) when not a single production can be recovered.
ExtractionReport extract(std::string_view fragment, const NotationSpec& spec,
                         const ExtractOptions& options = {});

// Splits and extracts every fragment, merging the results; defect positions
// are document positions.
ExtractionReport extract_document(std::string_view document,
                                  const NotationSpec& spec,
                                  const ExtractOptions& options = {});

// Concatenates production lists, drops repeated (lhs, rhs) pairs keeping the
// first, unions starts.
Grammar merge(const std::vector<Grammar>& parts);

// Prints a grammar in the given dialect, wrapped in the grammar delimiters
// when the dialect has them. Plus without plus roles is lowered to x {x},
// option without option roles to (x | ""). Throws Error(kUnprintable) when a
// construct has no rendering, including ANY without special roles, marks,
// and names or terminals that would not re-read as themselves.
std::string pretty_print(const Grammar& g, const NotationSpec& spec);

}  // namespace gforge

#endif  // GFORGE_EXTRACTOR_HPP_
