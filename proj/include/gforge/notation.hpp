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

// EBNF dialect definitions (EDD).
//
// Config format, one entry per line:
//   # comment
//   defining = "::="
//   newline-terminates = true
// Literals use the pp-notation escapes.

#ifndef GFORGE_NOTATION_HPP_
#define GFORGE_NOTATION_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gforge {

enum class Role {
  kStartGrammar,
  kEndGrammar,
  kStartComment,
  kEndComment,
  kDefining,
  kDefinitionSeparator,
  kTerminator,
  kConcatenate,
  kStartNonterminal,
  kEndNonterminal,
  kStartTerminal,
  kEndTerminal,
  kStartOption,
  kEndOption,
  kStartGroup,
  kEndGroup,
  kStartStar,
  kEndStar,
  kStartPlus,
  kEndPlus,
  kStartSpecial,
  kEndSpecial,
  kException,
  kPostfixStar,
  kPostfixPlus,
  kPostfixOption,
};

inline constexpr int kRoleCount = 26;

std::string_view role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);
const std::array<Role, kRoleCount>& all_roles();

struct NotationFlags {
  bool ignore_extra_spaces = false;
  bool ignore_extra_newlines = false;
  bool newline_terminates = false;
};

struct NotationSpec {
  std::map<Role, std::string> metasymbols;
  NotationFlags flags;

  bool has(Role role) const { return metasymbols.count(role) != 0; }
  // Empty string when the role is absent.
  const std::string& get(Role role) const;

  friend bool operator==(const NotationSpec& a, const NotationSpec& b) {
    return a.metasymbols == b.metasymbols &&
           a.flags.ignore_extra_spaces == b.flags.ignore_extra_spaces &&
           a.flags.ignore_extra_newlines == b.flags.ignore_extra_newlines &&
           a.flags.newline_terminates == b.flags.newline_terminates;
  }
};

// Throws Error with kind MissingDefiningSymbol, MissingTerminator,
// DuplicateRole, UnknownRoleName or BadNotationLine; messages start with
// "line N".
NotationSpec parse_notation(std::string_view config_text);
std::string print_notation(const NotationSpec& spec);

// Ambiguities that make printing or re-reading lossy.
std::vector<std::string> validate_roundtrip(const NotationSpec& spec);

}  // namespace gforge

#endif  // GFORGE_NOTATION_HPP_
