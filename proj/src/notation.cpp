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

#include "gforge/notation.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "gforge/error.hpp"
#include "gforge/pp.hpp"

namespace gforge {
namespace {

constexpr std::array<std::pair<Role, std::string_view>, kRoleCount> kRoleNames{{
    {Role::kStartGrammar, "start-grammar"},
    {Role::kEndGrammar, "end-grammar"},
    {Role::kStartComment, "start-comment"},
    {Role::kEndComment, "end-comment"},
    {Role::kDefining, "defining"},
    {Role::kDefinitionSeparator, "definition-separator"},
    {Role::kTerminator, "terminator"},
    {Role::kConcatenate, "concatenate"},
    {Role::kStartNonterminal, "start-nonterminal"},
    {Role::kEndNonterminal, "end-nonterminal"},
    {Role::kStartTerminal, "start-terminal"},
    {Role::kEndTerminal, "end-terminal"},
    {Role::kStartOption, "start-option"},
    {Role::kEndOption, "end-option"},
    {Role::kStartGroup, "start-group"},
    {Role::kEndGroup, "end-group"},
    {Role::kStartStar, "start-star"},
    {Role::kEndStar, "end-star"},
    {Role::kStartPlus, "start-plus"},
    {Role::kEndPlus, "end-plus"},
    {Role::kStartSpecial, "start-special"},
    {Role::kEndSpecial, "end-special"},
    {Role::kException, "exception"},
    {Role::kPostfixStar, "postfix-star"},
    {Role::kPostfixPlus, "postfix-plus"},
    {Role::kPostfixOption, "postfix-option"},
}};

constexpr std::array<std::string_view, 3> kFlagNames{
    "ignore-extra-spaces", "ignore-extra-newlines", "newline-terminates"};

[[noreturn]] void fail(ErrorKind kind, int line, const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string parse_literal(const std::string& value, int line) {
  if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
    fail(ErrorKind::kBadNotationLine, line, "expected a quoted literal");
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < value.size(); ++i) {
    char c = value[i];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (i + 2 >= value.size()) {
      fail(ErrorKind::kBadNotationLine, line, "dangling escape");
    }
    char e = value[++i];
    switch (e) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      default:
        fail(ErrorKind::kBadNotationLine, line,
             std::string("unknown escape \\") + e);
    }
  }
  if (out.empty()) fail(ErrorKind::kBadNotationLine, line, "empty literal");
  return out;
}

bool symmetric_pair(Role a, Role b) {
  auto is = [&](Role x, Role y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  return is(Role::kStartTerminal, Role::kEndTerminal) ||
         is(Role::kStartSpecial, Role::kEndSpecial);
}

}  // namespace

std::string_view role_name(Role role) {
  return kRoleNames[static_cast<int>(role)].second;
}

std::optional<Role> role_from_name(std::string_view name) {
  for (const auto& [role, text] : kRoleNames) {
    if (text == name) return role;
  }
  return std::nullopt;
}

const std::array<Role, kRoleCount>& all_roles() {
  static const std::array<Role, kRoleCount> roles = [] {
    std::array<Role, kRoleCount> out{};
    for (int i = 0; i < kRoleCount; ++i) out[i] = kRoleNames[i].first;
    return out;
  }();
  return roles;
}

const std::string& NotationSpec::get(Role role) const {
  static const std::string empty;
  auto it = metasymbols.find(role);
  return it == metasymbols.end() ? empty : it->second;
}

NotationSpec parse_notation(std::string_view config_text) {
  NotationSpec spec;
  std::set<std::string> seen_flags;
  std::istringstream in{std::string(config_text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::kBadNotationLine, line, "expected 'key = value'");
    }
    std::string key = trim(std::string_view(text).substr(0, eq));
    std::string value = trim(std::string_view(text).substr(eq + 1));

    bool is_flag = false;
    for (std::size_t i = 0; i < kFlagNames.size(); ++i) {
      if (key != kFlagNames[i]) continue;
      is_flag = true;
      if (!seen_flags.insert(key).second) {
        fail(ErrorKind::kDuplicateRole, line, "'" + key + "' given twice");
      }
      bool on;
      if (value == "true") {
        on = true;
      } else if (value == "false") {
        on = false;
      } else {
        fail(ErrorKind::kBadNotationLine, line, "flag expects true or false");
      }
      if (i == 0) spec.flags.ignore_extra_spaces = on;
      if (i == 1) spec.flags.ignore_extra_newlines = on;
      if (i == 2) spec.flags.newline_terminates = on;
    }
    if (is_flag) continue;

    std::optional<Role> role = role_from_name(key);
    if (!role) fail(ErrorKind::kUnknownRoleName, line, "unknown role '" + key + "'");
    if (spec.has(*role)) {
      fail(ErrorKind::kDuplicateRole, line, "'" + key + "' given twice");
    }
    spec.metasymbols[*role] = parse_literal(value, line);
  }
  if (!spec.has(Role::kDefining)) {
    fail(ErrorKind::kMissingDefiningSymbol, line, "no 'defining' role");
  }
  if (!spec.has(Role::kTerminator) && !spec.flags.newline_terminates) {
    fail(ErrorKind::kMissingTerminator, line,
         "neither 'terminator' nor 'newline-terminates = true'");
  }
  return spec;
}

std::string print_notation(const NotationSpec& spec) {
  std::string out;
  for (Role role : all_roles()) {
    if (!spec.has(role)) continue;
    out += std::string(role_name(role)) + " = " + quote_terminal(spec.get(role)) + "\n";
  }
  auto flag = [&](std::string_view name, bool on) {
    if (on) out += std::string(name) + " = true\n";
  };
  flag(kFlagNames[0], spec.flags.ignore_extra_spaces);
  flag(kFlagNames[1], spec.flags.ignore_extra_newlines);
  flag(kFlagNames[2], spec.flags.newline_terminates);
  return out;
}

std::vector<std::string> validate_roundtrip(const NotationSpec& spec) {
  std::vector<std::string> warnings;
  std::vector<std::pair<Role, std::string>> entries(spec.metasymbols.begin(),
                                                    spec.metasymbols.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].second != entries[j].second) continue;
      if (symmetric_pair(entries[i].first, entries[j].first)) continue;
      warnings.push_back(std::string(role_name(entries[i].first)) + " and " +
                         std::string(role_name(entries[j].first)) +
                         " share literal '" + entries[i].second + "'");
    }
  }
  constexpr std::pair<Role, Role> kBrackets[] = {
      {Role::kStartGrammar, Role::kEndGrammar},
      {Role::kStartComment, Role::kEndComment},
      {Role::kStartNonterminal, Role::kEndNonterminal},
      {Role::kStartTerminal, Role::kEndTerminal},
      {Role::kStartOption, Role::kEndOption},
      {Role::kStartGroup, Role::kEndGroup},
      {Role::kStartStar, Role::kEndStar},
      {Role::kStartPlus, Role::kEndPlus},
      {Role::kStartSpecial, Role::kEndSpecial},
  };
  for (const auto& [open, close] : kBrackets) {
    if (spec.has(open) != spec.has(close)) {
      Role present = spec.has(open) ? open : close;
      Role missing = spec.has(open) ? close : open;
      warnings.push_back(std::string(role_name(present)) + " without " +
                         std::string(role_name(missing)));
    }
  }
  return warnings;
}

}  // namespace gforge
