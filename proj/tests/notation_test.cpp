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

#include <gtest/gtest.h>

#include <algorithm>

#include "gforge/error.hpp"
#include "test_util.hpp"

namespace gforge {
namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_notation(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::kParse;
}

TEST(NotationTest, MediawikiConfig) {
  NotationSpec spec = parse_notation(testing::read_data("dialects/mediawiki.edd"));
  EXPECT_EQ(spec.metasymbols.size(), 18u);
  EXPECT_EQ(spec.get(Role::kDefining), "::=");
  EXPECT_EQ(spec.get(Role::kEndPlus), "}+");
  EXPECT_EQ(spec.get(Role::kStartGrammar), "<source lang=bnf>");
  EXPECT_TRUE(spec.flags.newline_terminates);
  EXPECT_FALSE(spec.has(Role::kTerminator));
}

TEST(NotationTest, MinimalSpec) {
  NotationSpec spec = parse_notation("defining = \":\"\nterminator = \";\"\n");
  EXPECT_EQ(spec.metasymbols.size(), 2u);
  EXPECT_FALSE(spec.flags.ignore_extra_spaces);
}

TEST(NotationTest, Errors) {
  EXPECT_EQ(kind_of("defining = \":\"\ndefining = \"=\"\nterminator = \";\"\n"),
            ErrorKind::kDuplicateRole);
  EXPECT_EQ(kind_of("defining = \":\"\nterminator = \";\"\nstar = \"*\"\n"),
            ErrorKind::kUnknownRoleName);
  EXPECT_EQ(kind_of("terminator = \";\"\n"), ErrorKind::kMissingDefiningSymbol);
  EXPECT_EQ(kind_of("defining = \":\"\n"), ErrorKind::kMissingTerminator);
  EXPECT_EQ(kind_of("defining = :\nterminator = \";\"\n"),
            ErrorKind::kBadNotationLine);
  EXPECT_EQ(kind_of("defining = \"\"\nterminator = \";\"\n"),
            ErrorKind::kBadNotationLine);
}

TEST(NotationTest, ErrorMessageNamesLine) {
  try {
    parse_notation("# c\ndefining = \":\"\nbogus = \"x\"\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(NotationTest, PrintParseIdentityOnBundledDialects) {
  for (const char* name : {"mediawiki", "metawiki", "tables", "noparse", "wsn",
                           "iso-ebnf"}) {
    NotationSpec spec =
        parse_notation(testing::read_data(std::string("dialects/") + name + ".edd"));
    EXPECT_EQ(parse_notation(print_notation(spec)), spec) << name;
  }
}

TEST(NotationTest, EscapedLiterals) {
  NotationSpec spec = parse_notation(
      "defining = \"\\\\=\"\nterminator = \"\\n\"\nstart-terminal = \"\\\"\"\n");
  EXPECT_EQ(spec.get(Role::kDefining), "\\=");
  EXPECT_EQ(spec.get(Role::kTerminator), "\n");
  EXPECT_EQ(parse_notation(print_notation(spec)), spec);
}

TEST(NotationTest, RoundtripWarnings) {
  NotationSpec mw = parse_notation(testing::read_data("dialects/mediawiki.edd"));
  std::vector<std::string> w = validate_roundtrip(mw);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], "start-star and start-plus share literal '{'");

  NotationSpec iso = parse_notation(testing::read_data("dialects/iso-ebnf.edd"));
  EXPECT_TRUE(validate_roundtrip(iso).empty());

  NotationSpec clash = parse_notation(
      "defining = \">\"\nterminator = \";\"\nstart-nonterminal = \"<\"\n"
      "end-nonterminal = \">\"\n");
  w = validate_roundtrip(clash);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], "defining and end-nonterminal share literal '>'");

  NotationSpec half = parse_notation(
      "defining = \"=\"\nterminator = \";\"\nstart-option = \"[\"\n");
  w = validate_roundtrip(half);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], "start-option without end-option");
}

}  // namespace
}  // namespace gforge
