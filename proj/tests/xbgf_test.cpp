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

#include "gforge/xbgf.hpp"

#include <gtest/gtest.h>

#include "gforge/enumerate.hpp"
#include "test_util.hpp"
#include "xbgf_cases.hpp"

namespace gforge {
namespace {

using testing::E;
using testing::identical;
using testing::G;

Production P(const std::string& lhs, const std::string& rhs) { return {lhs, E(rhs)}; }

Grammar run(const Grammar& g, const std::string& script) {
  RunResult r = run_script(parse_script(script), g);
  if (r.error) throw *r.error;
  return r.grammar;
}

TEST(RenameTest, Examples) {
  Grammar g = G("a: b b\nb: \"x\"\n");
  EXPECT_TRUE(equal(xbgf::rename_n(g, "b", "c"), G("a: c c\nc: \"x\"\n")));
  EXPECT_TRUE(equal(xbgf::rename_t(g, "x", "y"), G("a: b b\nb: \"y\"\n")));
}

TEST(RenameTest, TerminalRenameMapsLanguage) {
  Grammar g = G("s: (\"a\" | \"b\")* \"a\"\n");
  Grammar h = xbgf::rename_t(g, "a", "c");
  std::set<std::string> mapped;
  for (std::string w : enumerate_language(g, "s", 4)) {
    for (char& ch : w) {
      if (ch == 'a') ch = 'c';
    }
    mapped.insert(w);
  }
  EXPECT_EQ(enumerate_language(h, "s", 4), mapped);
}

TEST(UniteTest, DonorProductionsFollowReceivers) {
  Grammar g = G("a: WhiteSpaces Whitespaces\nWhiteSpaces: \" \"\nq: \"q\"\nWhitespaces: \"\\t\"\n");
  Grammar h = xbgf::unite(g, "WhiteSpaces", "Whitespaces");
  EXPECT_TRUE(identical(h, G("a: Whitespaces Whitespaces\nq: \"q\"\n"
                             "Whitespaces: \"\\t\"\nWhitespaces: \" \"\n")));
  Grammar bottoms = xbgf::unite(G("a: x y\n"), "x", "y");
  EXPECT_TRUE(identical(bottoms, G("a: y y\n")));
  Grammar in_place = xbgf::unite(G("a: x y\nx: \"1\"\n"), "x", "y");
  EXPECT_TRUE(identical(in_place, G("a: y y\ny: \"1\"\n")));
}

TEST(DefineTest, DefineAndRedefine) {
  Grammar g = G("html-comment: \"<!--\" characters \"-->\"\nrandom-character: \"x\" | \"y\"\n");
  Grammar h = xbgf::define(g, {P("characters", "character+")});
  EXPECT_TRUE(h.defines("characters"));
  h = xbgf::redefine(h, {P("random-character", "ANY")});
  EXPECT_EQ(h.productions[1].rhs, Expr::any());
}

TEST(EliminateTest, UnusedOnly) {
  Grammar g = G("a: b\nb: \"x\" b\nBlockHTML: \"<p>\"\n");
  Grammar h = xbgf::eliminate(g, "BlockHTML");
  EXPECT_EQ(h.productions.size(), 2u);
}

TEST(InlineTest, ReplacesUses) {
  Grammar g = G("a: x \"#\" x\nx: \"p\" | \"q\"\n");
  EXPECT_TRUE(equal(xbgf::inline_nonterminal(g, "x"),
                    G("a: (\"p\" | \"q\") \"#\" (\"p\" | \"q\")\n")));
}

TEST(FoldTest, UnfoldFoldIsIdentity) {
  Grammar g = G("html-comment: \"<!--\" characters? \"-->\"\ncharacters: character+\n");
  Grammar u = xbgf::unfold(g, "characters", "html-comment");
  EXPECT_EQ(u.productions[0].rhs, E("\"<!--\" character+? \"-->\""));
  EXPECT_TRUE(identical(xbgf::fold(u, "characters", "html-comment"), g));
}

TEST(FoldTest, GrammarWide) {
  Grammar g = G("a: \" \" b \" \"\nb: \" \"+\nspace: \" \"\n");
  EXPECT_TRUE(equal(xbgf::fold(g, "space"), G("a: space b space\nb: space+\nspace: \" \"\n")));
}

TEST(MassageTest, ListingLaws) {
  Grammar g = G("html-comment: \"<!--\" character+* \"-->\"\n");
  EXPECT_TRUE(equal(xbgf::massage(g, E("character+*"), E("character*")),
                    G("html-comment: \"<!--\" character* \"-->\"\n")));
  Grammar line = G("Line: PlainText PlainText* (\" \" \" \"* PlainText PlainText*)*\n");
  Grammar h = run(line,
                  "massage(PlainText PlainText*, PlainText+);\n"
                  "massage(\" \" \" \"*, \" \"+);\n");
  EXPECT_TRUE(equal(h, G("Line: PlainText+ (\" \"+ PlainText+)*\n")));
  Grammar q = G("a: (newline | EPSILON) b\n");
  EXPECT_TRUE(equal(xbgf::massage(q, E("(newline | EPSILON)"), E("newline?")),
                    G("a: newline? b\n")));
}

TEST(MassageTest, LawTable) {
  const char* laws[][2] = {
      {"x?", "(x | EPSILON)"}, {"x?", "(EPSILON | x)"}, {"x x*", "x+"}, {"x* x", "x+"},
      {"x**", "x*"},           {"x+*", "x*"},           {"x*+", "x*"}, {"x++", "x+"},
      {"x??", "x?"},           {"x*?", "x*"},           {"x?*", "x*"}, {"x+?", "x*"},
      {"x?+", "x*"},           {"(x+ | EPSILON)", "x*"},
  };
  for (const auto& law : laws) {
    EXPECT_TRUE(xbgf::massage_equivalent(E(law[0]), E(law[1]))) << law[0];
    EXPECT_TRUE(xbgf::massage_equivalent(E(law[1]), E(law[0]))) << law[1];
  }
  EXPECT_FALSE(xbgf::massage_equivalent(E("x"), E("x?")));
  EXPECT_FALSE(xbgf::massage_equivalent(E("x+"), E("x*")));
  EXPECT_FALSE(xbgf::massage_equivalent(E("x y"), E("y x")));
}

TEST(DeyaccifyTest, Shapes) {
  EXPECT_TRUE(equal(xbgf::deyaccify(G("d: \"-\"\nd: \"-\" d\n"), "d"), G("d: \"-\"+\n")));
  EXPECT_TRUE(equal(xbgf::deyaccify(G("d: \"-\"\nd: d \"-\"\n"), "d"), G("d: \"-\"+\n")));
  EXPECT_TRUE(equal(xbgf::deyaccify(G("d: x\nd: d y\n"), "d"), G("d: x y*\n")));
  EXPECT_TRUE(equal(xbgf::deyaccify(G("d: y d\nd: x\n"), "d"), G("d: y* x\n")));
}

TEST(DeyaccifyTest, SubPagesSequence) {
  Grammar g = G("canonical-sub-pages: canonical-sub-page canonical-sub-pages?\n");
  Grammar h = run(g,
                  "massage(canonical-sub-pages?, (canonical-sub-pages | EPSILON));\n"
                  "distribute( in canonical-sub-pages );\n"
                  "vertical( in canonical-sub-pages );\n"
                  "deyaccify(canonical-sub-pages);\n");
  EXPECT_TRUE(equal(h, G("canonical-sub-pages: canonical-sub-page+\n")));
}

TEST(VerticalTest, InversePair) {
  Grammar g = G("symbol: \"a\" | \"b\" b | \".\" \".\" \".\"\n");
  Grammar v = xbgf::vertical(g, "symbol");
  EXPECT_EQ(v.productions.size(), 3u);
  EXPECT_TRUE(identical(xbgf::horizontal(v, "symbol"), g));
  Grammar r = xbgf::remove_v(v, P("symbol", "\".\" \".\" \".\""));
  EXPECT_TRUE(equal(xbgf::horizontal(r, "symbol"), G("symbol: \"a\" | \"b\" b\n")));
}

TEST(DistributeTest, Examples) {
  EXPECT_TRUE(equal(xbgf::distribute(G("s: a (b | EPSILON)\n"), "s"), G("s: a b | a\n")));
  Grammar fixed = G("s: a b*\n");
  EXPECT_TRUE(identical(xbgf::distribute(fixed, "s"), fixed));
}

TEST(AddRemoveTest, Examples) {
  Grammar g = G("image-option: a\nimage-option: b\n");
  Grammar h = xbgf::add_v(g, P("image-option", "image-other-parameter"));
  EXPECT_EQ(h.productions.back().rhs, E("image-other-parameter"));
  EXPECT_TRUE(identical(xbgf::remove_v(h, P("image-option", "image-other-parameter")), g));
  Grammar horizontal = G("formatting: bold | apostrophe-jungle\n");
  EXPECT_TRUE(equal(xbgf::remove_v(horizontal, P("formatting", "apostrophe-jungle")),
                    G("formatting: bold\n")));
}

TEST(ReplaceTest, SliceAndAlternativeRun) {
  Grammar g = G("a: x \" \" \"+\" y\nb: ImageAlign | Center | Other\n");
  Grammar h = xbgf::replace(g, E("\" \" \"+\""), E("spaces"));
  EXPECT_EQ(h.productions[0].rhs, E("x spaces y"));
  h = xbgf::replace(h, E("(ImageAlign | Center)"), E("ImageAlignCenter"));
  EXPECT_EQ(h.productions[1].rhs, E("ImageAlignCenter | Other"));
  EXPECT_TRUE(identical(xbgf::replace(g, E("x"), E("x")), g));
}

TEST(WidenTest, TableAndScope) {
  Grammar g = G("isbn-number: \"97\" (\" \" | \"-\") d\nother: (\" \" | \"-\")\n");
  Grammar h = xbgf::widen(g, E("(\" \" | \"-\")"), E("(\" \" | \"-\")?"), "isbn-number");
  EXPECT_EQ(h.productions[0].rhs, E("\"97\" (\" \" | \"-\")? d"));
  EXPECT_EQ(h.productions[1].rhs, g.productions[1].rhs);
  EXPECT_TRUE(xbgf::widens(E("x"), E("x*")));
  EXPECT_TRUE(xbgf::widens(E("x+"), E("x*")));
  EXPECT_TRUE(xbgf::widens(E("x?"), E("x*")));
  EXPECT_TRUE(xbgf::widens(E("x"), E("x+")));
  EXPECT_TRUE(xbgf::widens(E("a x b"), E("a x? b")));
  EXPECT_FALSE(xbgf::widens(E("x?"), E("x")));
  EXPECT_FALSE(xbgf::widens(E("x"), E("(x | y)")));
}

TEST(ProjectTest, Examples) {
  Grammar g = G("behaviourswitch-toc: \"__TOC__\" i\n"
                "isbn: \"ISBN\" \" \" \"+\" isbn-number \"?\" non-word-character \"/\" \"\\\\\" b \"/\"\n");
  Grammar h = xbgf::project(g, P("behaviourswitch-toc", "\"__TOC__\" <i>"));
  EXPECT_EQ(h.productions[0].rhs, E("\"__TOC__\""));
  h = xbgf::project(h, P("isbn", "\"ISBN\" \" \" \"+\" isbn-number <(\"?\" non-word-character "
                                 "\"/\" \"\\\\\" b \"/\")>"));
  EXPECT_EQ(h.productions[1].rhs, E("\"ISBN\" \" \" \"+\" isbn-number"));
}

TEST(AbstractizeTest, Examples) {
  Grammar g = G("PageName: TitleCharacter \",\" (\" \"? TitleCharacter)*\n");
  Grammar h = xbgf::abstractize(g, P("PageName", "TitleCharacter <\",\"> (\" \"? TitleCharacter)*"));
  EXPECT_EQ(h.productions[0].rhs, E("TitleCharacter (\" \"? TitleCharacter)*"));
}

TEST(ScriptTest, ParsesProductionArguments) {
  TransformScript s = parse_script(
      "// connect\n"
      "define(\n"
      " ALLOWED:\n"
      "        \"http://\"\n"
      "        \"ftp://\"\n"
      ");\n"
      "abstractize(\n"
      " isbn-number:\n"
      "        \"97\" <\"??\"> DIGIT\n"
      "                (DIGIT | \"X\")\n"
      ");\n"
      "massage(\n dashes?,\n (dashes | EPSILON)\n in dashes);\n"
      "vertical( in special-block );\n"
      "renameT(\"&lt;pre\", \"<<pre\");\n");
  ASSERT_EQ(s.steps.size(), 5u);
  EXPECT_EQ(s.steps[0].productions.size(), 1u);
  EXPECT_EQ(s.steps[0].productions[0].rhs, E("\"http://\" | \"ftp://\""));
  EXPECT_EQ(s.steps[1].productions[0].rhs, E("\"97\" <\"??\"> DIGIT (DIGIT | \"X\")"));
  EXPECT_EQ(s.steps[2].scope, "dashes");
  EXPECT_EQ(describe(s.steps[2]), "massage(dashes?, (dashes | EPSILON) in dashes)");
  EXPECT_EQ(describe(s.steps[3]), "vertical(in special-block)");
  EXPECT_EQ(s.steps[4].texts[1], "<<pre");
}

TEST(ScriptTest, ParseErrors) {
  for (const char* bad : {"frobnicate(x);", "fold(x)", "vertical(x);", "renameN(a b);",
                          "removeV(a: b c: d);"}) {
    try {
      parse_script(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kScriptParse) << bad;
    }
  }
}

TEST(ScriptTest, EmptyScriptIsIdentity) {
  Grammar g = G("a: b\n");
  RunResult r = run_script(parse_script("// nothing\n"), g);
  EXPECT_FALSE(r.error);
  EXPECT_TRUE(identical(r.grammar, g));
}

TEST(ScriptTest, HaltsAtFailingStep) {
  Grammar g = G("a: b c\n");
  RunResult r = run_script(parse_script("renameN(b, d);\nrenameN(c, d);\nrenameN(a, z);\n"), g);
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.error->index(), 2u);
  EXPECT_EQ(r.error->kind(), ErrorKind::kTargetNotFresh);
  EXPECT_EQ(r.error->op(), "renameN");
  EXPECT_TRUE(identical(r.grammar, G("a: d c\n")));
  EXPECT_EQ(r.log.size(), 1u);
}

// One precondition-violating call per operator; the input must be unchanged.
TEST(AtomicityTest, EveryOperator) {
  const Grammar copy = cases::atomicity_grammar();
  std::vector<cases::Case> all = cases::atomicity_cases();
  ASSERT_EQ(all.size(), 20u);
  for (const auto& c : all) {
    try {
      c.call();
      ADD_FAILURE() << c.op << " did not fail";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), c.kind) << c.op << ": " << e.what();
    }
    EXPECT_TRUE(identical(cases::atomicity_grammar(), copy)) << c.op;
  }
}

}  // namespace
}  // namespace gforge
