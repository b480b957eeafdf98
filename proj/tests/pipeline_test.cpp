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

#include "gforge/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "gforge/pp.hpp"
#include "gforge/xbgf.hpp"
#include "test_util.hpp"

namespace gforge {
namespace {

namespace fs = std::filesystem;
using testing::data_path;
using testing::read_data;
using testing::read_file;

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("gforge-pipeline-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Grammar extract_fixture(const std::string& file, const std::string& dialect) {
  return extract_source({data_path("fixtures/mediawiki/" + file),
                         data_path("dialects/" + dialect), std::nullopt, false})
      .grammar;
}

Grammar run_file(const Grammar& g, const std::string& script) {
  RunResult r = run_script(parse_script(read_data(script)), g);
  if (r.error) throw *r.error;
  return r.grammar;
}

ErrorKind config_kind(const std::string& text) {
  try {
    parse_pipeline_config(text, "");
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kIo;
}

TEST(PipelineConfigTest, ParsesEntriesAndResolvesPaths) {
  PipelineConfig c = parse_pipeline_config(
      "# run\n"
      "source a.wiki dialect d/x.edd rewrites r.txt tolerate-defining-variants\n"
      "source b.wiki dialect /abs/y.edd\n"
      "script s/one.xbgf\n"
      "root top\n",
      "/base");
  ASSERT_EQ(c.sources.size(), 2u);
  EXPECT_EQ(c.sources[0].path, "/base/a.wiki");
  EXPECT_EQ(c.sources[0].dialect, "/base/d/x.edd");
  EXPECT_EQ(c.sources[0].rewrites, "/base/r.txt");
  EXPECT_TRUE(c.sources[0].tolerate_defining_variants);
  EXPECT_EQ(c.sources[1].dialect, "/abs/y.edd");
  EXPECT_FALSE(c.sources[1].rewrites);
  EXPECT_EQ(c.scripts, std::vector<std::string>{"/base/s/one.xbgf"});
  EXPECT_EQ(c.root, "top");
  EXPECT_EQ(c.out, "/base/out");
}

TEST(PipelineConfigTest, ErrorsNameTheLine) {
  try {
    parse_pipeline_config("source a dialect b\n\nscript\n", "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(config_kind("source a b c\n"), ErrorKind::kConfig);
  EXPECT_EQ(config_kind("source a dialect b frobnicate\n"), ErrorKind::kConfig);
  EXPECT_EQ(config_kind("source a dialect b\nroot x\nroot y\n"), ErrorKind::kConfig);
  EXPECT_EQ(config_kind("script x.xbgf\n"), ErrorKind::kConfig);
}

TEST(PipelineConfigTest, MissingFilesAreConfigErrors) {
  fs::path dir = scratch("missing");
  testing::write_file((dir / "p").string(), "source nowhere.wiki dialect nowhere.edd\n");
  try {
    load_pipeline_config((dir / "p").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
  try {
    load_pipeline_config((dir / "absent").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(PipelineTest, ZeroScriptsGivesOneRowEqualToExtraction) {
  PipelineConfig c;
  c.sources.push_back({data_path("fixtures/mediawiki/article-title.wiki"),
                       data_path("dialects/mediawiki.edd"), std::nullopt, false});
  c.out = scratch("zero").string();
  PipelineRun run = run_pipeline(c);
  ASSERT_FALSE(run.error);
  ASSERT_EQ(run.rows.size(), 1u);
  Grammar direct = normalize(extract_fixture("article-title.wiki", "mediawiki.edd"));
  EXPECT_TRUE(equal(run.grammar, direct));
  EXPECT_EQ(read_file(c.out + "/00-extraction.pp"), print_grammar(direct));
  EXPECT_NE(read_file(c.out + "/MANIFEST").find("complete"), std::string::npos);
}

TEST(PipelineTest, FailingScriptKeepsPartialOutputs) {
  fs::path dir = scratch("fail");
  testing::write_file((dir / "bad.xbgf").string(), "renameN(nosuch, other);\n");
  PipelineConfig c;
  c.sources.push_back({data_path("fixtures/mediawiki/article-title.wiki"),
                       data_path("dialects/mediawiki.edd"), std::nullopt, false});
  c.scripts.push_back((dir / "bad.xbgf").string());
  c.out = (dir / "out").string();
  PipelineRun run = run_pipeline(c);
  ASSERT_TRUE(run.error);
  EXPECT_EQ(run.failed_stage, "bad");
  EXPECT_EQ(run.failed_step, 1u);
  EXPECT_EQ(run.rows.size(), 1u);
  EXPECT_TRUE(fs::exists(dir / "out/00-extraction.pp"));
  EXPECT_FALSE(fs::exists(dir / "out/final.pp"));
  EXPECT_NE(read_file((dir / "out/MANIFEST").string()).find("failed bad"), std::string::npos);
}

class BundledRunTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    PipelineConfig c = load_pipeline_config(data_path("fixtures/mediawiki.pipeline"));
    c.out = scratch("bundled").string();
    run_ = new PipelineRun(run_pipeline(c));
    out_ = new std::string(c.out);
  }
  static void TearDownTestSuite() {
    delete run_;
    delete out_;
  }
  static PipelineRun* run_;
  static std::string* out_;
};
PipelineRun* BundledRunTest::run_ = nullptr;
std::string* BundledRunTest::out_ = nullptr;

TEST_F(BundledRunTest, CompletesWithOneRowPerStage) {
  ASSERT_FALSE(run_->error) << run_->error->what();
  EXPECT_EQ(run_->rows.size(), 21u);
  EXPECT_EQ(run_->rows.front().label, "After extraction");
  EXPECT_EQ(run_->rows[3].label, "After remove-extension-points");
  EXPECT_EQ(run_->rows.back().label, "After subgrammar");
  EXPECT_EQ(run_->rows.back().metrics.tops, std::vector<std::string>{"wiki-page"});
}

TEST_F(BundledRunTest, RowsMatchAnalysisOfWrittenFiles) {
  for (const auto& row : run_->rows) {
    Grammar g = parse_grammar(read_file(*out_ + "/" + row.file));
    EXPECT_EQ(metrics(g), row.metrics) << row.file;
  }
  EXPECT_EQ(read_file(*out_ + "/table.txt"), format_table(run_->rows));
}

TEST_F(BundledRunTest, RemoveExtensionPointsDropsSevenAlternatives) {
  EXPECT_EQ(run_->rows[2].metrics.prod - run_->rows[3].metrics.prod, 7u);
}

TEST_F(BundledRunTest, DefineLexicalsShrinksBottoms) {
  const Metrics& before = run_->rows[18].metrics;
  const Metrics& after = run_->rows[19].metrics;
  EXPECT_EQ(run_->rows[19].label, "After define-lexicals");
  EXPECT_LT(after.bottoms.size(), before.bottoms.size());
}

TEST_F(BundledRunTest, FinalBottomsAreImportPoints) {
  const auto& b = run_->rows.back().metrics.bottoms;
  for (const char* name : {"CSS", "LEGAL_URL_ENTITY", "STR", "inline-html", "math-block",
                           "wgHtmlEntities"}) {
    EXPECT_NE(std::find(b.begin(), b.end(), name), b.end()) << name;
  }
}

TEST_F(BundledRunTest, Deterministic) {
  PipelineConfig c = load_pipeline_config(data_path("fixtures/mediawiki.pipeline"));
  c.out = scratch("bundled-again").string();
  PipelineRun again = run_pipeline(c);
  ASSERT_FALSE(again.error);
  for (const auto& row : run_->rows) {
    EXPECT_EQ(read_file(c.out + "/" + row.file), read_file(*out_ + "/" + row.file)) << row.file;
  }
  EXPECT_EQ(read_file(c.out + "/final.pp"), read_file(*out_ + "/final.pp"));
  EXPECT_EQ(read_file(c.out + "/defects.txt"), read_file(*out_ + "/defects.txt"));
}

TEST(FixtureTest, EverySourceExtractsWithoutFatalErrors) {
  PipelineConfig c = load_pipeline_config(data_path("fixtures/mediawiki.pipeline"));
  for (const auto& s : c.sources) {
    EXPECT_NO_THROW(extract_source(s)) << s.path;
  }
}

TEST(FixtureTest, ArticleTitleMicroRecovery) {
  Grammar g = extract_fixture("article-title.wiki", "mediawiki.edd");
  Metrics m = metrics(g);
  EXPECT_EQ(m.var, 15u);
  EXPECT_EQ(m.prod, 25u);
  g = run_file(g, "scripts/article-title/remove-extension-points.xbgf");
  g = run_file(g, "scripts/article-title/deyaccify.xbgf");
  m = metrics(g);
  EXPECT_EQ(m.var, 11u);
  EXPECT_EQ(m.prod, 17u);
}

TEST(FixtureTest, TablesFragmentHasEightProductions) {
  Grammar g = extract_fixture("special-block-tables.wiki", "tables.edd");
  EXPECT_EQ(g.productions.size(), 8u);
  EXPECT_EQ(metrics(g).var, 8u);
}

TEST(FixtureTest, FundamentalsAddNoProductions) {
  Grammar inline_text = extract_fixture("inline-text.wiki", "mediawiki.edd");
  Grammar fundamentals = extract_fixture("fundamentals.wiki", "mediawiki.edd");
  Grammar merged = merge({inline_text, fundamentals});
  EXPECT_EQ(metrics(merged).prod, metrics(inline_text).prod);
  EXPECT_EQ(metrics(merged).var, metrics(inline_text).var);
}

TEST(FixtureTest, HtmlEntitiesFragment) {
  Grammar g = extract_source({data_path("fixtures/wghtmlentities.wiki"),
                              data_path("dialects/mediawiki.edd"), std::nullopt, false})
                  .grammar;
  Metrics m = metrics(g);
  EXPECT_EQ(m.var, 1u);
  EXPECT_EQ(m.prod, 252u);
  EXPECT_EQ(m.term, 252u);
}

TEST(ExpandCharclassTest, Digits) {
  EXPECT_EQ(expand_charclass("0-9"),
            R"("0" | "1" | "2" | "3" | "4" | "5" | "6" | "7" | "8" | "9")");
}

TEST(ExpandCharclassTest, AlphanumericHasSixtyTwoAlternatives) {
  Expr e = parse_expr(expand_charclass("A-Za-z0-9"));
  ASSERT_TRUE(e.is(ExprKind::kChoice));
  EXPECT_EQ(e.children().size(), 62u);
}

TEST(ExpandCharclassTest, SortsAndDeduplicates) {
  EXPECT_EQ(expand_charclass("cba-b"), R"("a" | "b" | "c")");
  EXPECT_EQ(expand_charclass("-"), R"("-")");
}

TEST(ExpandCharclassTest, Errors) {
  auto kind = [](const char* spec) {
    try {
      expand_charclass(spec);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIo;
  };
  EXPECT_EQ(kind("z-a"), ErrorKind::kReversedRange);
  EXPECT_EQ(kind(""), ErrorKind::kParse);
  EXPECT_EQ(kind("\xc3\xa9"), ErrorKind::kParse);
}

}  // namespace
}  // namespace gforge
