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

// Runs the gforge executable and checks exit codes and files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "gforge/analysis.hpp"
#include "gforge/pp.hpp"
#include "test_util.hpp"

namespace gforge {
namespace {

namespace fs = std::filesystem;
using testing::data_path;
using testing::read_file;
using testing::write_file;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gforge-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Returns the exit status; stdout goes to out.txt, stderr to err.txt.
  int run(const std::string& args) {
    std::string cmd = std::string(GFORGE_BIN) + " " + args + " >" + path("out.txt") + " 2>" +
                      path("err.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const { return read_file(path("out.txt")); }
  std::string err() const { return read_file(path("err.txt")); }

  fs::path dir_;
};

const std::string kTitle = data_path("fixtures/mediawiki/article-title.wiki");
const std::string kMediawiki = data_path("dialects/mediawiki.edd");

TEST_F(CliTest, ExtractWritesGrammar) {
  ASSERT_EQ(run("extract " + kTitle + " --dialect " + kMediawiki + " --out " + path("t.pp")), 0)
      << err();
  Metrics m = metrics(parse_grammar(read_file(path("t.pp"))));
  EXPECT_EQ(m.var, 15u);
  EXPECT_EQ(m.prod, 25u);
}

TEST_F(CliTest, ExtractMissingDialectIsConfigError) {
  EXPECT_EQ(run("extract " + kTitle + " --dialect " + path("none.edd")), 3);
}

TEST_F(CliTest, ExtractBrokenDialectIsConfigError) {
  write_file(path("bad.edd"), "frobnicate =\n");
  EXPECT_EQ(run("extract " + kTitle + " --dialect " + path("bad.edd")), 3);
}

TEST_F(CliTest, ExtractWithoutFragmentIsSyntaxError) {
  write_file(path("empty.wiki"), "No grammar here.\n");
  EXPECT_EQ(run("extract " + path("empty.wiki") + " --dialect " + kMediawiki), 2);
  EXPECT_NE(err().find("FatalSyntax"), std::string::npos) << err();
}

TEST_F(CliTest, MissingInputIsIoError) {
  EXPECT_EQ(run("analyze " + path("absent.pp")), 2);
}

TEST_F(CliTest, UnparsableGrammarIsSyntaxError) {
  write_file(path("g.pp"), "x: (a\n");
  EXPECT_EQ(run("analyze " + path("g.pp")), 2);
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run("frobnicate"), 3);
}

TEST_F(CliTest, AnalyzePrintsOneRow) {
  write_file(path("g.pp"), "s: a b\na: \"x\"\n");
  ASSERT_EQ(run("analyze " + path("g.pp")), 0);
  EXPECT_EQ(out(), format_metrics_row("g.pp", metrics(parse_grammar("s: a b\na: \"x\"\n"))));
  ASSERT_EQ(run("analyze --verbose " + path("g.pp")), 0);
  EXPECT_NE(out().find("bottoms: b"), std::string::npos) << out();
}

TEST_F(CliTest, EmptyScriptIsByteIdentical) {
  ASSERT_EQ(run("extract " + kTitle + " --dialect " + kMediawiki + " --out " + path("t.pp")), 0);
  write_file(path("empty.xbgf"), "// nothing to do\n");
  ASSERT_EQ(run("transform " + path("t.pp") + " --script " + path("empty.xbgf") + " --out " +
                path("u.pp")),
            0)
      << err();
  EXPECT_EQ(read_file(path("u.pp")), read_file(path("t.pp")));
}

TEST_F(CliTest, FailingStepLeavesNoOutput) {
  write_file(path("g.pp"), "s: a\na: \"x\"\n");
  write_file(path("s.xbgf"), "renameN(a, b);\neliminate(nosuch);\n");
  write_file(path("u.pp"), "stale\n");
  EXPECT_EQ(run("transform " + path("g.pp") + " --script " + path("s.xbgf") + " --out " +
                path("u.pp")),
            4);
  EXPECT_FALSE(fs::exists(path("u.pp")));
  EXPECT_NE(err().find("step 2"), std::string::npos) << err();
}

TEST_F(CliTest, BadScriptIsSyntaxError) {
  write_file(path("g.pp"), "s: \"x\"\n");
  write_file(path("s.xbgf"), "renameN(a b);\n");
  EXPECT_EQ(run("transform " + path("g.pp") + " --script " + path("s.xbgf")), 2);
}

TEST_F(CliTest, PrettyLowersPlus) {
  write_file(path("g.pp"), "x: \"a\"+\n");
  ASSERT_EQ(run("pretty " + path("g.pp") + " --dialect " + data_path("dialects/wsn.edd")), 0);
  EXPECT_EQ(out(), "x = \"a\" { \"a\" } .\n");
}

TEST_F(CliTest, PrettyUnprintable) {
  write_file(path("g.pp"), "x: ANY\n");
  EXPECT_EQ(run("pretty " + path("g.pp") + " --dialect " + data_path("dialects/wsn.edd")), 2);
}

TEST_F(CliTest, PipelineConfigErrors) {
  write_file(path("p"), "source a.wiki\n");
  EXPECT_EQ(run("pipeline --config " + path("p")), 3);
  EXPECT_NE(err().find("line 1"), std::string::npos) << err();
  write_file(path("p"), "source a.wiki dialect b.edd\n");
  EXPECT_EQ(run("pipeline --config " + path("p")), 3);
}

TEST_F(CliTest, PipelineStepFailure) {
  write_file(path("bad.xbgf"), "unfold(nosuch);\n");
  write_file(path("p"), "source " + kTitle + " dialect " + kMediawiki + "\nscript bad.xbgf\n");
  EXPECT_EQ(run("pipeline --config " + path("p") + " --out " + path("run")), 4);
  EXPECT_TRUE(fs::exists(path("run/00-extraction.pp")));
  EXPECT_NE(read_file(path("run/MANIFEST")).find("failed bad"), std::string::npos);
}

TEST_F(CliTest, PipelineSingleSource) {
  write_file(path("p"), "source " + kTitle + " dialect " + kMediawiki + "\n");
  ASSERT_EQ(run("pipeline --config " + path("p") + " --out " + path("run")), 0) << err();
  EXPECT_EQ(out(), read_file(path("run/table.txt")));
  EXPECT_EQ(read_file(path("run/final.pp")), read_file(path("run/00-extraction.pp")));
}

TEST_F(CliTest, ExpandCharclass) {
  ASSERT_EQ(run("expand-charclass 0-2"), 0);
  EXPECT_EQ(out(), "\"0\" | \"1\" | \"2\"\n");
  EXPECT_EQ(run("expand-charclass z-a"), 2);
}

}  // namespace
}  // namespace gforge
