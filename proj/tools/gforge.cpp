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

// gforge command-line front end.
//
// Exit codes: 0 success, 2 syntax/parse/I/O failure, 3 configuration or
// usage error, 4 transformation step failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "gforge/analysis.hpp"
#include "gforge/error.hpp"
#include "gforge/extractor.hpp"
#include "gforge/pipeline.hpp"
#include "gforge/pp.hpp"
#include "gforge/xbgf.hpp"

namespace {

using namespace gforge;

constexpr int kOk = 0;
constexpr int kSyntax = 2;
constexpr int kConfigError = 3;
constexpr int kStepFailed = 4;

struct Options {
  std::string input;
  std::string dialect;
  std::string script;
  std::string config;
  std::string root;
  std::string out;
  std::string rewrites;
  bool tolerate = false;
  bool verbose = false;
};

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kConfig:
    case ErrorKind::kMissingDefiningSymbol:
    case ErrorKind::kMissingTerminator:
    case ErrorKind::kDuplicateRole:
    case ErrorKind::kUnknownRoleName:
    case ErrorKind::kBadNotationLine:
      return kConfigError;
    default:
      return kSyntax;
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

void require_file(const std::string& path, const char* what) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorKind::kConfig, std::string(what) + " not found: " + path);
  }
}

int cmd_extract(const Options& o) {
  require_file(o.dialect, "dialect");
  SourceSpec source{o.input, o.dialect, std::nullopt, o.tolerate};
  if (!o.rewrites.empty()) {
    require_file(o.rewrites, "rewrite table");
    source.rewrites = o.rewrites;
  }
  ExtractionReport report = extract_source(source);
  for (const auto& d : report.defects) std::cerr << o.input << ": " << format_defect(d) << "\n";
  emit(o, print_grammar(report.grammar));
  return kOk;
}

int cmd_transform(const Options& o) {
  Grammar g = parse_grammar(read_text_file(o.input));
  TransformScript script = parse_script(read_text_file(o.script));
  RunResult result = run_script(script, g);
  if (o.verbose || result.error) std::cerr << format_step_log(result.log);
  if (result.error) {
    if (!o.out.empty()) std::filesystem::remove(o.out);
    std::cerr << "step " << result.error->index() << " failed: " << result.error->what() << "\n";
    return kStepFailed;
  }
  emit(o, print_grammar(result.grammar));
  return kOk;
}

int cmd_analyze(const Options& o) {
  Grammar g = parse_grammar(read_text_file(o.input));
  if (!o.root.empty()) g = subgrammar(g, o.root);
  Metrics m = metrics(g);
  std::string text = format_metrics_row(std::filesystem::path(o.input).filename().string(), m);
  if (o.verbose) text = format_metrics_header() + text + format_name_lists(m);
  emit(o, text);
  return kOk;
}

int cmd_pretty(const Options& o) {
  require_file(o.dialect, "dialect");
  NotationSpec spec = load_dialect(o.dialect);
  emit(o, pretty_print(parse_grammar(read_text_file(o.input)), spec));
  return kOk;
}

int cmd_pipeline(const Options& o) {
  PipelineConfig config = load_pipeline_config(o.config);
  if (!o.root.empty()) config.root = o.root;
  if (!o.out.empty()) config.out = o.out;
  PipelineRun run = run_pipeline(config);
  if (o.verbose) {
    for (const auto& d : run.defects) std::cerr << d << "\n";
  }
  std::cout << format_table(run.rows);
  if (!run.error) return kOk;
  std::cerr << "stage " << *run.failed_stage << " failed";
  if (run.failed_step) std::cerr << " at step " << *run.failed_step;
  std::cerr << ": " << run.error->what() << "\n";
  if (run.failed_step) return kStepFailed;
  return exit_code(*run.error);
}

int cmd_expand(const Options& o) {
  std::cout << expand_charclass(o.input) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gforge: grammar extraction, transformation and analysis"};
  app.require_subcommand(1);
  Options o;

  auto* extract = app.add_subcommand("extract", "Extract a grammar from a document");
  extract->add_option("source", o.input, "Document file")->required();
  extract->add_option("--dialect", o.dialect, "Dialect definition (.edd)")->required();
  extract->add_option("--rewrites", o.rewrites, "Literal rewrite table");
  extract->add_flag("--tolerate-defining-variants", o.tolerate,
                    "Accept =, := and ::= as defining symbols");

  auto* transform = app.add_subcommand("transform", "Run a transformation script");
  transform->add_option("grammar", o.input, "Grammar in pp-notation")->required();
  transform->add_option("--script", o.script, "Transformation script")->required();

  auto* analyze = app.add_subcommand("analyze", "Print grammar metrics");
  analyze->add_option("grammar", o.input, "Grammar in pp-notation")->required();
  analyze->add_option("--root", o.root, "Restrict to the subgrammar of this nonterminal");

  auto* pretty = app.add_subcommand("pretty", "Print a grammar in a dialect");
  pretty->add_option("grammar", o.input, "Grammar in pp-notation")->required();
  pretty->add_option("--dialect", o.dialect, "Dialect definition (.edd)")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Replay a recovery run");
  pipeline->add_option("--config", o.config, "Pipeline manifest")->required();
  pipeline->add_option("--root", o.root, "Override the manifest root");

  auto* expand = app.add_subcommand("expand-charclass", "Expand a character class");
  expand->add_option("spec", o.input, "Ranges and characters, e.g. A-Za-z0-9")->required();

  app.add_flag("--verbose", o.verbose, "More diagnostics");
  app.add_option("--out", o.out, "Output file (directory for pipeline)");
  for (auto* sub : {extract, transform, analyze, pretty, pipeline, expand}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*extract) return cmd_extract(o);
    if (*transform) return cmd_transform(o);
    if (*analyze) return cmd_analyze(o);
    if (*pretty) return cmd_pretty(o);
    if (*pipeline) return cmd_pipeline(o);
    return cmd_expand(o);
  } catch (const Error& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return kSyntax;
  }
}
