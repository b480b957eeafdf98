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

// End-to-end recovery runs driven by a manifest file:
//
//   # comment
//   source article-title.txt dialect ../dialects/mediawiki.edd
//   source noparse.txt dialect noparse.edd rewrites noparse.rewrites
//   source images.txt dialect mediawiki.edd rewrites images.rewrites tolerate-defining-variants
//   script scripts/deyaccify.xbgf
//   root wiki-page
//   out build/run
//
// Relative paths resolve against the manifest's directory.

#ifndef GFORGE_PIPELINE_HPP_
#define GFORGE_PIPELINE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/analysis.hpp"
#include "gforge/error.hpp"
#include "gforge/extractor.hpp"
#include "gforge/grammar.hpp"

namespace gforge {

struct SourceSpec {
  std::string path;
  std::string dialect;
  std::optional<std::string> rewrites;
  bool tolerate_defining_variants = false;
};

struct PipelineConfig {
  std::vector<SourceSpec> sources;
  std::vector<std::string> scripts;
  std::optional<std::string> root;
  std::string out;
};

// Throws Error(kConfig) with the offending line number.
PipelineConfig parse_pipeline_config(std::string_view text, const std::string& base_dir);
// Reads the manifest and checks that every referenced file exists.
// Throws Error(kIo) when the manifest is unreadable, Error(kConfig) otherwise.
PipelineConfig load_pipeline_config(const std::string& path);

std::string read_text_file(const std::string& path);  // throws Error(kIo)
void write_text_file(const std::string& path, std::string_view text);  // throws Error(kIo)

// Dialect and rewrite files are configuration: their errors become kConfig.
NotationSpec load_dialect(const std::string& path);
ExtractionReport extract_source(const SourceSpec& source);

struct StageRow {
  std::string label;  // "After extraction", "After <script stem>", "After subgrammar"
  Metrics metrics;
  std::string file;   // grammar written for this stage, relative to out
};

struct PipelineRun {
  std::vector<StageRow> rows;
  Grammar grammar;  // last successfully produced grammar
  std::vector<std::string> defects;  // "source: LINE:COL kind message | resolution"
  std::optional<std::string> failed_stage;
  std::optional<std::size_t> failed_step;  // 1-based, set when a script step failed
  std::optional<Error> error;
};

// Extracts and merges the sources, applies the scripts in order, then the
// subgrammar. Stops at the first failing stage. With write_outputs, every
// stage grammar, step log, the defect report, table.txt and a MANIFEST
// (listing completed stages and the failure, if any) go to config.out.
PipelineRun run_pipeline(const PipelineConfig& config, bool write_outputs = true);

std::string format_table(const std::vector<StageRow>& rows);

// "A-Za-z0-9" or "_.,": ranges and single characters, ASCII only. Returns a
// pp-notation choice of one-character terminals in ascending code order,
// without duplicates. Throws Error(kReversedRange) for ranges like "z-a",
// Error(kParse) for empty or non-ASCII input.
std::string expand_charclass(std::string_view spec);

}  // namespace gforge

#endif  // GFORGE_PIPELINE_HPP_
