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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gforge/pp.hpp"
#include "gforge/xbgf.hpp"

namespace gforge {
namespace fs = std::filesystem;

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void config_error(int line, const std::string& message) {
  throw Error(ErrorKind::kConfig, "line " + std::to_string(line) + ": " + message);
}

std::string resolve(const std::string& base, const std::string& path) {
  fs::path p(path);
  if (p.is_absolute() || base.empty()) return p.lexically_normal().string();
  return (fs::path(base) / p).lexically_normal().string();
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string two_digits(std::size_t n) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02zu", n);
  return buf;
}

}  // namespace

PipelineConfig parse_pipeline_config(std::string_view text, const std::string& base_dir) {
  PipelineConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> w = words(line);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (key == "source") {
      if (w.size() < 4 || w[2] != "dialect") {
        config_error(line_no, "expected 'source <path> dialect <path>'");
      }
      SourceSpec s{resolve(base_dir, w[1]), resolve(base_dir, w[3]), std::nullopt, false};
      for (std::size_t i = 4; i < w.size(); ++i) {
        if (w[i] == "rewrites" && i + 1 < w.size()) {
          s.rewrites = resolve(base_dir, w[++i]);
        } else if (w[i] == "tolerate-defining-variants") {
          s.tolerate_defining_variants = true;
        } else {
          config_error(line_no, "unexpected '" + w[i] + "'");
        }
      }
      config.sources.push_back(std::move(s));
    } else if (key == "script" && w.size() == 2) {
      config.scripts.push_back(resolve(base_dir, w[1]));
    } else if (key == "root" && w.size() == 2) {
      if (config.root) config_error(line_no, "root given twice");
      config.root = w[1];
    } else if (key == "out" && w.size() == 2) {
      config.out = resolve(base_dir, w[1]);
    } else {
      config_error(line_no, "unrecognized entry '" + key + "'");
    }
  }
  if (config.sources.empty()) throw Error(ErrorKind::kConfig, "no source entries");
  if (config.out.empty()) config.out = resolve(base_dir, "out");
  return config;
}

PipelineConfig load_pipeline_config(const std::string& path) {
  std::string text = read_text_file(path);
  PipelineConfig config = parse_pipeline_config(text, fs::path(path).parent_path().string());
  auto require = [](const std::string& file) {
    if (!fs::is_regular_file(file)) throw Error(ErrorKind::kConfig, "missing file " + file);
  };
  for (const auto& s : config.sources) {
    require(s.path);
    require(s.dialect);
    if (s.rewrites) require(*s.rewrites);
  }
  for (const auto& s : config.scripts) require(s);
  return config;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
}

NotationSpec load_dialect(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
    return parse_notation(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kConfig, path + ": " + e.what());
  }
}

ExtractionReport extract_source(const SourceSpec& source) {
  NotationSpec spec = load_dialect(source.dialect);
  ExtractOptions options;
  options.tolerate_defining_variants = source.tolerate_defining_variants;
  if (source.rewrites) {
    try {
      options.rewrites = parse_rewrites(read_text_file(*source.rewrites));
    } catch (const Error& e) {
      throw Error(ErrorKind::kConfig, *source.rewrites + ": " + e.what());
    }
  }
  return extract_document(read_text_file(source.path), spec, options);
}

std::string format_table(const std::vector<StageRow>& rows) {
  std::string out = format_metrics_header();
  for (const auto& r : rows) out += format_metrics_row(r.label, r.metrics);
  return out;
}

PipelineRun run_pipeline(const PipelineConfig& config, bool write_outputs) {
  PipelineRun run;
  std::vector<std::string> manifest;
  if (write_outputs) fs::create_directories(config.out);
  auto out_path = [&](const std::string& name) { return (fs::path(config.out) / name).string(); };

  auto record = [&](const std::string& label, const std::string& file) {
    std::string text = print_grammar(run.grammar);
    if (write_outputs) write_text_file(out_path(file), text);
    run.rows.push_back({label, metrics(run.grammar), file});
    manifest.push_back("stage " + two_digits(run.rows.size() - 1) + " " + file + " " + label);
  };
  auto finish = [&]() {
    if (!write_outputs) return;
    std::string defects;
    for (const auto& d : run.defects) defects += d + "\n";
    write_text_file(out_path("defects.txt"), defects);
    write_text_file(out_path("table.txt"), format_table(run.rows));
    std::string m;
    for (const auto& line : manifest) m += line + "\n";
    if (run.failed_stage) {
      m += "failed " + *run.failed_stage + ": " + run.error->what() + "\n";
    } else {
      write_text_file(out_path("final.pp"), print_grammar(run.grammar));
      m += "final final.pp\ncomplete\n";
    }
    write_text_file(out_path("MANIFEST"), m);
  };
  auto fail = [&](const std::string& stage, const Error& e) {
    run.failed_stage = stage;
    run.error.emplace(e);
    finish();
    return run;
  };

  std::vector<Grammar> parts;
  for (const auto& source : config.sources) {
    try {
      ExtractionReport report = extract_source(source);
      for (const auto& d : report.defects) {
        run.defects.push_back(fs::path(source.path).filename().string() + ": " + format_defect(d));
      }
      parts.push_back(std::move(report.grammar));
    } catch (const Error& e) {
      return fail("extraction of " + source.path, e);
    }
  }
  run.grammar = normalize(merge(parts));
  record("After extraction", "00-extraction.pp");

  for (const auto& script_path : config.scripts) {
    const std::string name = stem(script_path);
    const std::string index = two_digits(run.rows.size());
    try {
      TransformScript script = parse_script(read_text_file(script_path));
      RunResult result = run_script(script, run.grammar);
      if (write_outputs) {
        write_text_file(out_path(index + "-" + name + ".log"), format_step_log(result.log));
      }
      if (result.error) {
        run.grammar = std::move(result.grammar);
        run.failed_step = result.error->index();
        return fail(name, *result.error);
      }
      run.grammar = std::move(result.grammar);
    } catch (const Error& e) {
      return fail(name, e);
    }
    record("After " + name, index + "-" + name + ".pp");
  }

  if (config.root) {
    try {
      run.grammar = subgrammar(run.grammar, *config.root);
    } catch (const Error& e) {
      return fail("subgrammar", e);
    }
    record("After subgrammar", two_digits(run.rows.size()) + "-subgrammar.pp");
  }
  finish();
  return run;
}

std::string expand_charclass(std::string_view spec) {
  if (spec.empty()) throw Error(ErrorKind::kParse, "empty character class");
  std::set<unsigned char> chars;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    unsigned char lo = static_cast<unsigned char>(spec[i]);
    if (lo >= 0x80) throw Error(ErrorKind::kParse, "non-ASCII character in class");
    if (i + 2 < spec.size() && spec[i + 1] == '-') {
      unsigned char hi = static_cast<unsigned char>(spec[i + 2]);
      if (hi >= 0x80) throw Error(ErrorKind::kParse, "non-ASCII character in class");
      if (hi < lo) {
        throw Error(ErrorKind::kReversedRange,
                    std::string("range ") + spec[i] + "-" + spec[i + 2]);
      }
      for (unsigned c = lo; c <= hi; ++c) chars.insert(static_cast<unsigned char>(c));
      i += 2;
    } else {
      chars.insert(lo);
    }
  }
  std::string out;
  for (unsigned char c : chars) {
    if (!out.empty()) out += " | ";
    out += quote_terminal(std::string(1, static_cast<char>(c)));
  }
  return out;
}

}  // namespace gforge
