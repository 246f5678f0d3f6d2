// Copyright 2026 The orthocompact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthocompact/compact.h"
#include "orthocompact/driver.h"
#include "orthocompact/errors.h"
#include "orthocompact/generate.h"
#include "orthocompact/io.h"
#include "orthocompact/oracle.h"

namespace orthocompact {
namespace {

// Reads `path`, or standard input for "-".
std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream contents;
    contents << in.rdbuf();
    return contents.str();
  }
  return ReadFile(path);
}

void WriteOutput(const std::string& path, const std::string& contents,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    WriteFile(path, contents);
  }
}

std::string InstanceName(const std::string& path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

int ValidateCommand(const std::string& path, std::istream& in,
                    std::ostream& out, std::ostream& err) {
  const OrthoDrawing drawing =
      Canonicalized(ParseOgdUnchecked(ReadInput(path, in)));
  const ValidationReport report = Validate(drawing);
  if (!report.ok()) {
    err << path << ": " << report.ToString() << '\n';
    return kExitInvalid;
  }
  out << path << ": ok (" << drawing.vertices.size() << " vertices, "
      << drawing.edges.size() << " edges)\n";
  return kExitOk;
}

struct CompactOptions {
  std::string file;
  std::string mode = "ff";
  std::string axis = "both";
  int max_iter = 50;
  int spacing = 1;
  std::string out_path;
  std::string svg_path;
  std::string metrics_path;
};

int CompactCommand(const CompactOptions& o, std::istream& in,
                   std::ostream& out) {
  const OrthoDrawing input = ParseOgd(ReadInput(o.file, in));
  const Mode mode = o.mode == "trad" ? Mode::kTrad : Mode::kFf;
  const auto start = std::chrono::steady_clock::now();
  OrthoDrawing result;
  int iterations = 1;
  int dissection_edges = 0;
  if (o.axis == "both") {
    AlternateResult run = Alternate(input, mode, o.max_iter, o.spacing);
    result = std::move(run.drawing);
    iterations = run.trace.rounds;
    for (const TraceStep& s : run.trace.steps) {
      dissection_edges = std::max(dissection_edges, s.dissection_segments);
    }
  } else {
    const Axis axis = o.axis == "y" ? Axis::kVertical : Axis::kHorizontal;
    StepResult step = CompactStepDetailed(input, mode, axis, o.spacing);
    result = std::move(step.drawing);
    dissection_edges = step.dissection_segments;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  WriteOutput(o.out_path, SerializeOgd(result), out);
  if (!o.svg_path.empty()) {
    SvgOptions svg;
    svg.highlight = EdgesWithNewBends(input, result);
    WriteFile(o.svg_path, RenderSvg(result, svg));
  }
  if (!o.metrics_path.empty()) {
    const MetricsRecord record{InstanceName(o.file), o.mode, iterations,
                               ComputeMetrics(result), dissection_edges, ms};
    WriteOutput(o.metrics_path, ToJsonLine(record) + "\n", out);
  }
  return kExitOk;
}

struct CompareOptions {
  std::string input;
  std::string metrics_path;
  int max_iter = 50;
  int spacing = 1;
  int jobs = 1;
};

int CompareCommand(const CompareOptions& o, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  if (o.input != "-" && std::filesystem::is_directory(o.input)) {
    for (const auto& entry : std::filesystem::directory_iterator(o.input)) {
      if (entry.path().extension() == ".ogd") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(o.input);
  }

  struct Outcome {
    std::string lines;
    std::string error;
  };
  auto run_one = [&](const std::string& file, const std::string& text) {
    Outcome outcome;
    try {
      const OrthoDrawing drawing = ParseOgd(text);
      const ComparisonReport report = Compare(drawing, o.max_iter, o.spacing);
      outcome.lines = ComparisonJsonLines(InstanceName(file), report);
    } catch (const std::exception& e) {
      outcome.error = file + ": " + e.what();
    }
    return outcome;
  };

  std::vector<std::string> texts;
  for (const std::string& file : files) texts.push_back(ReadInput(file, in));
  std::vector<Outcome> outcomes(files.size());
  const size_t jobs = static_cast<size_t>(std::max(1, o.jobs));
  for (size_t begin = 0; begin < files.size(); begin += jobs) {
    std::vector<std::future<Outcome>> batch;
    const size_t end = std::min(files.size(), begin + jobs);
    for (size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async
                                          : std::launch::deferred,
                                 run_one, files[i], texts[i]));
    }
    for (size_t i = begin; i < end; ++i) {
      outcomes[i] = batch[i - begin].get();
    }
  }

  std::string lines;
  int status = kExitOk;
  for (const Outcome& outcome : outcomes) {
    if (!outcome.error.empty()) {
      err << outcome.error << '\n';
      status = kExitInvalid;
    }
    lines += outcome.lines;
  }
  WriteOutput(o.metrics_path, lines, out);
  return status;
}

int MetricsCommand(const std::string& path, std::istream& in,
                   std::ostream& out) {
  const OrthoDrawing drawing = ParseOgd(ReadInput(path, in));
  out << ToJsonLine({InstanceName(path), "input", 0, ComputeMetrics(drawing),
                     0, 0})
      << '\n';
  return kExitOk;
}

int OracleCommand(const std::string& path, Coord bound,
                  const std::string& out_path, std::istream& in,
                  std::ostream& out) {
  const OrthoDrawing drawing = ParseOgd(ReadInput(path, in));
  const OracleResult result = OracleTradVertical(drawing, bound);
  nlohmann::ordered_json j;
  j["instance"] = InstanceName(path);
  j["axis"] = "y";
  j["optimum"] = result.optimum;
  j["input_vertical_length"] = VerticalLength(drawing);
  out << j.dump() << '\n';
  if (!out_path.empty()) WriteFile(out_path, SerializeOgd(result.witness));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal drawing compaction (TRAD and Fled-Five)",
               "orthocompact"};
  app.require_subcommand(1);

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "Check a drawing");
  validate->add_option("file", validate_file, "Drawing (.ogd) or -")
      ->required();

  CompactOptions compact;
  CLI::App* compact_cmd =
      app.add_subcommand("compact", "Compact a drawing");
  compact_cmd->add_option("file", compact.file, "Drawing (.ogd) or -")
      ->required();
  compact_cmd->add_option("--mode", compact.mode, "trad or ff")
      ->check(CLI::IsMember({"trad", "ff"}));
  compact_cmd->add_option("--axis", compact.axis,
                          "y (one vertical step), x, or both (alternate)")
      ->check(CLI::IsMember({"x", "y", "both"}));
  compact_cmd->add_option("--max-iter", compact.max_iter, "Round limit")
      ->check(CLI::PositiveNumber);
  compact_cmd->add_option("--spacing", compact.spacing,
                          "Bend vertex spacing on horizontal runs")
      ->check(CLI::PositiveNumber);
  compact_cmd->add_option("--out", compact.out_path, "Output drawing");
  compact_cmd->add_option("--svg", compact.svg_path, "SVG rendering");
  compact_cmd->add_option("--metrics", compact.metrics_path,
                          "Metrics record (JSON line)");

  CompareOptions compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run TRAD and FF and report both");
  compare_cmd->add_option("input", compare.input,
                          "Drawing (.ogd), directory of drawings, or -")
      ->required();
  compare_cmd->add_option("--metrics", compare.metrics_path,
                          "Output for JSON lines (default stdout)");
  compare_cmd->add_option("--max-iter", compare.max_iter, "Round limit")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--spacing", compare.spacing, "Bend vertex spacing")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--jobs", compare.jobs, "Instances in parallel")
      ->check(CLI::PositiveNumber);

  std::string kind = "grid";
  int n = 2;
  uint64_t seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind, "grid, comb, staircase or random")
      ->check(CLI::IsMember({"grid", "comb", "staircase", "random"}));
  gen->add_option("--n", n, "Size")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed (random only)");
  gen->add_option("--out", gen_out, "Output (default stdout)");

  std::string metrics_file = "-";
  CLI::App* metrics = app.add_subcommand("metrics", "Print drawing metrics");
  metrics->add_option("file", metrics_file, "Drawing (.ogd) or - (default)");

  std::string oracle_file;
  std::string oracle_axis = "y";
  Coord oracle_bound = -1;
  std::string oracle_out;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Exhaustive vertical optimum (tiny inputs)");
  oracle->add_option("file", oracle_file, "Drawing (.ogd) or -")->required();
  oracle->add_option("--axis", oracle_axis, "Only y is supported")
      ->check(CLI::IsMember({"y"}));
  oracle->add_option("--bound", oracle_bound,
                     "Largest y to try (default: input height)");
  oracle->add_option("--out", oracle_out, "Witness drawing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return ValidateCommand(validate_file, in, out, err);
    if (compact_cmd->parsed()) return CompactCommand(compact, in, out);
    if (compare_cmd->parsed()) return CompareCommand(compare, in, out, err);
    if (gen->parsed()) {
      WriteOutput(gen_out,
                  SerializeOgd(Generate(*ParseGeneratorKind(kind), n, seed)),
                  out);
      return kExitOk;
    }
    if (metrics->parsed()) return MetricsCommand(metrics_file, in, out);
    if (oracle->parsed()) {
      return OracleCommand(oracle_file, oracle_bound, oracle_out, in, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidDrawingError& e) {
    err << "invalid drawing: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OracleRefusedError& e) {
    err << "oracle refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace orthocompact
