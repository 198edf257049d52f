// Copyright 2026 The evtail Authors.
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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "evtail/version.hpp"

namespace {

using evtail::cli::Command;
using evtail::cli::RunConfig;

void add_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--input", c.input_path, "Data file: one value per line, or CSV with --column");
  sub->add_option("--column", c.column, "CSV column name or 0-based index");
  sub->add_option("--m", c.m, "Number of thresholds")->capture_default_str();
  sub->add_option("--ns", c.ns, "Minimal tail size")->capture_default_str();
  sub->add_option("--replicates", c.replicates, "Null replicates for p-values")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed")->envname("EVTAIL_SEED")->capture_default_str();
  sub->add_option("--alpha", c.alpha, "Acceptance level for select")->capture_default_str();
  sub->add_option("--level", c.level, "Confidence level for CV bands")->capture_default_str();
  sub->add_option("--xi", c.xi, "Shape: reference (cvplot), known null (test/select), or "
                                "simulation shape");
  sub->add_option("--psi", c.psi, "Scale for simulate")->capture_default_str();
  sub->add_option("--n", c.n, "Sample size for simulate")->capture_default_str();
  sub->add_option("--c", c.c, "Stabilizing constant; fitted when omitted");
  sub->add_option("--threshold", c.threshold,
                  "Keep x > threshold as excesses x - threshold before any transform");
  sub->add_option("--transform", c.transform, "none|neg-reciprocal|stabilize|inverse-stabilize")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, evtail::cli::TransformKind>{
              {"none", evtail::cli::TransformKind::kNone},
              {"neg-reciprocal", evtail::cli::TransformKind::kNegReciprocal},
              {"stabilize", evtail::cli::TransformKind::kStabilize},
              {"inverse-stabilize", evtail::cli::TransformKind::kInverseStabilize}},
          CLI::ignore_case).description(""))
      ->option_text("NAME");
  sub->add_option("--quantile-method", c.quantile_method, "interpolated|lower-step")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, evtail::QuantileMethod>{
              {"interpolated", evtail::QuantileMethod::kInterpolated},
              {"lower-step", evtail::QuantileMethod::kLowerStep}},
          CLI::ignore_case).description(""))
      ->option_text("NAME");
  sub->add_flag("--inclusive,!--exclusive", c.inclusive,
                "Exceedances are x >= t (default) or x > t");
  sub->add_option("--format", c.format, "csv|json|svg")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, evtail::cli::Format>{{"csv", evtail::cli::Format::kCsv},
                                                     {"json", evtail::cli::Format::kJson},
                                                     {"svg", evtail::cli::Format::kSvg}},
          CLI::ignore_case).description(""))
      ->option_text("NAME");
  sub->add_option("--x-axis", c.x_axis, "SVG x-axis: removed|threshold")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, evtail::cli::XAxis>{
              {"removed", evtail::cli::XAxis::kRemoved},
              {"k", evtail::cli::XAxis::kRemoved},
              {"threshold", evtail::cli::XAxis::kThreshold}},
          CLI::ignore_case).description(""))
      ->option_text("NAME");
  sub->add_flag("--all-stages", c.all_stages,
                "select: keep testing stages after the first acceptance");
  sub->add_option("--workers", c.workers, "Simulation threads, 0 for all cores");
  sub->add_option("--output", c.output_path, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail analysis with the residual coefficient of variation"};
  app.set_version_flag("--version", std::string(evtail::library_version()));
  app.require_subcommand(1);

  RunConfig config;
  const std::map<std::string, std::pair<Command, const char*>> commands{
      {"cvplot", {Command::kCvPlot, "Residual CV against the threshold, with bands"}},
      {"meplot", {Command::kMePlot, "Mean excess against the threshold"}},
      {"fit", {Command::kFit, "Maximum likelihood GPD fit"}},
      {"test", {Command::kTest, "T_m goodness-of-fit test with a simulated p-value"}},
      {"select", {Command::kSelect, "Sequential threshold selection"}},
      {"transform", {Command::kTransform, "Write the thresholded and transformed sample"}},
      {"simulate", {Command::kSimulate, "Draw a GPD(xi, psi) sample"}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    add_options(sub, config);
    const Command cmd = entry.first;
    sub->callback([&config, cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (config.format == evtail::cli::Format::kJson &&
      (config.command == Command::kTransform || config.command == Command::kSimulate) &&
      app.get_subcommands().front()->count("--format") == 0) {
    config.format = evtail::cli::Format::kCsv;
  }
  return evtail::cli::run(config, std::cout, std::cerr);
}
