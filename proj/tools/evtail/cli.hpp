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

// Front end shared by the evtail binary and its tests.

#ifndef EVTAIL_TOOLS_CLI_HPP_
#define EVTAIL_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evtail/residual_cv.hpp"
#include "evtail/sample.hpp"
#include "evtail/threshold_test.hpp"

namespace evtail::cli {

enum class Command { kCvPlot, kMePlot, kFit, kTest, kSelect, kTransform, kSimulate };
enum class TransformKind { kNone, kNegReciprocal, kStabilize, kInverseStabilize };
enum class Format { kCsv, kJson, kSvg };
enum class XAxis { kRemoved, kThreshold };

struct RunConfig {
  Command command = Command::kCvPlot;
  std::string input_path;
  std::optional<std::string> column;
  std::size_t m = 20;
  std::size_t ns = 8;
  std::size_t replicates = 10000;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  double level = 0.90;
  std::optional<double> xi;
  double psi = 1.0;
  std::size_t n = 1000;
  std::optional<double> c;
  // Strict: keeps x > threshold and replaces it by x - threshold. Applied
  // before the transform.
  std::optional<double> threshold;
  TransformKind transform = TransformKind::kNone;
  QuantileMethod quantile_method = QuantileMethod::kInterpolated;
  bool inclusive = true;
  Format format = Format::kJson;
  XAxis x_axis = XAxis::kRemoved;
  bool all_stages = false;
  unsigned workers = 0;
  std::optional<std::string> output_path;
};

std::string to_string(Command c);
std::string to_string(TransformKind t);
std::string to_string(Format f);
std::string to_string(QuantileMethod m);

// Plain text, one value per line, or CSV when `column` is given. In CSV
// mode the first non-blank line is a header and `column` is a header name
// or a 0-based index. Blank lines are skipped. Throws Error(kIo) when the
// file cannot be read, Error(kParse) naming the line for bad tokens, and
// Error(kInvalidInput) for an empty or non-finite dataset.
SampleData ingest(const std::string& path, const std::optional<std::string>& column);
SampleData ingest_stream(std::istream& in, const std::optional<std::string>& column);

// Threshold then transform, as configured.
SampleData prepare(const SampleData& raw, const RunConfig& config);

// Executes the command and writes its output to `out`. Errors propagate as
// evtail::Error.
void execute(const RunConfig& config, std::ostream& out);

// execute() plus error reporting on `err`; returns the process exit code:
// 0 success, 2 domain error, 1 I/O or parse error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// JSON with every floating-point number printed with 17 significant digits
// and non-finite values as null.
void write_json(const nlohmann::ordered_json& value, std::ostream& out);

struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> band_low;   // empty when there is no band
  std::vector<double> band_high;
  std::optional<double> reference;
  std::string x_label;
  std::string y_label;
  std::string title;
};

void render_svg(const SvgSeries& series, std::ostream& out);
void emit_svg(const CvPlot& plot, std::ostream& out, XAxis x_axis = XAxis::kRemoved);
// Throws Error(kIo) when the path cannot be written.
void emit_svg(const CvPlot& plot, const std::string& path,
              XAxis x_axis = XAxis::kRemoved);

}  // namespace evtail::cli

#endif  // EVTAIL_TOOLS_CLI_HPP_
