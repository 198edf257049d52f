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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "evtail/error.hpp"
#include "evtail/gpd.hpp"
#include "evtail/random.hpp"
#include "evtail/transforms.hpp"
#include "evtail/version.hpp"

namespace evtail::cli {

using Json = nlohmann::ordered_json;

std::string to_string(Command c) {
  switch (c) {
    case Command::kCvPlot: return "cvplot";
    case Command::kMePlot: return "meplot";
    case Command::kFit: return "fit";
    case Command::kTest: return "test";
    case Command::kSelect: return "select";
    case Command::kTransform: return "transform";
    case Command::kSimulate: return "simulate";
  }
  return "?";
}

std::string to_string(TransformKind t) {
  switch (t) {
    case TransformKind::kNone: return "none";
    case TransformKind::kNegReciprocal: return "neg-reciprocal";
    case TransformKind::kStabilize: return "stabilize";
    case TransformKind::kInverseStabilize: return "inverse-stabilize";
  }
  return "?";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kSvg: return "svg";
  }
  return "?";
}

std::string to_string(QuantileMethod m) {
  return m == QuantileMethod::kInterpolated ? "interpolated" : "lower-step";
}

namespace {

struct Prepared {
  SampleData sample;
  std::size_t n_raw;
  std::optional<double> c;
};

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  j["input"] = c.input_path.empty() ? Json(nullptr) : Json(c.input_path);
  j["column"] = opt(c.column);
  j["m"] = c.m;
  j["ns"] = c.ns;
  j["replicates"] = c.replicates;
  j["seed"] = c.seed;
  j["alpha"] = c.alpha;
  j["level"] = c.level;
  j["xi"] = opt(c.xi);
  j["psi"] = c.psi;
  j["n"] = c.n;
  j["c"] = opt(c.c);
  j["threshold"] = opt(c.threshold);
  j["transform"] = to_string(c.transform);
  j["quantile_method"] = to_string(c.quantile_method);
  j["inclusive"] = c.inclusive;
  j["format"] = to_string(c.format);
  j["x_axis"] = c.x_axis == XAxis::kRemoved ? "removed" : "threshold";
  j["all_stages"] = c.all_stages;
  return j;
}

Prepared prepare_sample(const SampleData& raw, const RunConfig& config) {
  Prepared out{raw, raw.size(), std::nullopt};
  SampleData data = config.threshold ? raw.excesses_over(*config.threshold, false) : raw;
  switch (config.transform) {
    case TransformKind::kNone:
      break;
    case TransformKind::kNegReciprocal:
      data = negate_reciprocal(data);
      break;
    case TransformKind::kStabilize: {
      const StabilizeSpec spec =
          config.c ? StabilizeSpec(*config.c) : StabilizeSpec::from_fit(data);
      out.c = spec.c();
      data = stabilize(data, spec);
      break;
    }
    case TransformKind::kInverseStabilize:
      if (!config.c) {
        throw Error(ErrorCode::kInvalidInput, "inverse-stabilize needs --c");
      }
      out.c = *config.c;
      data = inverse_stabilize(data, StabilizeSpec(*config.c));
      break;
  }
  out.sample = std::move(data);
  return out;
}

Json data_json(const Prepared& p, const RunConfig& config) {
  Json j;
  j["n_input"] = p.n_raw;
  j["n"] = p.sample.size();
  j["threshold"] = opt(config.threshold);
  j["transform"] = to_string(config.transform);
  j["c"] = opt(p.c);
  return j;
}

struct Output {
  Json result;
  std::string csv;
  std::string svg;
};

Output do_cvplot(const RunConfig& config, const Prepared& data) {
  const CvPlot plot = cv_plot(data.sample, config.ns, config.xi, config.level, config.inclusive);
  Output o;
  Json points = Json::array();
  std::ostringstream csv;
  csv << "k,threshold,n_exceed,cv,band_low,band_high\n";
  for (const CvPoint& p : plot.points) {
    Json pj;
    pj["k"] = p.k;
    pj["threshold"] = p.threshold;
    pj["n_exceed"] = p.n_exceed;
    pj["cv"] = p.cv;
    pj["band_low"] = p.band ? Json(p.band->low) : Json(nullptr);
    pj["band_high"] = p.band ? Json(p.band->high) : Json(nullptr);
    points.push_back(pj);
    csv << p.k << ',' << num(p.threshold) << ',' << p.n_exceed << ',' << num(p.cv) << ','
        << (p.band ? num(p.band->low) : "") << ',' << (p.band ? num(p.band->high) : "")
        << '\n';
  }
  o.result["reference_xi"] = opt(plot.reference_xi);
  o.result["reference_cv"] = opt(plot.reference_cv);
  o.result["level"] = plot.level;
  o.result["points"] = points;
  o.csv = csv.str();
  if (config.format == Format::kSvg) {
    std::ostringstream svg;
    emit_svg(plot, svg, config.x_axis);
    o.svg = svg.str();
  }
  return o;
}

Output do_meplot(const RunConfig& config, const Prepared& data) {
  const auto points = mean_excess_plot(data.sample, config.ns, config.inclusive);
  Output o;
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "k,threshold,n_exceed,mean_excess\n";
  SvgSeries s;
  for (const MeanExcessPoint& p : points) {
    Json pj;
    pj["k"] = p.k;
    pj["threshold"] = p.threshold;
    pj["n_exceed"] = p.n_exceed;
    pj["mean_excess"] = p.mean_excess;
    arr.push_back(pj);
    csv << p.k << ',' << num(p.threshold) << ',' << p.n_exceed << ','
        << num(p.mean_excess) << '\n';
    s.x.push_back(config.x_axis == XAxis::kRemoved ? static_cast<double>(p.k - 1)
                                                   : p.threshold);
    s.y.push_back(p.mean_excess);
  }
  o.result["points"] = arr;
  o.csv = csv.str();
  if (config.format == Format::kSvg) {
    s.x_label = config.x_axis == XAxis::kRemoved ? "observations removed k (count)"
                                                 : "threshold t (data units)";
    s.y_label = "mean excess (data units)";
    s.title = "Mean excess plot";
    std::ostringstream svg;
    render_svg(s, svg);
    o.svg = svg.str();
  }
  return o;
}

Output do_fit(const Prepared& data) {
  const FitResult fit = gpd_mle_fit(data.sample);
  Output o;
  o.result["n"] = data.sample.size();
  o.result["xi"] = fit.params.xi();
  o.result["psi"] = fit.params.psi();
  o.result["se_xi"] = fit.std_errors ? Json(fit.std_errors->xi) : Json(nullptr);
  o.result["se_psi"] = fit.std_errors ? Json(fit.std_errors->psi) : Json(nullptr);
  o.result["log_likelihood"] = fit.log_likelihood;
  o.result["converged"] = fit.converged;
  std::ostringstream csv;
  csv << "n,xi,psi,se_xi,se_psi,log_likelihood,converged\n"
      << data.sample.size() << ',' << num(fit.params.xi()) << ',' << num(fit.params.psi())
      << ',' << (fit.std_errors ? num(fit.std_errors->xi) : "") << ','
      << (fit.std_errors ? num(fit.std_errors->psi) : "") << ','
      << num(fit.log_likelihood) << ',' << (fit.converged ? "true" : "false") << '\n';
  o.csv = csv.str();
  return o;
}

Output do_test(const RunConfig& config, const Prepared& data) {
  const ThresholdGrid grid = build_grid(data.sample, config.m, config.ns, config.quantile_method);
  TmOutcome tm = tm_statistic(data.sample, grid, 0, config.xi, config.inclusive);
  const NullMode mode = config.xi ? NullMode::kSimple : NullMode::kComposite;
  SimulationOptions sim;
  sim.method = config.quantile_method;
  sim.inclusive = config.inclusive;
  sim.workers = config.workers;
  tm.p_value = simulate_p_value(tm.tm, data.sample.size(), grid.m, grid.p,
                                config.xi ? *config.xi : tm.xi_tilde, mode,
                                config.replicates, config.seed, sim);
  tm.replicates = config.replicates;
  tm.seed = config.seed;

  Output o;
  o.result["mode"] = config.xi ? "simple" : "composite";
  o.result["n"] = tm.n;
  o.result["m"] = grid.m;
  o.result["p"] = grid.p;
  o.result["ns"] = grid.ns;
  o.result["xi"] = opt(config.xi);
  o.result["cv_tilde"] = tm.cv_tilde;
  o.result["xi_tilde"] = tm.xi_tilde;
  o.result["reference_cv"] = tm.reference_cv;
  o.result["tm"] = tm.tm;
  o.result["p_value"] = *tm.p_value;
  o.result["replicates"] = tm.replicates;
  o.result["seed"] = tm.seed;
  Json thr = Json::array();
  for (std::size_t k = 0; k <= grid.m; ++k) {
    Json tj;
    tj["k"] = k;
    tj["prob"] = grid.probs[k];
    tj["threshold"] = grid.quantiles[k] + grid.shift;
    tj["weight"] = grid.weights[k];
    tj["cv"] = tm.per_threshold_cv[k];
    thr.push_back(tj);
  }
  o.result["thresholds"] = thr;
  std::ostringstream csv;
  csv << "mode,n,m,p,cv_tilde,xi_tilde,reference_cv,tm,p_value,replicates,seed\n"
      << (config.xi ? "simple" : "composite") << ',' << tm.n << ',' << grid.m << ','
      << num(grid.p) << ',' << num(tm.cv_tilde) << ',' << num(tm.xi_tilde) << ','
      << num(tm.reference_cv) << ',' << num(tm.tm) << ',' << num(*tm.p_value) << ','
      << tm.replicates << ',' << tm.seed << '\n';
  o.csv = csv.str();
  return o;
}

Output do_select(const RunConfig& config, const Prepared& data) {
  SelectOptions opts;
  opts.m = config.m;
  opts.ns = config.ns;
  opts.alpha = config.alpha;
  opts.replicates = config.replicates;
  opts.seed = config.seed;
  opts.known_xi = config.xi;
  opts.method = config.quantile_method;
  opts.inclusive = config.inclusive;
  opts.all_stages = config.all_stages;
  opts.workers = config.workers;
  const SelectionResult sel = threshold_select(data.sample, opts);

  Output o;
  o.result["mode"] = config.xi ? "simple" : "composite";
  o.result["n"] = data.sample.size();
  o.result["m"] = sel.grid.m;
  o.result["p"] = sel.grid.p;
  o.result["ns"] = sel.grid.ns;
  o.result["alpha"] = config.alpha;
  o.result["selected_stage"] = opt(sel.selected_stage);
  o.result["selected_step"] =
      sel.selected_stage ? Json(*sel.selected_stage + 1) : Json(nullptr);
  o.result["final_xi"] = opt(sel.final_xi);
  o.result["selected_threshold"] =
      sel.selected_stage ? Json(sel.steps[*sel.selected_stage].threshold) : Json(nullptr);
  Json steps = Json::array();
  std::ostringstream csv;
  csv << "stage,step,threshold,n_exceed,thresholds,cv_tilde,xi_tilde,reference_cv,tm,p_value,"
         "rejected,selected\n";
  for (const SelectionStep& s : sel.steps) {
    const bool selected = sel.selected_stage && *sel.selected_stage == s.stage;
    Json sj;
    sj["stage"] = s.stage;
    sj["step"] = s.stage + 1;
    sj["threshold"] = s.threshold;
    sj["n_exceed"] = s.n_exceed;
    sj["thresholds"] = s.thresholds;
    sj["cv_tilde"] = s.cv_tilde;
    sj["xi_tilde"] = s.xi_tilde;
    sj["reference_cv"] = s.reference_cv;
    sj["tm"] = s.tm;
    sj["p_value"] = s.p_value;
    sj["rejected"] = s.rejected;
    steps.push_back(sj);
    csv << s.stage << ',' << s.stage + 1 << ',' << num(s.threshold) << ',' << s.n_exceed << ',' << s.thresholds
        << ',' << num(s.cv_tilde) << ',' << num(s.xi_tilde) << ',' << num(s.reference_cv)
        << ',' << num(s.tm) << ',' << num(s.p_value) << ',' << (s.rejected ? "true" : "false")
        << ',' << (selected ? "true" : "false") << '\n';
  }
  o.result["steps"] = steps;
  o.csv = csv.str();
  return o;
}

Output values_output(const std::vector<double>& values) {
  Output o;
  o.result["values"] = values;
  std::ostringstream csv;
  csv << "value\n";
  for (double v : values) csv << num(v) << '\n';
  o.csv = csv.str();
  return o;
}

Output do_simulate(const RunConfig& config) {
  if (config.n == 0) throw Error(ErrorCode::kInvalidInput, "--n must be positive");
  const GpdParams params(config.xi.value_or(0.0), config.psi);
  RandomStream rng(config.seed);
  std::vector<double> u(config.n);
  for (double& v : u) v = rng.uniform();
  Output o = values_output(gpd_from_uniforms(params, u));
  Json r;
  r["xi"] = params.xi();
  r["psi"] = params.psi();
  r["n"] = config.n;
  r["seed"] = config.seed;
  r["values"] = std::move(o.result["values"]);
  o.result = std::move(r);
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write output file '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace

SampleData prepare(const SampleData& raw, const RunConfig& config) {
  return prepare_sample(raw, config).sample;
}

void execute(const RunConfig& config, std::ostream& out) {
  const bool plot = config.command == Command::kCvPlot || config.command == Command::kMePlot;
  if (config.format == Format::kSvg && !plot) {
    throw Error(ErrorCode::kParse, "--format svg is only available for cvplot and meplot");
  }
  if (config.command != Command::kSimulate && config.input_path.empty()) {
    throw Error(ErrorCode::kParse, to_string(config.command) + " needs --input");
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  std::optional<Prepared> data;
  if (config.command != Command::kSimulate) data = prepare_sample(ingest(config.input_path, config.column), config);
  switch (config.command) {
    case Command::kCvPlot: o = do_cvplot(config, *data); break;
    case Command::kMePlot: o = do_meplot(config, *data); break;
    case Command::kFit: o = do_fit(*data); break;
    case Command::kTest: o = do_test(config, *data); break;
    case Command::kSelect: o = do_select(config, *data); break;
    case Command::kTransform: {
      const auto v = data->sample.values();
      o = values_output(std::vector<double>(v.begin(), v.end()));
      break;
    }
    case Command::kSimulate: o = do_simulate(config); break;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (config.format == Format::kCsv) {
    text = o.csv;
  } else if (config.format == Format::kSvg) {
    text = o.svg;
  } else {
    Json report;
    report["tool"] = "evtail";
    report["version"] = std::string(library_version());
    report["command"] = to_string(config.command);
    report["config"] = config_json(config);
    report["data"] = data ? data_json(*data, config) : Json(nullptr);
    report["result"] = std::move(o.result);
    report["duration_seconds"] = seconds;
    std::ostringstream s;
    write_json(report, s);
    text = s.str();
  }
  if (config.output_path) {
    write_file(*config.output_path, text);
  } else {
    out << text;
    out.flush();
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    execute(config, out);
    return 0;
  } catch (const Error& e) {
    err << "evtail: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.is_domain_error() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "evtail: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace evtail::cli
