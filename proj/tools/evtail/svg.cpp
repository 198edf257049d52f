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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include "cli.hpp"
#include "evtail/error.hpp"

namespace evtail::cli {
namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= d;
      hi += d;
    }
    const double d = (hi - lo) * 0.05;
    lo -= d;
    hi += d;
  }
};

double tick_step(const Range& r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

void polyline(std::ostream& out, const std::vector<double>& x,
              const std::vector<double>& y, auto px, auto py,
              const std::string& style) {
  out << "  <polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(y[i])) continue;
    out << fmt(px(x[i])) << ',' << fmt(py(y[i])) << ' ';
  }
  out << "\"/>\n";
}

}  // namespace

void render_svg(const SvgSeries& s, std::ostream& out) {
  if (s.x.empty() || s.x.size() != s.y.size()) {
    throw Error(ErrorCode::kInvalidInput, "plot has no points");
  }
  Range xr, yr;
  for (double v : s.x) xr.add(v);
  for (double v : s.y) yr.add(v);
  for (double v : s.band_low) yr.add(v);
  for (double v : s.band_high) yr.add(v);
  if (s.reference) yr.add(*s.reference);
  xr.pad();
  yr.pad();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double v) { return kTop + (yr.hi - v) / (yr.hi - yr.lo) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "  <title>" << escape(s.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "  <text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << escape(s.title) << "</text>\n";

  // Axes and ticks.
  out << "  <g stroke=\"black\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\""
      << fmt(kLeft + pw) << "\" y2=\"" << fmt(kTop + ph) << "\"/>\n"
      << "    <line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
      << fmt(kLeft) << "\" y2=\"" << fmt(kTop + ph) << "\"/>\n"
      << "  </g>\n";
  const double xs = tick_step(xr);
  for (double v = std::ceil(xr.lo / xs) * xs; v <= xr.hi; v += xs) {
    out << "  <line stroke=\"black\" x1=\"" << fmt(px(v)) << "\" y1=\"" << fmt(kTop + ph)
        << "\" x2=\"" << fmt(px(v)) << "\" y2=\"" << fmt(kTop + ph + 5) << "\"/>\n"
        << "  <text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(kTop + ph + 18)
        << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
  }
  const double ys = tick_step(yr);
  for (double v = std::ceil(yr.lo / ys) * ys; v <= yr.hi; v += ys) {
    out << "  <line stroke=\"black\" x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(v))
        << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py(v)) << "\"/>\n"
        << "  <text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(v) + 4)
        << "\" text-anchor=\"end\">" << tick_label(v) << "</text>\n";
  }
  out << "  <text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(s.x_label) << "</text>\n";
  out << "  <text x=\"20\" y=\"" << fmt(kTop + ph / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << fmt(kTop + ph / 2)
      << ")\">" << escape(s.y_label) << "</text>\n";

  if (s.reference) {
    out << "  <line class=\"reference\" stroke=\"black\" stroke-dasharray=\"8,5\" x1=\""
        << fmt(kLeft) << "\" y1=\"" << fmt(py(*s.reference)) << "\" x2=\""
        << fmt(kLeft + pw) << "\" y2=\"" << fmt(py(*s.reference)) << "\"/>\n";
  }
  if (!s.band_low.empty()) {
    polyline(out, s.x, s.band_low, px, py,
             "class=\"band\" stroke=\"black\" stroke-dasharray=\"1,3\"");
    polyline(out, s.x, s.band_high, px, py,
             "class=\"band\" stroke=\"black\" stroke-dasharray=\"1,3\"");
  }
  polyline(out, s.x, s.y, px, py, "class=\"estimate\" stroke=\"black\" stroke-width=\"1.5\"");
  out << "</svg>\n";
}

void emit_svg(const CvPlot& plot, std::ostream& out, XAxis x_axis) {
  SvgSeries s;
  for (const CvPoint& p : plot.points) {
    s.x.push_back(x_axis == XAxis::kRemoved ? static_cast<double>(p.k - 1) : p.threshold);
    s.y.push_back(p.cv);
    if (p.band) {
      s.band_low.push_back(p.band->low);
      s.band_high.push_back(p.band->high);
    }
  }
  if (s.band_low.size() != s.x.size()) {
    s.band_low.clear();
    s.band_high.clear();
  }
  s.reference = plot.reference_cv;
  s.x_label = x_axis == XAxis::kRemoved ? "observations removed k (count)"
                                        : "threshold t (data units)";
  s.y_label = "residual CV (sd/mean, dimensionless)";
  s.title = "CV plot";
  if (plot.reference_xi) {
    char buf[96];
    if (s.band_low.empty()) {
      std::snprintf(buf, sizeof buf, "CV plot, reference xi = %.4g", *plot.reference_xi);
    } else {
      std::snprintf(buf, sizeof buf, "CV plot, reference xi = %.4g, %.0f%% bands",
                    *plot.reference_xi, plot.level * 100.0);
    }
    s.title = buf;
  }
  render_svg(s, out);
}

void emit_svg(const CvPlot& plot, const std::string& path, XAxis x_axis) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  emit_svg(plot, out, x_axis);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace evtail::cli
