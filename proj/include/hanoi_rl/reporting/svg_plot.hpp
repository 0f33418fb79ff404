#pragma once

// Static line charts in SVG. Log axes for the learning curves, linear for the
// ask-for-help figure.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanoi_rl::reporting {

enum class AxisMode { LogLog, Linear };

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool horizontal = false;  // baseline drawn across the full x range at y[0]
};

struct PlotSpec {
  std::string title;
  std::string x_label = "training episodes";
  std::string y_label = "mean moves to solve";
  AxisMode axes = AxisMode::LogLog;
  std::vector<PlotSeries> series;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#17becf", "#bcbd22",
                                                        "#2ca02c", "#9467bd", "#ff7f0e", "#7f7f7f"};

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v, double px_lo, double px_hi) const {
    double a = log ? std::log10(v) : v;
    double b = log ? std::log10(lo) : lo;
    double c = log ? std::log10(hi) : hi;
    double t = c > b ? (a - b) / (c - b) : 0.5;
    return px_lo + t * (px_hi - px_lo);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double p = std::floor(std::log10(lo)); p <= std::ceil(std::log10(hi)); p += 1.0) {
        double v = std::pow(10.0, p);
        if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) out.push_back(v);
      }
    } else {
      double span = hi - lo;
      double step = std::pow(10.0, std::floor(std::log10(span)));
      if (span / step < 4) step /= 2;
      for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9; v += step) out.push_back(v);
    }
    return out;
  }
};

inline Axis make_axis(double lo, double hi, bool log) {
  Axis a{lo, hi, log};
  if (log) {
    a.lo = std::pow(10.0, std::floor(std::log10(lo)));
    a.hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (a.hi <= a.lo) a.hi = a.lo * 10.0;
  } else {
    a.lo = std::min(0.0, lo);
    a.hi = hi > a.lo ? hi * 1.05 : a.lo + 1.0;
  }
  return a;
}

}  // namespace detail

inline std::string render_plot(const PlotSpec& spec) {
  if (spec.series.empty()) throw std::domain_error("plot has no series");
  const bool log = spec.axes == AxisMode::LogLog;

  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
  for (const auto& s : spec.series) {
    if (s.y.empty() || (!s.horizontal && s.x.size() != s.y.size()))
      throw std::domain_error("series '" + s.name + "' is empty or has mismatched coordinates");
    for (double v : s.y) {
      if (log && !(v > 0.0)) throw std::domain_error("non-positive y in log-axis series '" + s.name + "'");
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
    if (s.horizontal) continue;
    for (double v : s.x) {
      if (log && !(v > 0.0)) throw std::domain_error("non-positive x in log-axis series '" + s.name + "'");
      xlo = std::min(xlo, v);
      xhi = std::max(xhi, v);
    }
  }
  if (!std::isfinite(xlo)) {
    xlo = 1.0;
    xhi = 10.0;
  }
  const detail::Axis xa = detail::make_axis(xlo, xhi, log);
  const detail::Axis ya = detail::make_axis(ylo, yhi, log);

  constexpr double W = 720, H = 480, L = 70, R = 200, T = 40, B = 60;
  const double px0 = L, px1 = W - R, py0 = H - B, py1 = T;
  using detail::num;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num((px0 + px1) / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         detail::escape(spec.title) + "</text>\n";
  svg += "<rect x=\"" + num(px0) + "\" y=\"" + num(py1) + "\" width=\"" + num(px1 - px0) + "\" height=\"" +
         num(py0 - py1) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double v : xa.ticks()) {
    double px = xa.map(v, px0, px1);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(px) + "\" y2=\"" + num(py1) +
           "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(py0 + 16) + "\" text-anchor=\"middle\">" + detail::label(v) + "</text>\n";
  }
  for (double v : ya.ticks()) {
    double py = ya.map(v, py0, py1);
    svg += "<line x1=\"" + num(px0) + "\" y1=\"" + num(py) + "\" x2=\"" + num(px1) + "\" y2=\"" + num(py) +
           "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + num(px0 - 6) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + detail::label(v) + "</text>\n";
  }
  svg += "<text x=\"" + num((px0 + px1) / 2) + "\" y=\"" + num(H - 15) + "\" text-anchor=\"middle\">" +
         detail::escape(spec.x_label) + (log ? " (log)" : "") + "</text>\n";
  svg += "<text transform=\"translate(18," + num((py0 + py1) / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
         detail::escape(spec.y_label) + (log ? " (log)" : "") + "</text>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = detail::kPalette[i % detail::kPalette.size()];
    std::string points;
    if (s.horizontal) {
      double py = ya.map(s.y.front(), py0, py1);
      points = num(px0) + "," + num(py) + " " + num(px1) + "," + num(py);
    } else {
      for (std::size_t k = 0; k < s.x.size(); ++k) {
        if (k) points += ' ';
        points += num(xa.map(s.x[k], px0, px1)) + "," + num(ya.map(s.y[k], py0, py1));
      }
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"" +
           (s.horizontal ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + points + "\"/>\n";
    double ly = py1 + 16 + 18 * static_cast<double>(i);
    svg += "<line x1=\"" + num(px1 + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" + num(px1 + 36) + "\" y2=\"" +
           num(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(px1 + 42) + "\" y=\"" + num(ly) + "\">" + detail::escape(s.name) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hanoi_rl::reporting
