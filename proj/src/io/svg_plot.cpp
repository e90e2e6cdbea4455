#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "swm/error.hpp"
#include "swm/io.hpp"

namespace swm::io {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;
constexpr int kTicks = 5;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi > lo) return {lo, hi};
  const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
  return {lo - pad, hi + pad};
}

}  // namespace

PlotSeries spectrum_plot(const Spectrum1D& spectrum) {
  PlotSeries series;
  series.style = PlotSeries::Style::kStem;
  series.title = "Square wave transform (n = " + std::to_string(spectrum.order) + ")";
  series.x_label = "frequency (1/s)";
  series.y_label = "coefficient";
  series.points.reserve(spectrum.size());
  for (const Dyad& d : spectrum.dyads) series.points.emplace_back(d.frequency, d.coefficient);
  return series;
}

std::string render_svg(const PlotSeries& series) {
  if (series.points.empty()) throw InvalidArgument("plot series has no points");
  double xmin = series.points.front().first, xmax = xmin;
  double ymin = 0.0, ymax = 0.0;
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    const auto [x, y] = series.points[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw InvalidArgument("plot point " + std::to_string(i + 1) + " is not finite");
    }
    if (i > 0 && x < series.points[i - 1].first) {
      throw InvalidArgument("plot points must be ordered by x");
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (series.style == PlotSeries::Style::kLine) {
    ymin = series.points.front().second, ymax = ymin;
    for (const auto& [x, y] : series.points) ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  const Range xr = padded(xmin, xmax);
  const Range yr = padded(ymin, ymax);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(series.title) + "</text>\n";

  // Frame and ticks.
  out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\"/>\n";
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * t / kTicks;
    out += "<text x=\"" + num(sx(fx)) + "\" y=\"" + num(kTop + plot_h + 16) +
           "\" text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
    out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(sy(fy) + 4) +
           "\" text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(series.x_label) + "</text>\n";
  out += "<text transform=\"translate(18 " + num(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" + escape(series.y_label) +
         "</text>\n</g>\n";

  if (yr.lo < 0.0 && yr.hi > 0.0) {
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(kLeft + plot_w) +
           "\" y2=\"" + num(sy(0)) + "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  }

  if (series.style == PlotSeries::Style::kStem) {
    out += "<g stroke-width=\"1\">\n";
    for (const auto& [x, y] : series.points) {
      const char* colour = y < 0.0 ? "#d62728" : "#1f3fbf";
      out += "<line class=\"stem\" x1=\"" + num(sx(x)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
             num(sx(x)) + "\" y2=\"" + num(sy(y)) + "\" stroke=\"" + colour + "\"/>\n";
    }
    out += "</g>\n";
  } else {
    out += "<polyline class=\"line\" fill=\"none\" stroke=\"#1f3fbf\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < series.points.size(); ++i) {
      if (i) out += ' ';
      out += num(sx(series.points[i].first)) + "," + num(sy(series.points[i].second));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void emit_plot(const PlotSeries& series, const std::filesystem::path& path) {
  write_file(path, render_svg(series));
}

}  // namespace swm::io
