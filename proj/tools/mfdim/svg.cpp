#include "svg.hpp"

#include <cmath>

#include "format.hpp"

namespace mfdim::cli {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;
constexpr int kTicks = 5;

std::string num(double v) { return format_double(std::round(v * 100.0) / 100.0); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const double xr = spec.x_max > spec.x_min ? spec.x_max - spec.x_min : 1.0;
  const double yr = spec.y_max > spec.y_min ? spec.y_max - spec.y_min : 1.0;
  auto px = [&](double x) { return kLeft + (x - spec.x_min) / xr * pw; };
  auto py = [&](double y) { return kTop + ph - (y - spec.y_min) / yr * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       escape(spec.title) + "</text>\n";
  s += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = spec.x_min + xr * i / kTicks, yv = spec.y_min + yr * i / kTicks;
    s += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + ph + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(xv) +
         "</text>\n";
    s += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(yv) + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(yv) +
         "</text>\n";
  }
  s += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 16) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape(spec.x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
       num(kTop + ph / 2) + ")\">" + escape(spec.y_label) + "</text>\n";

  for (const auto& series : spec.series) {
    if (series.connect) {
      s += "<polyline fill=\"none\" stroke=\"" + series.color + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < series.points.size(); ++i) {
        if (i) s += ' ';
        s += num(px(series.points[i].first)) + "," + num(py(series.points[i].second));
      }
      s += "\"/>\n";
    } else {
      for (const auto& [x, y] : series.points) {
        s += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" + series.color + "\"/>\n";
      }
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace mfdim::cli
