#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace ratelab::cli {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 840.0;
constexpr double kTop = 44.0;
constexpr double kBottom = 508.0;
constexpr double kLogMin = -8.0;  // 1e-8 bits per use
constexpr double kLogMax = 1.0;   // 10 bits per use

constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#d62728",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#17becf", "#7f7f7f"};

std::string fixed2(double v) {
  char buf[32];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string general6(double v) {
  char buf[32];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_rate_svg(std::ostream& os, const std::string& title,
                    const std::string& x_label,
                    const std::vector<SvgSeries>& series) {
  double x_min = 0.0;
  double x_max = 1.0;
  bool first = true;
  for (const SvgSeries& s : series) {
    if (!s.series || s.series->rows.empty()) continue;
    const double lo = s.series->rows.front().abscissa;
    const double hi = s.series->rows.back().abscissa;
    x_min = first ? lo : std::min(x_min, lo);
    x_max = first ? hi : std::max(x_max, hi);
    first = false;
  }
  if (x_max <= x_min) x_max = x_min + 1.0;

  auto px = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  auto py = [&](double rate) {
    const double l =
        std::clamp(std::log10(rate), kLogMin, kLogMax);
    return kBottom - (l - kLogMin) / (kLogMax - kLogMin) * (kBottom - kTop);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << fixed2(0.5 * (kLeft + kRight))
     << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">"
     << title << "</text>\n";

  // Decade gridlines and rate-axis labels.
  for (int dec = static_cast<int>(kLogMin); dec <= static_cast<int>(kLogMax);
       ++dec) {
    const double y = py(std::pow(10.0, dec));
    os << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(y)
       << "\" x2=\"" << fixed2(kRight) << "\" y2=\"" << fixed2(y)
       << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fixed2(kLeft - 8.0) << "\" y=\"" << fixed2(y + 4.0)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"11\">1e"
       << dec << "</text>\n";
  }
  // Horizontal-axis ticks.
  constexpr int kTicks = 6;
  for (int i = 0; i <= kTicks; ++i) {
    const double x = x_min + (x_max - x_min) * i / kTicks;
    os << "<line x1=\"" << fixed2(px(x)) << "\" y1=\"" << fixed2(kBottom)
       << "\" x2=\"" << fixed2(px(x)) << "\" y2=\"" << fixed2(kBottom + 5.0)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fixed2(px(x)) << "\" y=\"" << fixed2(kBottom + 18.0)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << general6(x) << "</text>\n";
  }
  os << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop)
     << "\" width=\"" << fixed2(kRight - kLeft) << "\" height=\""
     << fixed2(kBottom - kTop)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<text x=\"" << fixed2(0.5 * (kLeft + kRight)) << "\" y=\""
     << fixed2(kHeight - 12.0)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"13\">"
     << x_label << "</text>\n";
  os << "<text x=\"20\" y=\"" << fixed2(0.5 * (kTop + kBottom))
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"13\" transform=\"rotate(-90 20 "
     << fixed2(0.5 * (kTop + kBottom))
     << ")\">secret key rate (bits per use)</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const SvgSeries& s = series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];
    if (s.series) {
      std::string points;
      auto flush = [&] {
        if (!points.empty()) {
          os << "<polyline fill=\"none\" stroke=\"" << color
             << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
          points.clear();
        }
      };
      for (const RateRow& row : s.series->rows) {
        if (row.status != RowStatus::Ok || !(row.rate_clamped > 0.0)) {
          flush();
          continue;
        }
        if (!points.empty()) points += ' ';
        points += fixed2(px(row.abscissa)) + ',' + fixed2(py(row.rate_clamped));
      }
      flush();
    }
    const double ly = kTop + 16.0 + 18.0 * static_cast<double>(si);
    os << "<line x1=\"" << fixed2(kRight - 150.0) << "\" y1=\""
       << fixed2(ly - 4.0) << "\" x2=\"" << fixed2(kRight - 120.0)
       << "\" y2=\"" << fixed2(ly - 4.0) << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << fixed2(kRight - 112.0) << "\" y=\"" << fixed2(ly)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
       << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace ratelab::cli
