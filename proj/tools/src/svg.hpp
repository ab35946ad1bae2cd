#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ratelab/sweep.hpp"

namespace ratelab::cli {

struct SvgSeries {
  std::string label;
  const RateSeries* series = nullptr;
};

/// Self-contained SVG line plot with a log rate axis spanning
/// [1e-8, 10] bits per use. Clamped-zero and invalid points are omitted;
/// gaps split a curve into separate segments.
void write_rate_svg(std::ostream& os, const std::string& title,
                    const std::string& x_label,
                    const std::vector<SvgSeries>& series);

}  // namespace ratelab::cli
