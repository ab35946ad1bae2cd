#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "csv.hpp"
#include "svg.hpp"

using namespace ratelab;
using namespace ratelab::cli;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

TEST_CASE("format_sig12 is plain and locale independent") {
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(2.571214602654602) == "2.57121460265");
  // 12 significant digits round-trip through the text form
  const double v = 0.019595499504;
  CHECK(std::strtod(format_sig12(v).c_str(), nullptr) ==
        doctest::Approx(v).epsilon(1e-12));
  CHECK(format_sig12(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("csv round trip reproduces the series at 12 digits") {
  SweepSpec spec;
  spec.model = SweepModel::Dv;
  spec.start = 0.0;
  spec.stop = 4.0;
  spec.points = 3;
  spec.optimizer.grid_points = 10;
  const RateSeries series = run_sweep(spec);

  std::ostringstream os;
  write_rate_series_csv(os, series);
  const std::vector<std::string> lines = split(os.str(), '\n');
  REQUIRE(lines.size() == 4);  // header + 3 rows
  CHECK(lines[0] == kRateCsvHeader);

  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    const std::vector<std::string> cells = split(lines[i + 1], ',');
    REQUIRE(cells.size() == 9);
    const RateRow& row = series.rows[i];
    CHECK(cells[0] == format_sig12(row.abscissa));
    CHECK(std::strtod(cells[4].c_str(), nullptr) ==
          doctest::Approx(row.rate_signed).epsilon(1e-12));
    REQUIRE(row.mu.has_value());
    CHECK(std::strtod(cells[6].c_str(), nullptr) ==
          doctest::Approx(row.mu->mu_a).epsilon(1e-12));
    CHECK(cells[8] == "ok");
  }
}

TEST_CASE("csv leaves intensity cells empty for non-dv models") {
  SweepSpec spec;
  spec.model = SweepModel::Cv;
  spec.start = 0.0;
  spec.stop = 2.0;
  spec.points = 2;
  std::ostringstream os;
  write_rate_series_csv(os, run_sweep(spec));
  const std::vector<std::string> lines = split(os.str(), '\n');
  const std::vector<std::string> cells = split(lines[1] + ",end", ',');
  CHECK(cells[6].empty());
  CHECK(cells[7].empty());
}

TEST_CASE("csv marks model-domain failures invalid") {
  SweepSpec spec;
  spec.model = SweepModel::Cv;
  spec.scenario = Scenario::AsymmetricRelayAtAlice;
  spec.start = 0.0;
  spec.stop = 2.0;
  spec.points = 3;
  spec.cv = CvDeviceParams{1.0, 0.0, 60.0, 0.97};  // singular at zero loss
  std::ostringstream os;
  write_rate_series_csv(os, run_sweep(spec));
  const std::vector<std::string> lines = split(os.str(), '\n');
  const std::vector<std::string> cells = split(lines[1], ',');
  CHECK(cells[4] == "nan");
  CHECK(cells[8] == "invalid");
}

TEST_CASE("svg omits clamped-zero points") {
  SweepSpec spec;
  spec.model = SweepModel::Cv;
  spec.start = 0.0;
  spec.stop = 3.0;
  spec.points = 7;  // rate turns negative past ~1.2 dB
  const RateSeries series = run_sweep(spec);
  int positive = 0;
  for (const RateRow& r : series.rows) {
    if (r.rate_clamped > 0.0) ++positive;
  }
  REQUIRE(positive < 7);

  std::ostringstream os;
  write_rate_svg(os, "t", "total loss (dB)", {{"cv", &series}});
  const std::string svg = os.str();
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  const auto points_pos = svg.find("points=\"");
  REQUIRE(points_pos != std::string::npos);
  const auto points_end = svg.find('"', points_pos + 8);
  const std::string pts = svg.substr(points_pos + 8, points_end - points_pos - 8);
  CHECK(static_cast<int>(split(pts, ' ').size()) == positive);
}

TEST_CASE("figure selection expansion") {
  CHECK(expand_figures("all") ==
        std::vector<std::string>{"1a", "1b", "1c", "1d", "2a", "2b"});
  CHECK(expand_figures("1a..1d,2a,2b") ==
        std::vector<std::string>{"1a", "1b", "1c", "1d", "2a", "2b"});
  CHECK(expand_figures("2b") == std::vector<std::string>{"2b"});
  CHECK_THROWS_AS(expand_figures("3a"), DomainError);
  CHECK_THROWS_AS(expand_figures("2b..1a"), DomainError);
  CHECK_THROWS_AS(expand_figures(""), DomainError);
}
