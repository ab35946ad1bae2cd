#include "csv.hpp"

#include <charconv>
#include <ostream>

namespace ratelab::cli {

std::string format_sig12(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_rate_series_csv(std::ostream& os, const RateSeries& series) {
  os << kRateCsvHeader << '\n';
  for (const RateRow& row : series.rows) {
    os << format_sig12(row.abscissa) << ',' << format_sig12(row.total_loss_db)
       << ',' << format_sig12(row.eta_a) << ',' << format_sig12(row.eta_b)
       << ',' << format_sig12(row.rate_signed) << ','
       << format_sig12(row.rate_clamped) << ',';
    if (row.mu) os << format_sig12(row.mu->mu_a);
    os << ',';
    if (row.mu) os << format_sig12(row.mu->mu_b);
    os << ',' << (row.status == RowStatus::Ok ? "ok" : "invalid") << '\n';
  }
}

}  // namespace ratelab::cli
