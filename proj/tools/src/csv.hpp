#pragma once

#include <iosfwd>
#include <string>

#include "ratelab/sweep.hpp"

namespace ratelab::cli {

inline constexpr const char* kRateCsvHeader =
    "abscissa,total_loss_db,eta_a,eta_b,rate_signed,rate_clamped,mu_a,mu_b,"
    "status";

/// Locale-independent rendering with 12 significant digits.
std::string format_sig12(double v);

/// Serializes a series under the header above, one row per grid point,
/// LF line endings. Intensity columns are left empty for non-DV models;
/// invalid rows carry nan rates and status "invalid".
void write_rate_series_csv(std::ostream& os, const RateSeries& series);

}  // namespace ratelab::cli
