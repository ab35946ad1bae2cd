#include "ratelab/math.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace ratelab {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " +
                      std::to_string(value));
  }
}

namespace detail {

double xlog2x(double x) noexcept {
  assert(x >= 0.0);
  if (x == 0.0) return 0.0;
  return x * std::log2(x);
}

double bessel_i0m1(double x) {
  assert(x >= 0.0);
  const double q = 0.25 * x * x;
  if (q == 0.0) return 0.0;
  // sum_{k>=1} q^k / (k!)^2, Kahan-compensated; all terms are positive.
  double term = q;
  double sum = q;
  double comp = 0.0;
  for (int k = 2; k <= 400; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (term < sum * 1e-18 && static_cast<double>(k) > x) break;
  }
  return sum;
}

}  // namespace detail

double binary_entropy(Probability p) noexcept {
  const double v = p.value();
  return -(detail::xlog2x(v) + detail::xlog2x(1.0 - v));
}

double h_function(double x) {
  if (!(x >= 1.0)) {
    throw DomainError("h_function is defined for x >= 1, got " +
                      std::to_string(x));
  }
  const double u = 0.5 * (x + 1.0);
  const double v = 0.5 * (x - 1.0);
  return detail::xlog2x(u) - detail::xlog2x(v);
}

double bessel_i0(double x) {
  if (!(std::isfinite(x)) || x < 0.0) {
    throw DomainError("bessel_i0 requires finite x >= 0, got " +
                      std::to_string(x));
  }
  return 1.0 + detail::bessel_i0m1(x);
}

}  // namespace ratelab
