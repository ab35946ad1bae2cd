#include "ratelab/dv_model.hpp"

#include <cmath>
#include <string>

namespace ratelab {

namespace {

// <(c + r*cos t)^K> averaged over the angle t:
//   sum over even j of C(K,j) * C(j,j/2) * (r/2)^j * c^(K-j).
// All terms are nonnegative. Requires r <= c (guaranteed: r is a geometric
// and c an arithmetic mean of the same two arm intensities).
double angular_moment(int k, double center, double radius) {
  if (center == 0.0) return k == 0 ? 1.0 : 0.0;
  const double q = 0.5 * radius / center;
  const double q2 = q * q;  // <= 1/4
  double term = std::pow(center, k);
  double sum = term;
  for (int j = 0; j + 2 <= k; j += 2) {
    const double m = static_cast<double>(j / 2 + 1);
    term *= static_cast<double>(k - j) * static_cast<double>(k - j - 1) * q2 /
            (m * m);
    sum += term;
  }
  return sum;
}

// <expm1(d*s) * expm1((1-d)*s)> with s = c + r*cos t, expanded in angular
// moments:  sum_{K>=2} (1 - d^K - (1-d)^K) * M_K / K!.
// Every term is nonnegative, so the sum carries no cancellation.
double cross_click_series(double center, double radius, double d) {
  if (d == 0.0 || center == 0.0) return 0.0;
  const double log_1md = std::log1p(-d);
  const double reach = center + radius;
  double inv_fact = 0.5;          // 1/K!
  double d_pow = d * d;           // d^K
  double bound = 0.5 * reach * reach;  // reach^K / K!
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 2; k <= 200; ++k) {
    if (k > 2) {
      inv_fact /= static_cast<double>(k);
      d_pow *= d;
      bound *= reach / static_cast<double>(k);
    }
    const double weight = -std::expm1(k * log_1md) - d_pow;
    const double term = weight * angular_moment(k, center, radius) * inv_fact;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (static_cast<double>(k) > reach && bound < sum * 1e-17 + 1e-300) break;
  }
  return sum;
}

// I0((1-2d)*r) - I0(r) as its own series:
//   -sum_{k>=1} (r^2/4)^k / (k!)^2 * (1 - (1-2d)^(2k)).
double i0_shrink_delta(double radius, double d) {
  if (d == 0.0 || radius == 0.0) return 0.0;
  const double q = 0.25 * radius * radius;
  const double log_1m2d = std::log1p(-2.0 * d);  // -inf at d = 1/2 is fine
  double p = q;  // q^k / (k!)^2
  double sum = 0.0;
  for (int k = 1; k <= 400; ++k) {
    if (k > 1) p *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += p * -std::expm1(2.0 * k * log_1m2d);
    if (p < sum * 1e-18 && static_cast<double>(k) > radius) break;
  }
  return -sum;
}

// e^x * I0(z) - 1 without cancellation for small x, z.
double exp_i0_m1(double x, double z) {
  const double em = std::expm1(x);
  const double zm = detail::bessel_i0m1(z);
  return em + zm + em * zm;
}

// 1 - (1-y0) * e^{-x} * I0(z), stable for small x, z. Nonnegative whenever
// x >= z, which holds for both relay arms by the AM-GM inequality.
double one_minus_damped_i0(double x, double z, double y0) {
  const double em = std::expm1(-x);  // in [-1, 0]
  const double zm = detail::bessel_i0m1(z);
  return -em - zm * (1.0 + em) + y0 * (1.0 + em) * (1.0 + zm);
}

}  // namespace

void DvDeviceParams::validate() const {
  if (!(eta_d > 0.0 && eta_d <= 1.0)) {
    throw DomainError("eta_d must lie in (0, 1], got " + std::to_string(eta_d));
  }
  if (!(e_d >= 0.0 && e_d <= 0.5)) {
    throw DomainError("e_d must lie in [0, 0.5], got " + std::to_string(e_d));
  }
  if (!(y0 >= 0.0 && y0 < 1.0)) {
    throw DomainError("y0 must lie in [0, 1), got " + std::to_string(y0));
  }
  if (!(std::isfinite(f_e)) || f_e < 1.0) {
    throw DomainError("f_e must be >= 1, got " + std::to_string(f_e));
  }
}

void Intensities::validate() const {
  if (!(mu_a > 0.0 && mu_a <= 20.0)) {
    throw DomainError("mu_a must lie in (0, 20], got " + std::to_string(mu_a));
  }
  if (!(mu_b > 0.0 && mu_b <= 20.0)) {
    throw DomainError("mu_b must lie in (0, 20], got " + std::to_string(mu_b));
  }
}

double yield_11(const ChannelPair& channel, const DvDeviceParams& dev) {
  dev.validate();
  const double da = channel.eta_a() * dev.eta_d;
  const double db = channel.eta_b() * dev.eta_d;
  const double u = 1.0 - dev.y0;
  return u * u *
         (4.0 * dev.y0 * dev.y0 * (1.0 - da) * (1.0 - db) +
          2.0 * dev.y0 * (da + db - 1.5 * da * db) + 0.5 * da * db);
}

Probability error_11x(const ChannelPair& channel, const DvDeviceParams& dev) {
  const double y11 = yield_11(channel, dev);
  if (!(y11 > 0.0)) {
    throw DegenerateInputError(
        "single-photon yield is zero; the X-basis error rate is undefined");
  }
  const double da = channel.eta_a() * dev.eta_d;
  const double db = channel.eta_b() * dev.eta_d;
  const double u = 1.0 - dev.y0;
  const double align = 1.0 - dev.e_d;
  double e = 0.5 - u * u * da * db * align * align / (4.0 * y11);
  if (e < 0.0 && e > -1e-12) e = 0.0;
  if (e > 0.5 && e < 0.5 + 1e-12) e = 0.5;
  return Probability(e);
}

GainQber gain_and_qber(const ChannelPair& channel, const DvDeviceParams& dev,
                       const Intensities& mu) {
  dev.validate();
  mu.validate();

  // Mean detected photon numbers of the two arms; their arithmetic and
  // geometric means drive every term below.
  const double arm_a = mu.mu_a * channel.eta_a() * dev.eta_d;
  const double arm_b = mu.mu_b * channel.eta_b() * dev.eta_d;
  const double center = 0.5 * (arm_a + arm_b);
  const double radius = std::sqrt(arm_a * arm_b);
  const double d = dev.e_d;
  const double y0 = dev.y0;
  const double u = 1.0 - y0;
  const double damp = std::exp(-center);

  // Erroneous coincidences. The cross-click series plus the dark-count
  // singles reproduce the closed form exactly, term-for-term, but as sums
  // of same-sign quantities.
  const double cross = cross_click_series(center, radius, d);
  const double singles = exp_i0_m1(center * d, d * radius) +
                         exp_i0_m1(center * (1.0 - d), (1.0 - d) * radius);
  const double err_core = cross + y0 * singles + y0 * y0;
  double omega1 =
      2.0 * damp * u * u * (2.0 * damp * err_core + i0_shrink_delta(radius, d));

  // Correct coincidences, factored into per-arm no-click complements.
  const double mis = radius * std::sqrt(d * (1.0 - d));
  const double f_a = one_minus_damped_i0(
      0.5 * (arm_a * (1.0 - d) + arm_b * d), mis, y0);
  const double f_b = one_minus_damped_i0(
      0.5 * (arm_b * (1.0 - d) + arm_a * d), mis, y0);
  const double zm = detail::bessel_i0m1(mis);
  double omega2 = 2.0 * damp * u * u *
                  (2.0 * f_a * f_b + detail::bessel_i0m1(2.0 * mis) -
                   2.0 * u * u * damp * zm * (zm + 2.0));

  constexpr double kNegativeTol = 1e-12;
  if (omega1 < 0.0 && omega1 > -kNegativeTol) omega1 = 0.0;
  if (omega2 < 0.0 && omega2 > -kNegativeTol) omega2 = 0.0;
  const double both = omega1 + omega2;
  if (!(both > 0.0)) {
    throw DegenerateInputError(
        "total gain is zero: no relay events for the given channel and "
        "intensities");
  }
  return GainQber{0.5 * both, Probability(omega1 / both)};
}

DvRateBreakdown dv_key_rate(const ChannelPair& channel,
                            const DvDeviceParams& dev, const Intensities& mu) {
  mu.validate();
  const double p11 = mu.mu_a * mu.mu_b * std::exp(-(mu.mu_a + mu.mu_b));
  const double y11 = yield_11(channel, dev);
  const Probability e11 = error_11x(channel, dev);
  const GainQber gq = gain_and_qber(channel, dev, mu);
  const double rate = p11 * y11 * (1.0 - binary_entropy(e11)) -
                      gq.gain_z * dev.f_e * binary_entropy(gq.qber_z);
  return DvRateBreakdown{p11,       y11, e11.value(), gq.gain_z,
                         gq.qber_z.value(), rate};
}

}  // namespace ratelab
