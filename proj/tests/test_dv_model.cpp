#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "ratelab/dv_model.hpp"

using namespace ratelab;

namespace {

double rel_diff(double got, const oracle::real& want) {
  const oracle::real d = abs((oracle::real(got) - want) / want);
  return d.convert_to<double>();
}

DvDeviceParams table_defaults() { return DvDeviceParams{}; }

}  // namespace

TEST_CASE("yield reference values") {
  CHECK(yield_11(ChannelPair(1, 1), DvDeviceParams{1.0, 0.0, 0.0, 1.0}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(yield_11(ChannelPair(1, 1), table_defaults()) ==
        doctest::Approx(0.4324502603982015).epsilon(1e-13));
  CHECK(yield_11(ChannelPair(0, 0), DvDeviceParams{0.93, 0.001, 0.0, 1.16}) ==
        0.0);
}

TEST_CASE("x basis error reference values") {
  // perfect alignment, no darks: no error at all
  CHECK(error_11x(ChannelPair(0.7, 0.2), DvDeviceParams{0.93, 0.0, 0.0, 1.16})
            .value() == 0.0);
  // fully scrambled alignment with no darks
  CHECK(error_11x(ChannelPair(1, 1), DvDeviceParams{0.93, 0.5, 0.0, 1.16})
            .value() == doctest::Approx(0.375).epsilon(1e-15));
  const double e = error_11x(ChannelPair(1, 1), table_defaults()).value();
  CHECK(e > 0.0);
  CHECK(e < 0.005);
  CHECK(e == doctest::Approx(0.0010007984710632).epsilon(1e-12));
  // a dark channel with no dark counts has no single-photon events
  CHECK_THROWS_AS(
      error_11x(ChannelPair(0, 0), DvDeviceParams{0.93, 0.001, 0.0, 1.16}),
      DegenerateInputError);
}

TEST_CASE("gain and qber reference values") {
  const GainQber gq =
      gain_and_qber(ChannelPair(1, 1), table_defaults(), Intensities{0.5, 0.5});
  CHECK(gq.gain_z == doctest::Approx(0.05434231907773045).epsilon(1e-12));
  CHECK(gq.qber_z.value() ==
        doctest::Approx(0.004591455605743783).epsilon(1e-12));

  const GainQber probe = gain_and_qber(
      ChannelPair(0.8, 0.3), DvDeviceParams{0.7, 0.05, 1e-5, 1.16},
      Intensities{0.4, 0.7});
  CHECK(probe.gain_z == doctest::Approx(0.015299812005304473).epsilon(1e-12));
  CHECK(probe.qber_z.value() ==
        doctest::Approx(0.17000904118765011).epsilon(1e-12));
}

TEST_CASE("perfect alignment and no darks give zero qber exactly") {
  const DvDeviceParams clean{0.93, 0.0, 0.0, 1.16};
  for (const double loss : {0.0, 2.0, 7.5, 20.0}) {
    const ChannelPair ch =
        channel_from_total_loss(loss, Scenario::Symmetric);
    const GainQber gq = gain_and_qber(ch, clean, Intensities{0.5, 0.5});
    CHECK(std::abs(gq.qber_z.value()) <= 1e-12);
    CHECK(std::abs(error_11x(ch, clean).value()) <= 1e-12);
    CHECK(gq.gain_z > 0.0);
  }
}

TEST_CASE("gain vanishes with the light when darks are off") {
  const DvDeviceParams clean{0.93, 0.001, 0.0, 1.16};
  const GainQber gq =
      gain_and_qber(ChannelPair(1, 1), clean, Intensities{1e-9, 1e-9});
  CHECK(gq.gain_z < 1e-17);
  CHECK(gq.gain_z > 0.0);
}

TEST_CASE("degenerate gain throws") {
  const DvDeviceParams clean{0.93, 0.001, 0.0, 1.16};
  CHECK_THROWS_AS(
      gain_and_qber(ChannelPair(0, 0), clean, Intensities{0.5, 0.5}),
      DegenerateInputError);
}

TEST_CASE("key rate reference values") {
  // both entropy penalties vanish: rate is exactly p11 * y11
  const DvDeviceParams ideal{1.0, 0.0, 0.0, 1.0};
  const DvRateBreakdown r =
      dv_key_rate(ChannelPair(1, 1), ideal, Intensities{0.5, 0.5});
  CHECK(r.rate == doctest::Approx(r.p11 * r.y11).epsilon(1e-15));
  CHECK(r.rate > 0.0);

  const DvRateBreakdown t =
      dv_key_rate(ChannelPair(1, 1), table_defaults(), Intensities{0.5, 0.5});
  CHECK(t.rate == doctest::Approx(0.03665378786396638).epsilon(1e-12));
  CHECK(t.p11 == doctest::Approx(0.25 * std::exp(-1.0)).epsilon(1e-15));

  // starved intensities: error correction on dark counts dominates
  const DvRateBreakdown starved = dv_key_rate(
      channel_from_total_loss(4.0, Scenario::Symmetric), table_defaults(),
      Intensities{1e-6, 1e-6});
  CHECK(starved.rate < 0.0);
  CHECK(starved.secure_rate() == 0.0);
}

TEST_CASE("parameter validation names the field") {
  CHECK_THROWS_WITH_AS(
      dv_key_rate(ChannelPair(1, 1), DvDeviceParams{1.2, 0.001, 1e-6, 1.16},
                  Intensities{0.5, 0.5}),
      doctest::Contains("eta_d"), DomainError);
  CHECK_THROWS_WITH_AS(
      dv_key_rate(ChannelPair(1, 1), DvDeviceParams{0.93, 0.6, 1e-6, 1.16},
                  Intensities{0.5, 0.5}),
      doctest::Contains("e_d"), DomainError);
  CHECK_THROWS_WITH_AS(dv_key_rate(ChannelPair(1, 1), table_defaults(),
                                   Intensities{0.0, 0.5}),
                       doctest::Contains("mu_a"), DomainError);
  CHECK_THROWS_WITH_AS(
      dv_key_rate(ChannelPair(1, 1), DvDeviceParams{0.93, 0.001, 1e-6, 0.9},
                  Intensities{0.5, 0.5}),
      doctest::Contains("f_e"), DomainError);
}

TEST_CASE("ranges hold over random parameter draws") {
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, unit(rng));
  };
  for (int i = 0; i < 10000; ++i) {
    const ChannelPair ch(log_uniform(1e-3, 1.0), log_uniform(1e-3, 1.0));
    const DvDeviceParams dev{0.3 + 0.7 * unit(rng), 0.5 * unit(rng),
                             log_uniform(1e-9, 1e-3), 1.0 + unit(rng)};
    const Intensities mu{log_uniform(1e-3, 1.0), log_uniform(1e-3, 1.0)};
    const double y = yield_11(ch, dev);
    CHECK(y >= 0.0);
    CHECK(y <= 1.0);
    const double e = error_11x(ch, dev).value();
    CHECK(e >= 0.0);
    CHECK(e <= 0.5 + 1e-12);
    const GainQber gq = gain_and_qber(ch, dev, mu);
    CHECK(gq.gain_z >= 0.0);
    CHECK(gq.gain_z <= 1.0);
    CHECK(gq.qber_z.value() <= 0.5 + 1e-12);
  }
}

TEST_CASE("swap symmetry of arms and intensities") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double ea = 0.01 + 0.99 * unit(rng);
    const double eb = 0.01 + 0.99 * unit(rng);
    const double ma = 0.05 + 0.95 * unit(rng);
    const double mb = 0.05 + 0.95 * unit(rng);
    const DvDeviceParams dev{0.5 + 0.5 * unit(rng), 0.4 * unit(rng),
                             1e-6, 1.16};
    const DvRateBreakdown fwd =
        dv_key_rate(ChannelPair(ea, eb), dev, Intensities{ma, mb});
    const DvRateBreakdown rev =
        dv_key_rate(ChannelPair(eb, ea), dev, Intensities{mb, ma});
    CHECK(fwd.y11 == doctest::Approx(rev.y11).epsilon(1e-12));
    CHECK(fwd.gain_z == doctest::Approx(rev.gain_z).epsilon(1e-12));
    CHECK(fwd.qber_z == doctest::Approx(rev.qber_z).epsilon(1e-12));
    CHECK(fwd.rate == doctest::Approx(rev.rate).epsilon(1e-12));
  }
}

TEST_CASE("gain and qber track the high-precision oracle") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, unit(rng));
  };
  for (int i = 0; i < 100; ++i) {
    const double ea = log_uniform(1e-2, 1.0);
    const double eb = log_uniform(1e-2, 1.0);
    const double etad = 0.4 + 0.6 * unit(rng);
    const double ed = log_uniform(1e-4, 0.5);
    const double y0 = log_uniform(1e-8, 1e-4);
    const double ma = log_uniform(0.05, 1.0);
    const double mb = log_uniform(0.05, 1.0);

    const GainQber got = gain_and_qber(ChannelPair(ea, eb),
                                       DvDeviceParams{etad, ed, y0, 1.16},
                                       Intensities{ma, mb});
    const oracle::QE want =
        oracle::gain_qber({ea, eb, etad, ed, y0, 1.16}, ma, mb);
    CAPTURE(ea);
    CAPTURE(eb);
    CAPTURE(etad);
    CAPTURE(ed);
    CAPTURE(y0);
    CHECK(rel_diff(got.gain_z, want.gain) <= 1e-10);
    CHECK(rel_diff(got.qber_z.value(), want.qber) <= 1e-10);
  }
}
