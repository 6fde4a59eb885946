// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mixfirst/errors.hpp"
#include "mixfirst/mixer_lti.hpp"

using namespace mixfirst;
using doctest::Approx;

namespace {
baseband_impedance rc_lowpass(double r, double c) {
  return [r, c](double f_hz) {
    return r / std::complex<double>(1.0, 2.0 * std::numbers::pi * f_hz * r * c);
  };
}
}  // namespace

TEST_CASE("gamma is exactly 2/pi^2") {
  CHECK(mixer_gamma == 2.0 / (std::numbers::pi * std::numbers::pi));
}

TEST_CASE("mixer config rejects invalid parameters") {
  CHECK_THROWS_AS(mixer_config(0.0, 5.0, 1e9), std::invalid_argument);
  CHECK_THROWS_AS(mixer_config(-50.0, 5.0, 1e9), std::invalid_argument);
  CHECK_THROWS_AS(mixer_config(50.0, -1.0, 1e9), std::invalid_argument);
  CHECK_THROWS_AS(mixer_config(50.0, 5.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(mixer_config(50.0, 0.0, 1e9));  // ideal switches allowed
}

TEST_CASE("only the 4-phase 25%-duty topology is accepted") {
  CHECK_NOTHROW(mixer_config(50.0, 5.0, 1e9, 4, 0.25));
  CHECK_THROWS_AS(mixer_config(50.0, 5.0, 1e9, 8, 0.125), std::invalid_argument);
  CHECK_THROWS_AS(mixer_config(50.0, 5.0, 1e9, 4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(mixer_config(50.0, 5.0, 1e9, 2, 0.25), std::invalid_argument);
}

TEST_CASE("derived equivalent for ideal switches") {
  const lti_equivalent lti = derive_lti(mixer_config(50.0, 0.0, 1e9));
  CHECK(lti.ra_prime_ohm == 50.0);
  CHECK(lti.gamma == mixer_gamma);
  CHECK(lti.rsh_ohm ==
        Approx(50.0 * 4.0 * mixer_gamma / (1.0 - 4.0 * mixer_gamma)));
  CHECK(lti.rsh_ohm == Approx(213.948).epsilon(1e-5));
}

TEST_CASE("derived equivalent lumps the switch resistance into the antenna") {
  const lti_equivalent lti = derive_lti(mixer_config(50.0, 5.0, 1e9));
  CHECK(lti.ra_prime_ohm == 55.0);
  CHECK(lti.rsh_ohm == Approx(235.34).epsilon(1e-4));
}

TEST_CASE("shunt-to-antenna ratio is a topology constant") {
  std::mt19937 rng(20220825u);
  std::uniform_real_distribution<double> ra(1.0, 500.0);
  std::uniform_real_distribution<double> rsw(0.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const lti_equivalent lti = derive_lti(mixer_config(ra(rng), rsw(rng), 1e9));
    const double ratio = lti.rsh_ohm / lti.ra_prime_ohm;
    CHECK(ratio >= 4.2789);
    CHECK(ratio <= 4.2790);
  }
}

TEST_CASE("shorted baseband leaves only the switch resistance") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const auto zero = [](double) { return std::complex<double>(0.0, 0.0); };
  const auto z = input_impedance(cfg, zero, 1.0e9);
  CHECK(z.real() == Approx(5.0));
  CHECK(z.imag() == Approx(0.0));
}

TEST_CASE("open baseband saturates at rsw + rsh") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const lti_equivalent lti = derive_lti(cfg);
  const auto open = [](double) { return std::complex<double>(1e12, 0.0); };
  const auto z = input_impedance(cfg, open, 1.0e9);
  CHECK(z.real() == Approx(5.0 + lti.rsh_ohm).epsilon(1e-6));
}

TEST_CASE("274.6 ohm branch resistance lands the input at 50 ohm") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const auto rb = [](double) { return std::complex<double>(274.6, 0.0); };
  const auto z = input_impedance(cfg, rb, 1.0e9);
  CHECK(std::abs(z - std::complex<double>(50.0, 0.0)) < 0.1);
}

TEST_CASE("evaluation requires a positive frequency") {
  const mixer_config cfg;
  const auto rb = [](double) { return std::complex<double>(100.0, 0.0); };
  CHECK_THROWS_AS(input_impedance(cfg, rb, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(input_impedance(cfg, rb, -1e9), std::invalid_argument);
}

TEST_CASE("outside the half-LO window the strict path throws, the tolerant one flags") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const auto rb = [](double) { return std::complex<double>(100.0, 0.0); };
  CHECK_THROWS_AS(input_impedance(cfg, rb, 1.5e9), out_of_validity_window);
  CHECK_THROWS_AS(input_impedance(cfg, rb, 0.5e9), out_of_validity_window);
  CHECK_NOTHROW(input_impedance(cfg, rb, 0.5e9 + 1.0));

  const translated_impedance t = translated_input_impedance(cfg, rb, 1.6e9);
  CHECK_FALSE(t.in_validity_window);
  CHECK(std::isfinite(t.z_ohm.real()));
  CHECK(translated_input_impedance(cfg, rb, 1.2e9).in_validity_window);
}

TEST_CASE("sweep delivers the requested monotone grid") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const frequency_response fr =
      impedance_sweep(cfg, rc_lowpass(274.6, 55e-12), 0.5e9, 1.5e9, 1001);
  REQUIRE(fr.size() == 1001);
  CHECK(fr[0].f_hz == 0.5e9);
  CHECK(fr[1000].f_hz == 1.5e9);
  for (std::size_t i = 1; i < fr.size(); ++i)
    CHECK(fr[i].f_hz > fr[i - 1].f_hz);
  CHECK_NOTHROW(validate(fr));
  // Window edges are flagged, points near the LO are not.
  CHECK((fr[0].flags & point_flag::out_of_validity_window) != 0);
  CHECK((fr[1000].flags & point_flag::out_of_validity_window) != 0);
  CHECK(fr[500].flags == 0);
}

TEST_CASE("low-pass branch load peaks the sweep at the LO") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const frequency_response fr =
      impedance_sweep(cfg, rc_lowpass(274.6, 55e-12), 0.95e9, 1.05e9, 1001);
  CHECK(peak_magnitude_point(fr).f_hz == Approx(1.0e9));
}

TEST_CASE("far from the LO only the switch resistance remains") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  // Narrowband branch keeps 100 bandwidths inside the half-LO window.
  const double r = 274.6, c = 550e-12;
  const double bw_hz = 1.0 / (2.0 * std::numbers::pi * r * c);
  for (double f : {1e9 + 100.0 * bw_hz, 1e9 - 100.0 * bw_hz}) {
    const auto z = input_impedance(cfg, rc_lowpass(r, c), f);
    CHECK(std::abs(z) == Approx(cfg.rsw_ohm()).epsilon(0.01));
  }
}

TEST_CASE("passive branches keep the input resistance above rsw") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  std::mt19937 rng(777u);
  std::uniform_real_distribution<double> re(0.0, 1e4);
  std::uniform_real_distribution<double> im(-1e4, 1e4);
  for (int i = 0; i < 500; ++i) {
    const std::complex<double> zb(re(rng), im(rng));
    const auto z =
        translated_input_impedance(cfg, [zb](double) { return zb; }, 1.01e9)
            .z_ohm;
    CHECK(z.real() >= cfg.rsw_ohm() - 1e-12);
  }
}

TEST_CASE("growing real branch impedance saturates monotonically") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const lti_equivalent lti = derive_lti(cfg);
  double prev = 0.0;
  for (double rb = 1.0; rb <= 1e9; rb *= 10.0) {
    const auto z = input_impedance(
        cfg, [rb](double) { return std::complex<double>(rb, 0.0); }, 1e9);
    CHECK(std::abs(z) > prev);
    CHECK(std::abs(z) < cfg.rsw_ohm() + lti.rsh_ohm + 1e-9);
    prev = std::abs(z);
  }
  CHECK(prev == Approx(cfg.rsw_ohm() + lti.rsh_ohm).epsilon(1e-4));
}

TEST_CASE("hermitian branch symmetry mirrors the response about the LO") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const auto zb = rc_lowpass(274.6, 55e-12);
  for (double d : {1e6, 5e6, 2.5e7, 1e8, 4e8}) {
    const auto hi = input_impedance(cfg, zb, 1e9 + d);
    const auto lo = input_impedance(cfg, zb, 1e9 - d);
    CHECK(std::abs(hi) == Approx(std::abs(lo)).epsilon(1e-12));
  }
}

TEST_CASE("sweep rejects malformed grids") {
  const mixer_config cfg;
  const auto rb = [](double) { return std::complex<double>(100.0, 0.0); };
  CHECK_THROWS_AS(impedance_sweep(cfg, rb, 1.1e9, 1.0e9, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(impedance_sweep(cfg, rb, 0.9e9, 1.1e9, 1),
                  std::invalid_argument);
}

TEST_CASE("response helpers reject corrupt grids and find first peaks") {
  frequency_response fr;
  fr.points = {{1.0, {1.0, 0.0}, 0}, {2.0, {3.0, 0.0}, 0}, {3.0, {-3.0, 0.0}, 0}};
  CHECK_NOTHROW(validate(fr));
  CHECK(&peak_magnitude_point(fr) == &fr.points[1]);  // first of the |3| tie

  frequency_response bad = fr;
  bad.points[2].f_hz = 2.0;  // not strictly increasing
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = fr;
  bad.points[1].value = {std::nan(""), 0.0};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
