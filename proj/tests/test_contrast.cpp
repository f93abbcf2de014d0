// Copyright 2026 The abcontrast authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "abcontrast/contrast.hpp"
#include "support/oracles.hpp"

using namespace abcontrast;
namespace oracle = abcontrast::testing;

namespace {

// Bisection zero of bessel_j0 inside [lo, hi]; the production code has no
// root finder, so the test derives the zeros itself.
double find_j0_zero(double lo, double hi) {
  double flo = bessel_j0(lo);
  REQUIRE(flo * bessel_j0(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = bessel_j0(mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("bessel_j0 fixed points") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976866).epsilon(1e-9));
  CHECK(bessel_j0(1.0) == doctest::Approx(oracle::k_j0_at_one).epsilon(1e-13));
  // Near the first zero quoted at low precision.
  CHECK(std::abs(bessel_j0(2.405)) <= 5e-4);
  CHECK(bessel_j0(-1.0) == bessel_j0(1.0));
}

TEST_CASE("bessel_j0 tracks the integral oracle across both branches") {
  // The implementation switches from series to asymptotic form at |x| = 12;
  // the sweep crosses that seam.
  for (double x = 0.0; x <= 40.0; x += 0.1) {
    CHECK(std::abs(bessel_j0(x) - oracle::j0_integral_oracle(x)) < 1e-10);
  }
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 300.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(std::abs(bessel_j0(x) - oracle::j0_integral_oracle(x)) < 1e-10);
  }
}

TEST_CASE("bessel_j0 zeros found by bisection match references") {
  const double z1 = find_j0_zero(2.0, 3.0);
  const double z2 = find_j0_zero(5.0, 6.0);
  const double z3 = find_j0_zero(8.0, 9.0);
  CHECK(z1 == doctest::Approx(oracle::k_j0_zero_1).epsilon(1e-10));
  CHECK(z2 == doctest::Approx(oracle::k_j0_zero_2).epsilon(1e-10));
  CHECK(z3 == doctest::Approx(oracle::k_j0_zero_3).epsilon(1e-10));
  CHECK(std::abs(contrast_analytic({z1, 0.0})) <= 1e-9);
}

TEST_CASE("contrast_analytic fixed points") {
  CHECK(contrast_analytic({0.0, 0.0}) == 1.0);
  // First zero at |C| ~= 2.40483: a argument within 1e-6 of the true zero
  // leaves |J0| below its slope times that offset.
  CHECK(std::abs(contrast_analytic({2.404826, 0.0})) <= 1e-6);
  // Local minimum depth near |C| = 3.8317.
  CHECK(contrast_analytic({3.8317, 0.0}) == doctest::Approx(-0.4028).epsilon(1e-3));
  CHECK(contrast_analytic({0.0, 3.8317}) ==
        contrast_analytic({3.8317, 0.0}));
}

TEST_CASE("oracle_time_average basics") {
  const std::complex<double> unit = oracle_time_average(0.0, 0.0);
  CHECK(unit.real() == 1.0);
  CHECK(unit.imag() == 0.0);
  CHECK_THROWS_AS(oracle_time_average(1.0, 0.0, 8), std::invalid_argument);
}

TEST_CASE("oracle_time_average depends only on |C|") {
  const double r = 1.2;
  const double j = bessel_j0(r);
  const std::complex<double> a = oracle_time_average(r, 0.0);
  const std::complex<double> b = oracle_time_average(0.0, r);
  const std::complex<double> c =
      oracle_time_average(r / std::numbers::sqrt2, r / std::numbers::sqrt2);
  for (const auto& v : {a, b, c}) {
    CHECK(std::abs(v.real() - j) < 1e-10);
    CHECK(std::abs(v.imag()) < 1e-10);
  }
  // At the first Bessel zero the average vanishes.
  CHECK(std::abs(oracle_time_average(oracle::k_j0_zero_1, 0.0)) <= 1e-6);
}

TEST_CASE("finite window average") {
  const double omega = 1.0;
  const double a = 1.2;
  const double b = 0.7;
  const std::complex<double> period = oracle_time_average(a, b, 4096);

  // Integer number of half periods covers full periods exactly.
  const std::complex<double> exact =
      finite_window_average(a, b, omega, 3.0 * std::numbers::pi);
  CHECK(std::abs(exact - period) < 1e-10);

  // Boundary error decays like 1/(omega * window): a 10x window shrinks the
  // deviation by roughly 10x. Both windows carry the same fractional phase
  // (0.3 periods) so the oscillatory envelope of the boundary term cancels
  // out of the ratio; an integer or half-integer window would sit on an
  // exact zero of the deviation instead.
  const double xi_small = 10.3 * 2.0 * std::numbers::pi / omega;
  const double xi_large = 103.3 * 2.0 * std::numbers::pi / omega;
  const double dev_small =
      std::abs(finite_window_average(a, 0.0, omega, xi_small) -
               oracle_time_average(a, 0.0, 4096));
  const double dev_large =
      std::abs(finite_window_average(a, 0.0, omega, xi_large) -
               oracle_time_average(a, 0.0, 4096));
  REQUIRE(dev_large > 0.0);
  const double ratio = dev_small / dev_large;
  CHECK(ratio >= 5.0);
  CHECK(ratio <= 20.0);

  // Zero phase amplitude averages to one for any window.
  for (double w : {0.1, 2.0, 50.0}) {
    CHECK(std::abs(finite_window_average(0.0, 0.0, omega, w) - 1.0) < 1e-14);
  }

  CHECK_THROWS_AS(finite_window_average(1.0, 0.0, 0.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(finite_window_average(1.0, 0.0, 1.0, 0.0),
                  std::domain_error);
}

TEST_CASE("finite window average is bounded by one") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> amp(-8.0, 8.0);
  std::uniform_real_distribution<double> win(0.05, 40.0);
  for (int i = 0; i < 100; ++i) {
    const double m =
        std::abs(finite_window_average(amp(rng), amp(rng), 1.0, win(rng)));
    CHECK(m <= 1.0 + 1e-12);
  }
}

TEST_CASE("gaussian noise model") {
  CHECK(contrast_gaussian_model({0.0, 0.0}) == 1.0);
  CHECK(contrast_gaussian_model({2.0, 0.0}) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // Agreement with the Bessel result at small |C| is |C|^4-limited.
  const std::complex<double> small{0.3, 0.0};
  CHECK(std::abs(contrast_gaussian_model(small) - contrast_analytic(small)) <=
        std::pow(0.3, 4) / 32.0);
}

TEST_CASE("gaussian model fails at large |C| where J0 revives") {
  for (double r = 4.0; r <= 8.0; r += 0.25) {
    CHECK(contrast_gaussian_model({r, 0.0}) < 0.02);
  }
  double max_abs_j0 = 0.0;
  for (double r = 4.0; r <= 8.0; r += 0.01) {
    max_abs_j0 = std::max(max_abs_j0, std::abs(contrast_analytic({r, 0.0})));
  }
  CHECK(max_abs_j0 > 0.05);
}

TEST_CASE("taylor expansion") {
  CHECK(contrast_taylor({0.0, 0.0}) == 1.0);
  // 1 - 1/16 + 1/1024 at |C| = 0.5, exact in binary arithmetic.
  CHECK(contrast_taylor({0.5, 0.0}) == 0.9384765625);
  for (double r = 0.05; r <= 0.5; r += 0.05) {
    CHECK(std::abs(contrast_taylor({r, 0.0}) - contrast_analytic({r, 0.0})) <=
          std::pow(r, 6) / 2304.0);
  }
}

TEST_CASE("phasor average equals J0 for random phase amplitudes") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = 10.0 * std::sqrt(u(rng));
    const double phi = 2.0 * std::numbers::pi * u(rng);
    const double a = r * std::cos(phi);
    const double b = r * std::sin(phi);
    const std::complex<double> avg = oracle_time_average(a, b, 2048);
    CHECK(std::abs(avg.real() - bessel_j0(r)) <= 1e-8);
    CHECK(std::abs(avg.imag()) <= 1e-8);
  }
}

TEST_CASE("contrast is monotone between the first Bessel features") {
  double prev = contrast_analytic({0.0, 0.0});
  for (double r = 0.02; r <= 2.40; r += 0.02) {
    const double cur = contrast_analytic({r, 0.0});
    CHECK(cur < prev);
    prev = cur;
  }
  prev = contrast_analytic({2.4049, 0.0});
  for (double r = 2.43; r <= 3.83; r += 0.02) {
    const double cur = contrast_analytic({r, 0.0});
    CHECK(cur < prev);  // J0 itself decreases toward the minimum...
    prev = cur;
  }
  // ...so |J0| rises from the zero to the first revival peak.
  prev = std::abs(contrast_analytic({2.4049, 0.0}));
  for (double r = 2.43; r <= 3.83; r += 0.02) {
    const double cur = std::abs(contrast_analytic({r, 0.0}));
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("contrast report cross-checks itself") {
  const std::complex<double> c{1.1, -0.6};
  const ContrastReport rep = make_contrast_report(c, 4096);
  CHECK(rep.abs_C == doctest::Approx(std::abs(c)).epsilon(1e-15));
  CHECK(std::abs(rep.upsilon_analytic) <= 1.0);
  CHECK(std::abs(rep.upsilon_oracle) <= 1.0 + 1e-12);
  CHECK(std::abs(rep.upsilon_oracle.imag()) <= 1e-10);
  CHECK(rep.upsilon_analytic ==
        doctest::Approx(rep.upsilon_oracle.real()).epsilon(1e-9));
  CHECK(rep.upsilon_gaussian_model == contrast_gaussian_model(c));
  CHECK(rep.upsilon_taylor == contrast_taylor(c));
}
