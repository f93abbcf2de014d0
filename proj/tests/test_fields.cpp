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
#include <stdexcept>

#include <doctest.h>

#include "abcontrast/fields.hpp"

using namespace abcontrast;

TEST_CASE("null field vanishes everywhere") {
  const NullField f;
  for (double x : {-3.0, 0.0, 5.0}) {
    for (double z : {-1.0, 0.5}) {
      CHECK(f.phasor(x, 0.0, z) == std::complex<double>(0.0, 0.0));
      CHECK(field_in_time(f, x, 2.0, z, 1.7) == 0.0);
    }
  }
}

TEST_CASE("plane wave phasor on the path plane") {
  const double e0 = 2.5;
  const double omega = 0.7;
  const PlaneWaveField f(e0, omega);
  for (double x : {-10.0, 0.0, 3.3}) {
    for (double z : {-2.0, 0.0, 9.1}) {
      const std::complex<double> p = f.phasor(x, 0.0, z);
      CHECK(p.real() == e0);
      CHECK(p.imag() == 0.0);
    }
  }
  // Off-plane the plane wave carries its propagation phase exp(i omega y)
  // while the magnitude stays put.
  const std::complex<double> off = f.phasor(1.0, 2.0, 3.0);
  CHECK(std::abs(off) == doctest::Approx(e0).epsilon(1e-14));
  CHECK(std::arg(off) == doctest::Approx(omega * 2.0).epsilon(1e-12));
}

TEST_CASE("plane wave in the time domain") {
  const double e0 = 1.3;
  const double omega = 2.0;
  const PlaneWaveField f(e0, omega);
  CHECK(field_in_time(f, 0.4, 0.0, -0.2, 0.0) == doctest::Approx(e0).epsilon(1e-15));
  const double quarter = std::numbers::pi / (2.0 * omega);
  CHECK(std::abs(field_in_time(f, 0.4, 0.0, -0.2, quarter)) <= 1e-12 * e0);
  // Full period later the instantaneous value recurs.
  const double period = 2.0 * std::numbers::pi / omega;
  CHECK(field_in_time(f, 0.0, 0.0, 0.0, 0.3) ==
        doctest::Approx(field_in_time(f, 0.0, 0.0, 0.0, 0.3 + period))
            .epsilon(1e-12));
}

TEST_CASE("gaussian beam envelope") {
  const double e0 = 4.0;
  const double sigma = 1.5;
  const GaussianBeamField f(e0, 1.0, sigma);
  CHECK(f.phasor(0.0, 0.0, 0.0).real() == e0);
  CHECK(f.phasor(sigma, 0.0, 0.0).real() ==
        doctest::Approx(e0 * std::exp(-1.0)).epsilon(1e-12));
  CHECK(f.phasor(0.0, 0.0, sigma).real() ==
        doctest::Approx(e0 * std::exp(-1.0)).epsilon(1e-12));
  // Isotropic in the path plane: equal radius, equal magnitude.
  const double r = 0.9 * sigma;
  CHECK(f.phasor(r / std::numbers::sqrt2, 0.0, r / std::numbers::sqrt2).real() ==
        doctest::Approx(f.phasor(r, 0.0, 0.0).real()).epsilon(1e-12));
  CHECK(f.envelope_scale() == sigma);
}

TEST_CASE("gaussian beam center offset and radial decay") {
  const double sigma = 0.8;
  const GaussianBeamField f(1.0, 1.0, sigma, 2.0, -1.0);
  CHECK(f.phasor(2.0, 0.0, -1.0).real() == doctest::Approx(1.0).epsilon(1e-15));
  double prev = f.phasor(2.0, 0.0, -1.0).real();
  for (int i = 1; i <= 20; ++i) {
    const double cur = f.phasor(2.0 + 0.3 * i, 0.0, -1.0).real();
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("fields are linear in their amplitude") {
  const double scale = 3.7;
  const PlaneWaveField p1(1.1, 0.5);
  const PlaneWaveField p2(scale * 1.1, 0.5);
  const std::complex<double> a = p1.phasor(1.0, 0.7, -2.0);
  const std::complex<double> b = p2.phasor(1.0, 0.7, -2.0);
  CHECK(b.real() == doctest::Approx(scale * a.real()).epsilon(1e-14));
  CHECK(b.imag() == doctest::Approx(scale * a.imag()).epsilon(1e-14));

  const GaussianBeamField g1(1.1, 0.5, 2.0);
  const GaussianBeamField g2(scale * 1.1, 0.5, 2.0);
  CHECK(g2.phasor(0.4, 0.0, 0.9).real() ==
        doctest::Approx(scale * g1.phasor(0.4, 0.0, 0.9).real()).epsilon(1e-14));
}

TEST_CASE("clone preserves behavior") {
  const GaussianBeamField g(2.0, 0.9, 1.1, 0.3, -0.4);
  const auto copy = g.clone();
  CHECK(copy->omega() == g.omega());
  CHECK(copy->envelope_scale() == g.envelope_scale());
  CHECK(copy->phasor(0.5, 0.0, 0.25) == g.phasor(0.5, 0.0, 0.25));

  const PlaneWaveField p(2.0, 0.9);
  const auto pcopy = p.clone();
  CHECK(pcopy->phasor(-1.0, 0.2, 3.0) == p.phasor(-1.0, 0.2, 3.0));
}

TEST_CASE("field constructors reject invalid parameters") {
  CHECK_THROWS_AS(PlaneWaveField(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PlaneWaveField(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PlaneWaveField(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(GaussianBeamField(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GaussianBeamField(1.0, 1.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(GaussianBeamField(-1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GaussianBeamField(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_NOTHROW(PlaneWaveField(0.0, 1.0));
}
