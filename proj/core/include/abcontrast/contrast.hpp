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

#ifndef ABCONTRAST_CONTRAST_HPP
#define ABCONTRAST_CONTRAST_HPP

#include <complex>
#include <cstddef>

namespace abcontrast {

/// The interference fringe amplitude is reduced by the average of the phase
/// factor exp(i theta(t0)) over the electron emission time t0. For a
/// sinusoidal field, theta(t0) = A cos(w t0) + B sin(w t0) and the full
/// period average is J0(|C|) with C = A + iB. This header offers the closed
/// form plus three independent routes to the same number: the direct phasor
/// average, a Gaussian-noise model, and a small-|C| polynomial.
///
/// All functions are pure and thread-safe.

/// Bessel function of the first kind, order zero.
/// Power series for |x| < 12 with compensated accumulation, Hankel
/// asymptotic expansion beyond. Absolute error stays below ~1e-11 over the
/// range this library produces (|x| up to a few hundred).
double bessel_j0(double x);

/// Contrast factor J0(|C|).
double contrast_analytic(std::complex<double> c);

/// Emission-time average of exp(i(A cos phi + B sin phi)) over one full
/// period, by the n-point periodic trapezoid rule (spectrally accurate).
/// This is the numerical definition of the contrast, independent of the
/// Bessel route. n_points must be >= 16; default 1024.
std::complex<double> oracle_time_average(double a, double b,
                                         std::size_t n_points = 1024);

/// Average of exp(i theta(t0)) over the finite window [-window, +window]
/// instead of a full period; converges to the period average as the window
/// grows, with O(1/(omega window)) boundary error. window > 0, omega > 0.
std::complex<double> finite_window_average(double a, double b, double omega,
                                           double window);

/// Contrast a Gaussian phase noise of equal variance would give:
/// exp(-<theta^2>/2) with <theta^2> = |C|^2/2. Matches the Bessel result
/// through order |C|^2 and departs at |C|^4.
double contrast_gaussian_model(std::complex<double> c);

/// Three-term small-|C| expansion 1 - |C|^2/4 + |C|^4/64.
double contrast_taylor(std::complex<double> c);

/// All contrast estimates for one phase amplitude C.
struct ContrastReport {
  double abs_C = 0.0;
  double upsilon_analytic = 1.0;
  std::complex<double> upsilon_oracle{1.0, 0.0};
  double upsilon_gaussian_model = 1.0;
  double upsilon_taylor = 1.0;
};

ContrastReport make_contrast_report(std::complex<double> c,
                                    std::size_t oracle_points = 1024);

}  // namespace abcontrast

#endif  // ABCONTRAST_CONTRAST_HPP
