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

#include "abcontrast/contrast.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "abcontrast/compensated.hpp"
#include "gauss_legendre.hpp"

namespace abcontrast {

namespace {

// Power series sum_k (-1)^k (x^2/4)^k / (k!)^2. The terms near the
// truncation point are tiny but the partial sums swing to ~1e3 around
// x = 12, so the accumulation is compensated.
double j0_series(double x) {
  const double q = 0.25 * x * x;
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum.add(term);
    if (std::abs(term) < 1e-18) break;
  }
  return sum.value();
}

// Hankel asymptotic expansion
//   J0(x) ~ sqrt(2/(pi x)) * (P(x) cos(x - pi/4) - Q(x) sin(x - pi/4))
// with a_k = -a_{k-1} (2k-1)^2 / (8k), P collecting even k and Q odd k.
// The series is truncated at its smallest term.
double j0_asymptotic(double x) {
  double p = 0.0;
  double q = 0.0;

  double a = 1.0;       // a_k
  double inv_pow = 1.0;  // 1 / x^k
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 40; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= -odd * odd / (8.0 * k);
      inv_pow /= x;
    }
    const double term = a * inv_pow;
    const double mag = std::abs(term);
    if (mag >= prev_mag) break;  // asymptotic tail starts to diverge
    prev_mag = mag;

    const int j = (k % 2 == 0) ? k / 2 : (k - 1) / 2;
    const double signed_term = (j % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (mag < 1e-18) break;
  }

  const double chi = x - 0.25 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) *
         (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);  // even function
  if (x < 12.0) return j0_series(x);
  return j0_asymptotic(x);
}

double contrast_analytic(std::complex<double> c) {
  return bessel_j0(std::abs(c));
}

std::complex<double> oracle_time_average(double a, double b,
                                         std::size_t n_points) {
  if (n_points < 16) {
    throw std::invalid_argument("oracle_time_average needs >= 16 nodes");
  }
  CompensatedComplexSum sum;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    const double phi = step * static_cast<double>(j);
    const double theta = a * std::cos(phi) + b * std::sin(phi);
    sum.add(std::polar(1.0, theta));
  }
  return sum.value() / static_cast<double>(n_points);
}

std::complex<double> finite_window_average(double a, double b, double omega,
                                           double window) {
  if (!(omega > 0.0)) {
    throw std::domain_error("finite_window_average needs omega > 0");
  }
  if (!(window > 0.0)) {
    throw std::domain_error("finite_window_average needs window > 0");
  }

  const double period = 2.0 * std::numbers::pi / omega;
  const double periods = 2.0 * window / period;
  // The integrand's instantaneous frequency is up to omega |C|; resolve it.
  const double per_period = 16.0 + 4.0 * std::ceil(std::hypot(a, b));
  const std::size_t panels = static_cast<std::size_t>(
      std::max(8.0, std::ceil(periods * per_period)));

  const double h = 2.0 * window / static_cast<double>(panels);
  CompensatedComplexSum sum;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = -window + (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < detail::gl_order; ++i) {
      const double t0 = mid + 0.5 * h * detail::gl_nodes[i];
      const double theta =
          a * std::cos(omega * t0) + b * std::sin(omega * t0);
      sum.add(std::polar(1.0, theta) * (0.5 * h * detail::gl_weights[i]));
    }
  }
  return sum.value() / (2.0 * window);
}

double contrast_gaussian_model(std::complex<double> c) {
  return std::exp(-0.25 * std::norm(c));
}

double contrast_taylor(std::complex<double> c) {
  const double r = std::norm(c);
  return 1.0 - r / 4.0 + r * r / 64.0;
}

ContrastReport make_contrast_report(std::complex<double> c,
                                    std::size_t oracle_points) {
  ContrastReport r;
  r.abs_C = std::abs(c);
  r.upsilon_analytic = contrast_analytic(c);
  r.upsilon_oracle = oracle_time_average(c.real(), c.imag(), oracle_points);
  r.upsilon_gaussian_model = contrast_gaussian_model(c);
  r.upsilon_taylor = contrast_taylor(c);
  return r;
}

}  // namespace abcontrast
