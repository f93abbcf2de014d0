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

#include "abcontrast/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abcontrast/units.hpp"

namespace abcontrast {

namespace {

// sin(x)/x, continuous through x = 0.
double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw std::domain_error(std::string(what) + " must be > 0");
  }
}

}  // namespace

void PlaneWaveScenario::validate() const {
  geom.validate();
  if (std::isnan(amplitude_E0) || amplitude_E0 < 0.0) {
    throw std::domain_error("amplitude_E0 must be >= 0");
  }
  require_positive(omega, "omega");
}

void GaussianScenario::validate() const {
  geom.validate();
  if (std::isnan(amplitude_E0) || amplitude_E0 < 0.0) {
    throw std::domain_error("amplitude_E0 must be >= 0");
  }
  require_positive(omega, "omega");
  require_positive(sigma, "sigma");
}

double planewave_C(const PlaneWaveScenario& scenario) {
  scenario.validate();
  const double e = constants::elementary_charge_natural;
  const double theta_t = scenario.geom.ramp_time();
  const double plateau_t = scenario.geom.plateau_time();
  const double c = scenario.geom.half_separation_c;
  const double w = scenario.omega;
  return 2.0 * e * scenario.amplitude_E0 * c * (plateau_t + theta_t) *
         sinc(0.5 * w * theta_t) * sinc(0.5 * w * (plateau_t + theta_t));
}

double planewave_C2_averaged(const TrapezoidGeometry& geom, double omega,
                             double rho) {
  geom.validate();
  require_positive(omega, "omega");
  if (std::isnan(rho) || rho < 0.0) {
    throw std::domain_error("rho must be >= 0");
  }
  const double e = constants::elementary_charge_natural;
  const double factor =
      2.0 * geom.half_separation_c / (omega * omega * geom.ramp_time());
  return 8.0 * e * e * rho * factor * factor;
}

double energy_density_from_amplitude(double amplitude_E0) {
  if (std::isnan(amplitude_E0) || amplitude_E0 < 0.0) {
    throw std::domain_error("amplitude_E0 must be >= 0");
  }
  return 0.5 * amplitude_E0 * amplitude_E0;
}

double planewave_C2_parametric(double kinetic_energy_kev, double flux_w_cm2,
                               double ratio_2c_over_s, double lambda_um) {
  require_positive(kinetic_energy_kev, "kinetic energy");
  require_positive(flux_w_cm2, "flux");
  require_positive(ratio_2c_over_s, "2c/s ratio");
  require_positive(lambda_um, "wavelength");
  const double el = lambda_um / 100.0;
  return (kinetic_energy_kev / 5.0) * flux_w_cm2 * ratio_2c_over_s *
         ratio_2c_over_s * el * el * el * el;
}

GaussianClosedForm gaussian_C(const GaussianScenario& scenario) {
  scenario.validate();
  if (!(scenario.geom.half_middle_d > 0.0)) {
    throw std::domain_error(
        "gaussian_C requires a finite plateau (half_middle_d > 0)");
  }
  GaussianClosedForm out;
  out.validity.sigma_exceeds_2c =
      scenario.sigma > 2.0 * scenario.geom.half_separation_c;
  out.validity.sigma_exceeds_2d =
      scenario.sigma > 2.0 * scenario.geom.half_middle_d;

  const double e = constants::elementary_charge_natural;
  const double d = scenario.geom.half_middle_d;
  const double plateau_t = scenario.geom.plateau_time();
  const double w = scenario.omega;
  const double theta = scenario.geom.path_angle();
  out.value = -(8.0 * std::sqrt(std::numbers::pi) * e *
                scenario.amplitude_E0 * d * d /
                (w * w * plateau_t * scenario.sigma)) *
              (1.0 - std::cos(theta)) * std::cos(0.5 * w * plateau_t) *
              std::exp(-d * d / (scenario.sigma * scenario.sigma));
  return out;
}

double photon_density(double rho, double omega) {
  if (std::isnan(rho) || rho < 0.0) {
    throw std::domain_error("rho must be >= 0");
  }
  require_positive(omega, "omega");
  return rho / omega;
}

double thomson_mfp(double flux_w_cm2, double lambda_um) {
  require_positive(flux_w_cm2, "flux");
  require_positive(lambda_um, "wavelength");
  const double rho = flux_to_energy_density_natural(flux_w_cm2);
  const double omega = wavelength_um_to_omega(lambda_um);
  const double mfp_natural =
      omega / (constants::thomson_cross_section_natural * rho);
  return length_from_natural(mfp_natural);
}

}  // namespace abcontrast
