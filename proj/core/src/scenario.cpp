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

#include "abcontrast/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "abcontrast/closed_form.hpp"
#include "abcontrast/units.hpp"

namespace abcontrast {

void Scenario::validate() const {
  geom.validate();
  if (field_kind == FieldKind::null_field) return;
  if (std::isnan(amplitude_E0) || amplitude_E0 < 0.0) {
    throw std::domain_error("amplitude_E0 must be >= 0");
  }
  if (!(omega > 0.0)) {
    throw std::domain_error("omega must be > 0");
  }
  if (field_kind == FieldKind::gaussian_beam && !(sigma > 0.0)) {
    throw std::domain_error("sigma must be > 0 for a gaussian beam");
  }
}

std::unique_ptr<FieldConfig> Scenario::make_field() const {
  validate();
  switch (field_kind) {
    case FieldKind::null_field:
      return std::make_unique<NullField>(omega > 0.0 ? omega : 1.0);
    case FieldKind::plane_wave:
      return std::make_unique<PlaneWaveField>(amplitude_E0, omega);
    case FieldKind::gaussian_beam:
      return std::make_unique<GaussianBeamField>(amplitude_E0, omega, sigma,
                                                 center_x, center_z);
  }
  throw std::domain_error("unknown field kind");
}

TrajectoryPair Scenario::make_trajectory() const {
  return build_trapezoid(geom);
}

double closed_form_abs_C(const Scenario& scenario) {
  scenario.validate();
  switch (scenario.field_kind) {
    case FieldKind::null_field:
      return 0.0;
    case FieldKind::plane_wave:
      return std::abs(planewave_C(
          {scenario.geom, scenario.amplitude_E0, scenario.omega}));
    case FieldKind::gaussian_beam:
      return std::abs(
          gaussian_C({scenario.geom, scenario.amplitude_E0, scenario.omega,
                      scenario.sigma})
              .value);
  }
  throw std::domain_error("unknown field kind");
}

Scenario benchmark_scenario() {
  Scenario s;
  const double um = 1.0e-6;
  s.geom.half_separation_c = length_to_natural(50.0 * um);
  s.geom.longitudinal_l = length_to_natural(50.0 * std::sqrt(3.0) * um);
  s.geom.half_middle_d = length_to_natural(50.0 * um);
  s.geom.speed_v =
      speed_from_kinetic_energy(5.0e3, constants::electron_mass_ev).beta;
  s.field_kind = FieldKind::plane_wave;
  s.omega = wavelength_um_to_omega(100.0);
  s.amplitude_E0 = std::sqrt(2.0 * flux_to_energy_density_natural(1.0));
  return s;
}

}  // namespace abcontrast
