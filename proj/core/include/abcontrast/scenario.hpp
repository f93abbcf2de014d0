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

#pragma once

#include <memory>

#include "abcontrast/fields.hpp"
#include "abcontrast/geometry.hpp"

namespace abcontrast {

enum class FieldKind { null_field, plane_wave, gaussian_beam };

/// A complete evaluable configuration in natural units: one path geometry
/// plus one field. Both the quadrature engine and the closed forms consume
/// this type, which keeps cross-validation honest.
struct Scenario {
  TrapezoidGeometry geom;
  FieldKind field_kind = FieldKind::plane_wave;
  double amplitude_E0 = 0.0;  ///< eV^2; ignored for null_field
  double omega = 0.0;         ///< eV;   ignored for null_field
  double sigma = 0.0;         ///< eV^-1; gaussian_beam only
  double center_x = 0.0;      ///< eV^-1; gaussian_beam only
  double center_z = 0.0;      ///< eV^-1; gaussian_beam only

  void validate() const;
  std::unique_ptr<FieldConfig> make_field() const;
  TrajectoryPair make_trajectory() const;
};

/// Closed-form |C| for the scenario's field kind; 0 for a null field.
double closed_form_abs_C(const Scenario& scenario);

/// The built-in benchmark configuration: 5 keV electrons on the symmetric
/// trapezoid with c = 50 um, l = 50*sqrt(3) um (so 2c/s = 1), d = 50 um,
/// in a 1 W/cm^2 plane wave of 100 um wavelength.
Scenario benchmark_scenario();

}  // namespace abcontrast
