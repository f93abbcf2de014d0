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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abcontrast/phase.hpp"
#include "abcontrast/scenario.hpp"

namespace abcontrast {

/// Run configurations are JSON objects whose keys carry their units, e.g.
///
///   {
///     "geometry": { "half_separation_um": 50.0, "longitudinal_um": 86.6,
///                   "half_middle_um": 50.0, "kinetic_energy_keV": 5.0 },
///     "field":    { "type": "plane_wave", "flux_W_cm2": 1.0,
///                   "wavelength_um": 100.0 },
///     "quadrature":  { "relative_tolerance": 1e-9 },
///     "measurement": { "integration_time_s": 1.0 },
///     "output":      { "format": "csv" }
///   }
///
/// Unknown keys are rejected so a misspelled (or wrongly united) key can
/// never be silently ignored.

struct GeometryConfig {
  double half_separation_um = 0.0;
  double longitudinal_um = 0.0;
  double half_middle_um = 0.0;
  /// Exactly one of the two must be given.
  std::optional<double> kinetic_energy_kev;
  std::optional<double> speed_beta;
};

struct FieldBlock {
  std::string type = "plane_wave";  ///< plane_wave | gaussian_beam | null
  /// Exactly one of the two must be given for non-null fields.
  std::optional<double> amplitude_v_per_m;
  std::optional<double> flux_w_cm2;
  std::optional<double> wavelength_um;  ///< required for non-null fields
  std::optional<double> sigma_um;       ///< required for gaussian_beam
  double center_x_um = 0.0;
  double center_z_um = 0.0;
};

struct QuadratureBlock {
  double relative_tolerance = 1e-9;
  std::size_t min_samples_per_period = 64;
  std::size_t max_subdivisions = 8;
};

struct MeasurementBlock {
  std::optional<double> integration_time_s;
};

struct OutputBlock {
  std::optional<std::string> path;
  std::string format = "csv";  ///< csv | structured
};

struct RunConfig {
  GeometryConfig geometry;
  FieldBlock field;
  QuadratureBlock quadrature;
  MeasurementBlock measurement;
  OutputBlock output;
};

/// Parses a configuration document. Violations (syntax, unknown keys,
/// missing or conflicting fields) throw ParseError naming the offending
/// block and key.
RunConfig parse_run_config(const std::string& text);

/// Reads and parses a configuration file; unreadable files throw IoError.
RunConfig load_run_config(const std::string& path);

/// Serializes back to the configuration format. parse(serialize(parse(x)))
/// is equivalent to parse(x).
std::string serialize_run_config(const RunConfig& config);

/// A configuration converted to natural units and ready to evaluate.
/// Warnings are physics advisories (relativistic speed, beam-width
/// validity, field period vs integration time); they never alter values.
struct RealizedConfig {
  Scenario scenario;
  QuadratureSettings quadrature;
  std::vector<std::string> warnings;
  std::optional<double> integration_time_s;
  OutputBlock output;
};

RealizedConfig realize(const RunConfig& config);

}  // namespace abcontrast
