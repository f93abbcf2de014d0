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
#include <iosfwd>
#include <string>
#include <vector>

#include "abcontrast/phase.hpp"
#include "abcontrast/scenario.hpp"

namespace abcontrast {

/// Which physical knob the scan turns. Values are given in the same
/// laboratory units as the run configuration; the conversion into natural
/// units happens per grid point.
enum class SweptParameter {
  amplitude,        // field amplitude, V/m
  flux,             // energy flux, W/cm^2
  wavelength,       // vacuum wavelength, um
  half_separation,  // geometry half separation c, um
  beam_width,       // gaussian sigma, um
};

enum class Spacing { linear, logarithmic };

enum class Engine { numeric, closed_form, both };

const char* swept_parameter_name(SweptParameter p);
const char* engine_name(Engine e);

struct ScanRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n_points = 0;
  Spacing spacing = Spacing::linear;
};

struct ScanSpec {
  SweptParameter swept_parameter = SweptParameter::amplitude;
  ScanRange range;
  Scenario base_scenario;
  Engine engine = Engine::closed_form;
  QuadratureSettings quadrature;

  /// Throws std::invalid_argument unless lo < hi, n_points >= 2, and
  /// lo > 0 for logarithmic spacing.
  void validate() const;
};

struct ScanRow {
  double parameter_value = 0.0;  ///< laboratory units of the swept knob
  double abs_C = 0.0;
  double upsilon_analytic = 0.0;
  double upsilon_oracle = 0.0;  ///< real part; the imaginary part is noise
  double upsilon_gaussian_model = 0.0;
  double engine_disagreement = 0.0;  ///< relative |dC|; 0 unless engine=both
  bool quadrature_converged = true;
};

struct ZeroCrossing {
  double parameter_value_at_zero = 0.0;
  double abs_C_at_zero = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::size_t refined_by = 0;  ///< bisection iterations
};

struct RevivalSummary {
  std::size_t count = 0;
  std::vector<double> peak_parameters;
  std::vector<double> peak_values;  ///< |upsilon| at each local maximum
};

/// The swept scenario at one grid value; exposed so zero refinement and the
/// tests evaluate exactly what the scan evaluates.
Scenario scenario_at(const ScanSpec& spec, double parameter_value);

/// Evaluates the grid. Points run concurrently (spec.quadrature.threads
/// workers, 0 = environment default) with results written by index, so the
/// table is identical for every worker count. Per-point quadrature failures
/// are recorded in-row and the scan continues.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

/// Locates sign changes of upsilon(parameter) on the grid and refines each
/// bracket by bisection on the scan engine until |upsilon| <= 1e-9.
std::vector<ZeroCrossing> find_contrast_zeros(const ScanSpec& spec);

/// Same, reusing an already computed grid (rows must come from run_scan on
/// the same spec).
std::vector<ZeroCrossing> find_contrast_zeros(
    const ScanSpec& spec, const std::vector<ScanRow>& rows);

/// Local maxima of |upsilon_analytic| after the first sign change.
/// Requires at least 3 rows.
RevivalSummary find_revivals(const std::vector<ScanRow>& rows);
std::size_t count_revivals(const std::vector<ScanRow>& rows);

/// CSV table: header plus one line per row, every number formatted as the
/// shortest decimal string that parses back to the same binary value.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// Human-readable summary of a finished scan: grid, zeros, revivals.
std::string scan_summary(const ScanSpec& spec,
                         const std::vector<ScanRow>& rows,
                         const std::vector<ZeroCrossing>& zeros);

}  // namespace abcontrast
