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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "abcontrast/fields.hpp"
#include "abcontrast/geometry.hpp"

namespace abcontrast {

/// Controls for the surface quadrature of compute_C().
struct QuadratureSettings {
  /// Target relative accuracy of the complex amplitude.
  double relative_tolerance = 1e-9;
  /// Minimum time panels per field period 2*pi/omega.
  std::size_t min_samples_per_period = 64;
  /// Maximum number of panel-doubling refinements before giving up.
  std::size_t max_subdivisions = 8;
  /// Worker threads for panel evaluation; 0 picks the environment default.
  /// Results are bit-identical for every thread count.
  unsigned threads = 0;
};

/// Result of the surface quadrature: the complex amplitude C = A + i*B of
/// the sinusoidal emission-time dependence of the accumulated phase.
struct PhaseResult {
  std::complex<double> C{0.0, 0.0};
  double A = 0.0;  ///< real part of C, stored redundantly
  double B = 0.0;  ///< imaginary part of C, stored redundantly
  /// Relative difference between the two finest refinement levels.
  double quadrature_error_estimate = 0.0;
  /// Total integrand (field) evaluations across all accepted levels.
  std::size_t nodes_used = 0;
  /// L1 mass of the time integrand divided by |C|; large values mean the
  /// ramp and plateau contributions cancel almost completely.
  double cancellation_ratio = 0.0;
  /// Set when cancellation_ratio exceeds 1e6.
  bool cancellation_warning = false;
};

/// Thrown when the panel-doubling refinement fails to reach the requested
/// tolerance; carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, PhaseResult best)
      : std::runtime_error(what), best_(best) {}

  const PhaseResult& best_estimate() const noexcept { return best_; }

 private:
  PhaseResult best_;
};

/// Computes C = e * integral dt e^(-i omega t) integral dz envelope(x(t),0,z)
/// over the spacetime region between the equal-time chords of the pair.
///
/// Oscillatory fields only (omega > 0); static fields take static_phase().
/// Throws std::invalid_argument for bad settings, std::domain_error for a
/// non-oscillatory field, QuadratureError on non-convergence.
PhaseResult compute_C(const TrajectoryPair& pair, const FieldConfig& field,
                      const QuadratureSettings& settings = {});

/// Instantaneous phase for emission time t0: Re(C * e^(-i omega t0)).
/// Its maximum over t0 is |C|.
double phase_at_emission(const PhaseResult& result, double omega, double t0);

/// Phase accumulated in a static field: e * integral dt dz Re(envelope).
/// No emission-time dependence, hence no contrast loss (pure fringe shift).
double static_phase(const TrajectoryPair& pair, const FieldConfig& field,
                    double relative_tolerance = 1e-9);

}  // namespace abcontrast
