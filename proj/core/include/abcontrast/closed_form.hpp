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

#include "abcontrast/geometry.hpp"

namespace abcontrast {

/// Plane-wave field over a trapezoid path pair, natural units throughout.
struct PlaneWaveScenario {
  TrapezoidGeometry geom;
  double amplitude_E0 = 0.0;  ///< field amplitude, eV^2
  double omega = 0.0;         ///< angular frequency, eV

  /// Throws std::domain_error unless geometry is valid, amplitude_E0 >= 0
  /// and omega > 0.
  void validate() const;
};

/// Gaussian-envelope beam centered on the symmetry point of the path pair.
struct GaussianScenario {
  TrapezoidGeometry geom;
  double amplitude_E0 = 0.0;  ///< peak amplitude, eV^2
  double omega = 0.0;         ///< angular frequency, eV
  double sigma = 0.0;         ///< beam width, eV^-1

  void validate() const;
};

/// Physics advisories for the Gaussian closed form; the expression assumes
/// a beam narrower than the path separation and the plateau half-length.
struct GaussianValidity {
  bool sigma_exceeds_2c = false;
  bool sigma_exceeds_2d = false;
};

/// Gaussian closed-form value plus its validity flags. The value is always
/// returned; the flags never alter it.
struct GaussianClosedForm {
  double value = 0.0;
  GaussianValidity validity;
};

/// Closed-form |C| amplitude for a plane wave:
///   2 e E0 c (T + Theta) sinc(omega Theta / 2) sinc(omega (T + Theta) / 2)
/// which is the standard product form 4 e E0 (2c / (omega^2 Theta)) sin sin
/// rewritten to stay finite and accurate through omega -> 0.
double planewave_C(const PlaneWaveScenario& scenario);

/// Emission-phase- and geometry-phase-averaged |C|^2 for a plane wave of
/// mean energy density rho: 8 e^2 rho (2c / (omega^2 Theta))^2.
double planewave_C2_averaged(const TrapezoidGeometry& geom, double omega,
                             double rho);

/// Mean energy density of a plane wave of amplitude E0: rho = E0^2 / 2.
double energy_density_from_amplitude(double amplitude_E0);

/// Average |C|^2 in laboratory units, normalized to 1 at the reference
/// point (5 keV, 1 W/cm^2, 2c/s = 1, 100 um):
///   (E_k / 5 keV) (flux / 1 W/cm^2) (2c/s)^2 (lambda / 100 um)^4
/// Throws std::domain_error on nonpositive inputs. ratio_2c_over_s > 1 is
/// geometrically impossible; callers should warn (see cli), the value is
/// still returned.
double planewave_C2_parametric(double kinetic_energy_kev, double flux_w_cm2,
                               double ratio_2c_over_s, double lambda_um);

/// Gaussian-beam closed form
///   -(8 sqrt(pi) e E0 d^2 / (omega^2 T sigma)) (1 - cos theta)
///     cos(omega T / 2) exp(-d^2 / sigma^2)
/// with theta the path corner angle. Requires d > 0 (finite plateau).
GaussianClosedForm gaussian_C(const GaussianScenario& scenario);

/// Mean photon number density n = rho / omega, natural units (eV^3).
double photon_density(double rho, double omega);

/// Thomson-scattering mean free path in meters for a beam of the given
/// flux and wavelength: l = omega / (sigma_T rho) with rho = flux / c.
double thomson_mfp(double flux_w_cm2, double lambda_um);

}  // namespace abcontrast
