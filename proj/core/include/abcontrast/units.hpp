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

#ifndef ABCONTRAST_UNITS_HPP
#define ABCONTRAST_UNITS_HPP

#include <cmath>
#include <numbers>
#include <string_view>

namespace abcontrast {

/// Everything internal to this library is computed in Lorentz-Heaviside
/// natural units with hbar = c = 1 and all quantities carrying powers of eV:
///   energy, angular frequency      -> eV
///   length, time                   -> 1/eV
///   electric field amplitude       -> eV^2
///   energy density                 -> eV^4
///   charge                         -> dimensionless, e = sqrt(4 pi alpha)
/// Conversions to and from laboratory units happen only at API boundaries.
namespace constants {

/// CODATA fine-structure constant.
inline constexpr double fine_structure_alpha = 1.0 / 137.035999;
/// Electron rest mass in eV.
inline constexpr double electron_mass_ev = 510998.95;
/// hbar*c in eV*m; the single length<->inverse-energy conversion factor.
inline constexpr double hbar_c_ev_m = 1.97326980e-7;
/// Thomson cross section in m^2.
inline constexpr double thomson_cross_section_m2 = 6.6524587e-29;
/// Speed of light in m/s (exact).
inline constexpr double speed_of_light_m_s = 299792458.0;
/// 1 eV in joules (exact, SI 2019).
inline constexpr double joule_per_ev = 1.602176634e-19;
/// Vacuum permittivity in F/m.
inline constexpr double vacuum_permittivity_si = 8.8541878128e-12;

/// Elementary charge in Lorentz-Heaviside natural units, e^2 = 4 pi alpha.
inline const double elementary_charge_natural =
    std::sqrt(4.0 * std::numbers::pi * fine_structure_alpha);

/// Thomson cross section in natural units, 1/eV^2.
inline constexpr double thomson_cross_section_natural =
    thomson_cross_section_m2 / (hbar_c_ev_m * hbar_c_ev_m);

}  // namespace constants

/// Constants bundled as a value type for callers that want to thread an
/// explicit constant set through a computation.
struct PhysicalConstants {
  double fine_structure_alpha = constants::fine_structure_alpha;
  double electron_mass = constants::electron_mass_ev;
  double hbar_c = constants::hbar_c_ev_m;
  double thomson_cross_section = constants::thomson_cross_section_m2;
  double speed_of_light = constants::speed_of_light_m_s;
  double elementary_charge_natural = constants::elementary_charge_natural;
};

/// Unit tags understood at the API boundary.
enum class Unit {
  electron_volt,
  kilo_electron_volt,
  watt_per_cm2,      // energy flux; converts to energy density in eV^4
  micrometer,
  meter,
  second,
  volt_per_meter,    // field amplitude; converts to eV^2
  dimensionless,
};

std::string_view unit_name(Unit u);

/// A value with a unit tag. The tag selects the conversion path into the
/// natural-unit system.
struct LabQuantity {
  double value = 0.0;
  Unit unit = Unit::dimensionless;
};

/// Converts a tagged laboratory value into natural units. Throws
/// std::domain_error for values outside the unit's domain (negative lengths,
/// negative flux, ...).
double to_natural(const LabQuantity& q);

/// Inverse of to_natural for the same unit tag. Round-trips to better than
/// 1e-12 relative error.
LabQuantity from_natural(double natural, Unit unit);

/// Length in meters -> 1/eV.
double length_to_natural(double meters);
/// Length in 1/eV -> meters.
double length_from_natural(double natural);

/// Time in seconds -> 1/eV.
double time_to_natural(double seconds);
double time_from_natural(double natural);

/// Energy flux in W/cm^2 -> energy density in eV^4. Since c = 1 the wave's
/// energy density and energy flux are the same number in natural units.
double flux_to_energy_density_natural(double flux_w_cm2);
double energy_density_natural_to_flux(double rho_ev4);

/// Peak field amplitude in V/m -> eV^2, via the averaged plane-wave energy
/// density rho = eps0 E0^2 / 2 = E0_nat^2 / 2.
double amplitude_vpm_to_natural(double e0_v_per_m);
double amplitude_natural_to_vpm(double e0_natural);

/// Vacuum wavelength in micrometers -> angular frequency in eV.
double wavelength_um_to_omega(double lambda_um);
double omega_to_wavelength_um(double omega_ev);

/// Number density in eV^3 -> 1/m^3.
double number_density_from_natural(double n_ev3);

struct SpeedResult {
  double beta = 0.0;             // v/c
  bool relativistic_flag = false;  // set when beta > 0.3
};

/// Nonrelativistic speed from kinetic energy, v = sqrt(2 Ek / m). The flag is
/// raised when the approximation starts to degrade (beta > 0.3); the value is
/// still returned unmodified.
SpeedResult speed_from_kinetic_energy(double kinetic_ev, double mass_ev);

/// Kinetic energy in eV for a given nonrelativistic speed, Ek = m v^2 / 2.
double kinetic_energy_from_speed(double beta, double mass_ev);

}  // namespace abcontrast

#endif  // ABCONTRAST_UNITS_HPP
