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

#include "abcontrast/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace abcontrast {

namespace {

using namespace constants;

void require_nonnegative(double v, const char* what) {
  if (std::isnan(v) || v < 0.0) {
    throw std::domain_error(std::string(what) + " must be >= 0, got " +
                            std::to_string(v));
  }
}

// eV/m^3 per (J/m^3), times (hbar c)^3 to go from per-m^3 to eV^3.
constexpr double j_m3_to_ev4 =
    (1.0 / joule_per_ev) * hbar_c_ev_m * hbar_c_ev_m * hbar_c_ev_m;

}  // namespace

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::electron_volt: return "eV";
    case Unit::kilo_electron_volt: return "keV";
    case Unit::watt_per_cm2: return "W/cm^2";
    case Unit::micrometer: return "um";
    case Unit::meter: return "m";
    case Unit::second: return "s";
    case Unit::volt_per_meter: return "V/m";
    case Unit::dimensionless: return "1";
  }
  return "?";
}

double length_to_natural(double meters) {
  require_nonnegative(meters, "length");
  return meters / hbar_c_ev_m;
}

double length_from_natural(double natural) {
  require_nonnegative(natural, "length");
  return natural * hbar_c_ev_m;
}

double time_to_natural(double seconds) {
  require_nonnegative(seconds, "time");
  return seconds * speed_of_light_m_s / hbar_c_ev_m;
}

double time_from_natural(double natural) {
  require_nonnegative(natural, "time");
  return natural * hbar_c_ev_m / speed_of_light_m_s;
}

double flux_to_energy_density_natural(double flux_w_cm2) {
  require_nonnegative(flux_w_cm2, "flux");
  // W/cm^2 -> W/m^2 -> J/m^3 (divide by c) -> eV^4.
  const double si_density = flux_w_cm2 * 1.0e4 / speed_of_light_m_s;
  return si_density * j_m3_to_ev4;
}

double energy_density_natural_to_flux(double rho_ev4) {
  require_nonnegative(rho_ev4, "energy density");
  return rho_ev4 / j_m3_to_ev4 * speed_of_light_m_s * 1.0e-4;
}

double amplitude_vpm_to_natural(double e0_v_per_m) {
  require_nonnegative(e0_v_per_m, "field amplitude");
  // rho = eps0 E0^2 / 2 in SI equals E0_nat^2 / 2 in natural units.
  const double rho_si = 0.5 * vacuum_permittivity_si * e0_v_per_m * e0_v_per_m;
  return std::sqrt(2.0 * rho_si * j_m3_to_ev4);
}

double amplitude_natural_to_vpm(double e0_natural) {
  require_nonnegative(e0_natural, "field amplitude");
  const double rho_si = 0.5 * e0_natural * e0_natural / j_m3_to_ev4;
  return std::sqrt(2.0 * rho_si / vacuum_permittivity_si);
}

double wavelength_um_to_omega(double lambda_um) {
  if (!(lambda_um > 0.0)) {
    throw std::domain_error("wavelength must be > 0");
  }
  return 2.0 * std::numbers::pi * hbar_c_ev_m / (lambda_um * 1.0e-6);
}

double omega_to_wavelength_um(double omega_ev) {
  if (!(omega_ev > 0.0)) {
    throw std::domain_error("angular frequency must be > 0");
  }
  return 2.0 * std::numbers::pi * hbar_c_ev_m / omega_ev * 1.0e6;
}

double number_density_from_natural(double n_ev3) {
  require_nonnegative(n_ev3, "number density");
  const double per_meter = 1.0 / hbar_c_ev_m;  // 1 eV = this many 1/m
  return n_ev3 * per_meter * per_meter * per_meter;
}

double to_natural(const LabQuantity& q) {
  switch (q.unit) {
    case Unit::electron_volt: return q.value;
    case Unit::kilo_electron_volt: return q.value * 1.0e3;
    case Unit::watt_per_cm2: return flux_to_energy_density_natural(q.value);
    case Unit::micrometer: return length_to_natural(q.value * 1.0e-6);
    case Unit::meter: return length_to_natural(q.value);
    case Unit::second: return time_to_natural(q.value);
    case Unit::volt_per_meter: return amplitude_vpm_to_natural(q.value);
    case Unit::dimensionless: return q.value;
  }
  throw std::domain_error("unknown unit tag");
}

LabQuantity from_natural(double natural, Unit unit) {
  switch (unit) {
    case Unit::electron_volt: return {natural, unit};
    case Unit::kilo_electron_volt: return {natural * 1.0e-3, unit};
    case Unit::watt_per_cm2:
      return {energy_density_natural_to_flux(natural), unit};
    case Unit::micrometer: return {length_from_natural(natural) * 1.0e6, unit};
    case Unit::meter: return {length_from_natural(natural), unit};
    case Unit::second: return {time_from_natural(natural), unit};
    case Unit::volt_per_meter:
      return {amplitude_natural_to_vpm(natural), unit};
    case Unit::dimensionless: return {natural, unit};
  }
  throw std::domain_error("unknown unit tag");
}

SpeedResult speed_from_kinetic_energy(double kinetic_ev, double mass_ev) {
  if (!(kinetic_ev > 0.0) || !(mass_ev > 0.0)) {
    throw std::domain_error("kinetic energy and mass must be > 0");
  }
  SpeedResult r;
  r.beta = std::sqrt(2.0 * kinetic_ev / mass_ev);
  r.relativistic_flag = r.beta > 0.3;
  return r;
}

double kinetic_energy_from_speed(double beta, double mass_ev) {
  if (!(beta > 0.0) || !(mass_ev > 0.0)) {
    throw std::domain_error("speed and mass must be > 0");
  }
  return 0.5 * mass_ev * beta * beta;
}

}  // namespace abcontrast
