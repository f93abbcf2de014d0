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

#ifndef ABCONTRAST_FIELDS_HPP
#define ABCONTRAST_FIELDS_HPP

#include <complex>
#include <limits>
#include <memory>

namespace abcontrast {

/// A linearly z-polarized field travelling along y,
///   E^z(x, y, z, t) = Re[ phasor(x, y, z) * exp(-i omega t) ]
/// with phasor(x, y, z) = envelope(x, z) * exp(i k y) and k = omega in
/// vacuum. The envelope is real and non-negative, so on the path plane
/// (y = 0) the phasor is real. Only E^z is modeled; on the y = 0 integration
/// slab the in-plane electric component and the normal magnetic component of
/// the wave drop out of the enclosed-flux phase, and the localized beam model
/// specifies E^z alone.
///
/// Implementations are immutable; evaluation is pure and thread-safe.
class FieldConfig {
 public:
  virtual ~FieldConfig() = default;

  /// Angular frequency in eV. Must be > 0 for the oscillatory phase
  /// engine; static envelopes go through the dedicated static branch.
  virtual double omega() const = 0;

  /// envelope(x, z) * exp(i k y).
  virtual std::complex<double> phasor(double x, double y, double z) const = 0;

  /// Characteristic transverse length of the envelope, used to seed the
  /// chord quadrature so narrow envelopes are never stepped over. Returns
  /// +infinity for envelopes without structure.
  virtual double envelope_scale() const {
    return std::numeric_limits<double>::infinity();
  }

  virtual std::unique_ptr<FieldConfig> clone() const = 0;
};

/// Instantaneous field value E^z(x, y, z, t); diagnostics only.
double field_in_time(const FieldConfig& field, double x, double y, double z,
                     double t);

/// Transverse plane wave of constant amplitude.
class PlaneWaveField final : public FieldConfig {
 public:
  /// amplitude in eV^2, omega in eV. Throws std::invalid_argument unless
  /// amplitude >= 0 and omega > 0.
  PlaneWaveField(double amplitude, double omega);

  double amplitude() const { return amplitude_; }
  double omega() const override { return omega_; }
  std::complex<double> phasor(double x, double y, double z) const override;
  std::unique_ptr<FieldConfig> clone() const override;

 private:
  double amplitude_;
  double omega_;
};

/// Localized beam with a Gaussian envelope in the path plane,
///   envelope(x, z) = E0 * exp(-((x-x0)^2 + (z-z0)^2) / sigma^2).
/// The center offset exists so the suppression of the phase with beam
/// displacement can be swept; it defaults to the interferometer center.
class GaussianBeamField final : public FieldConfig {
 public:
  GaussianBeamField(double amplitude, double omega, double sigma,
                    double center_x = 0.0, double center_z = 0.0);

  double amplitude() const { return amplitude_; }
  double sigma() const { return sigma_; }
  double center_x() const { return center_x_; }
  double center_z() const { return center_z_; }
  double omega() const override { return omega_; }
  std::complex<double> phasor(double x, double y, double z) const override;
  double envelope_scale() const override { return sigma_; }
  std::unique_ptr<FieldConfig> clone() const override;

 private:
  double amplitude_;
  double omega_;
  double sigma_;
  double center_x_;
  double center_z_;
};

/// Identically zero field; the no-decoherence baseline.
class NullField final : public FieldConfig {
 public:
  explicit NullField(double omega = 1.0) : omega_(omega) {}

  double omega() const override { return omega_; }
  std::complex<double> phasor(double, double, double) const override {
    return {0.0, 0.0};
  }
  std::unique_ptr<FieldConfig> clone() const override {
    return std::make_unique<NullField>(omega_);
  }

 private:
  double omega_;
};

}  // namespace abcontrast

#endif  // ABCONTRAST_FIELDS_HPP
