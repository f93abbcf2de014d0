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

#include "abcontrast/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace abcontrast {

double field_in_time(const FieldConfig& field, double x, double y, double z,
                     double t) {
  const std::complex<double> rotation =
      std::polar(1.0, -field.omega() * t);
  return (field.phasor(x, y, z) * rotation).real();
}

PlaneWaveField::PlaneWaveField(double amplitude, double omega)
    : amplitude_(amplitude), omega_(omega) {
  if (!(amplitude >= 0.0)) {
    throw std::invalid_argument("plane wave amplitude must be >= 0");
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("plane wave omega must be > 0");
  }
}

std::complex<double> PlaneWaveField::phasor(double, double y, double) const {
  // k = omega in vacuum.
  return amplitude_ * std::polar(1.0, omega_ * y);
}

std::unique_ptr<FieldConfig> PlaneWaveField::clone() const {
  return std::make_unique<PlaneWaveField>(*this);
}

GaussianBeamField::GaussianBeamField(double amplitude, double omega,
                                     double sigma, double center_x,
                                     double center_z)
    : amplitude_(amplitude),
      omega_(omega),
      sigma_(sigma),
      center_x_(center_x),
      center_z_(center_z) {
  if (!(amplitude >= 0.0)) {
    throw std::invalid_argument("beam amplitude must be >= 0");
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("beam omega must be > 0");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("beam width sigma must be > 0");
  }
}

std::complex<double> GaussianBeamField::phasor(double x, double y,
                                               double z) const {
  const double dx = x - center_x_;
  const double dz = z - center_z_;
  const double envelope =
      amplitude_ * std::exp(-(dx * dx + dz * dz) / (sigma_ * sigma_));
  return envelope * std::polar(1.0, omega_ * y);
}

std::unique_ptr<FieldConfig> GaussianBeamField::clone() const {
  return std::make_unique<GaussianBeamField>(*this);
}

}  // namespace abcontrast
