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

#ifndef ABCONTRAST_GEOMETRY_HPP
#define ABCONTRAST_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace abcontrast {

/// Symmetric two-path interferometer geometry, all values in natural units.
/// Each electron path has three straight segments: diverge for a time Theta,
/// run parallel at half separation c for a time T, converge for another
/// Theta. The mean drift is along x, the separation along z (the field
/// polarization axis), and both paths lie in the y = 0 plane.
struct TrapezoidGeometry {
  double half_separation_c = 0.0;  // max |z| of either path (1/eV)
  double longitudinal_l = 0.0;     // x extent of a diverging segment (1/eV)
  double half_middle_d = 0.0;      // half the x extent of the parallel run
  double speed_v = 0.0;            // electron speed, dimensionless, < 1

  /// Length of a diverging segment, s = sqrt(c^2 + l^2).
  double segment_length() const {
    return std::hypot(half_separation_c, longitudinal_l);
  }
  /// Flight time of a diverging segment, Theta = s / v.
  double ramp_time() const { return segment_length() / speed_v; }
  /// Flight time of the parallel run, T = 2d / v.
  double plateau_time() const { return 2.0 * half_middle_d / speed_v; }
  /// Total flight time 2 Theta + T.
  double total_time() const { return 2.0 * ramp_time() + plateau_time(); }
  /// Corner deflection angle of a path, arctan(c / l).
  double path_angle() const {
    return std::atan2(half_separation_c, longitudinal_l);
  }
  /// Total path length of one electron, 2s + 2d.
  double path_length() const {
    return 2.0 * segment_length() + 2.0 * half_middle_d;
  }

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

struct SpacetimeVertex {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// One electron's simultaneous positions on the two paths, at fixed x.
struct ChordSample {
  double t = 0.0;
  double x_common = 0.0;
  double z_upper = 0.0;
  double z_lower = 0.0;
};

/// Piecewise-linear separation z_upper(t) - z_lower(t). Breakpoints are
/// sorted by time and the profile is linear between consecutive ones.
struct SeparationProfile {
  std::vector<double> times;
  std::vector<double> values;

  double max_value() const;
  /// Exact integral of the profile over its time span.
  double integral() const;
  double at(double t) const;
};

/// Two piecewise-linear spacetime paths with shared endpoints. The pair is
/// immutable after construction and safe to share across threads.
class TrajectoryPair {
 public:
  /// Builds a pair from explicit vertex lists. Both paths must start and end
  /// at identical vertices, have strictly increasing times over the same
  /// span, stay in the y = 0 plane, keep every segment speed below 1, and
  /// have equal x coordinates at equal times (the chord parametrization
  /// requires it). Violations throw std::invalid_argument.
  TrajectoryPair(std::vector<SpacetimeVertex> upper,
                 std::vector<SpacetimeVertex> lower);

  const std::vector<SpacetimeVertex>& upper_path() const { return upper_; }
  const std::vector<SpacetimeVertex>& lower_path() const { return lower_; }
  double total_time() const { return upper_.back().t - upper_.front().t; }
  double start_time() const { return upper_.front().t; }

  /// Union of both paths' vertex times, sorted and deduplicated. Quadrature
  /// panels never straddle these.
  const std::vector<double>& breakpoint_times() const { return breakpoints_; }

  /// Equal-time chord at t. Throws std::domain_error outside the time span.
  ChordSample chord_at(double t) const;

  SeparationProfile separation_profile() const;

  /// The same pair with upper and lower paths exchanged (flips the loop
  /// orientation).
  TrajectoryPair swapped() const;

  /// Both paths shifted by dt in time (geometry unchanged).
  TrajectoryPair time_shifted(double dt) const;

 private:
  std::vector<SpacetimeVertex> upper_;
  std::vector<SpacetimeVertex> lower_;
  std::vector<double> breakpoints_;
};

/// Builds the three-segment pair for a trapezoid geometry. The upper path
/// visits z = 0 -> c -> c -> 0 while x runs from -(d+l) to d+l; the lower
/// path is its z mirror. The midpoint of the parallel run sits at the
/// coordinate origin, which is also the default beam center.
TrajectoryPair build_trapezoid(const TrapezoidGeometry& geom);

}  // namespace abcontrast

#endif  // ABCONTRAST_GEOMETRY_HPP
