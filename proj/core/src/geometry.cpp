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

#include "abcontrast/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace abcontrast {

namespace {

// Linear interpolation of a path at time t. The segment index is found by
// binary search; t must lie within the path's time span.
SpacetimeVertex interpolate(const std::vector<SpacetimeVertex>& path,
                            double t) {
  auto it = std::upper_bound(
      path.begin(), path.end(), t,
      [](double value, const SpacetimeVertex& v) { return value < v.t; });
  if (it == path.begin()) return path.front();
  if (it == path.end()) return path.back();
  const SpacetimeVertex& a = *(it - 1);
  const SpacetimeVertex& b = *it;
  const double w = (t - a.t) / (b.t - a.t);
  return {t, a.x + w * (b.x - a.x), a.y + w * (b.y - a.y),
          a.z + w * (b.z - a.z)};
}

void validate_path(const std::vector<SpacetimeVertex>& path,
                   const char* name) {
  if (path.size() < 2) {
    throw std::invalid_argument(std::string(name) +
                                " path needs at least two vertices");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].y != 0.0) {
      throw std::invalid_argument(std::string(name) +
                                  " path leaves the y = 0 plane");
    }
    if (i == 0) continue;
    const double dt = path[i].t - path[i - 1].t;
    if (!(dt > 0.0)) {
      throw std::invalid_argument(std::string(name) +
                                  " path times must strictly increase");
    }
    const double dist = std::hypot(path[i].x - path[i - 1].x,
                                   path[i].z - path[i - 1].z);
    if (!(dist / dt < 1.0)) {
      throw std::invalid_argument(std::string(name) +
                                  " path segment speed reaches 1");
    }
  }
}

bool same_vertex(const SpacetimeVertex& a, const SpacetimeVertex& b) {
  return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
}

}  // namespace

void TrapezoidGeometry::validate() const {
  if (!(half_separation_c > 0.0) || !(longitudinal_l > 0.0)) {
    throw std::invalid_argument("c and l must be > 0");
  }
  if (!(half_middle_d >= 0.0)) {
    throw std::invalid_argument("d must be >= 0");
  }
  if (!(speed_v > 0.0) || !(speed_v < 1.0)) {
    throw std::invalid_argument("speed must satisfy 0 < v < 1");
  }
}

TrajectoryPair::TrajectoryPair(std::vector<SpacetimeVertex> upper,
                               std::vector<SpacetimeVertex> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  validate_path(upper_, "upper");
  validate_path(lower_, "lower");

  if (!same_vertex(upper_.front(), lower_.front()) ||
      !same_vertex(upper_.back(), lower_.back())) {
    throw std::invalid_argument("paths must share first and last vertices");
  }

  breakpoints_.reserve(upper_.size() + lower_.size());
  for (const auto& v : upper_) breakpoints_.push_back(v.t);
  for (const auto& v : lower_) breakpoints_.push_back(v.t);
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()),
                     breakpoints_.end());

  // The surface parametrization uses equal-time chords at fixed x; a pair
  // whose paths disagree in x at some time cannot be integrated that way.
  double scale = 1.0;
  for (const auto& v : upper_) scale = std::max(scale, std::abs(v.x));
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    for (double t : {breakpoints_[i],
                     0.5 * (breakpoints_[i] + breakpoints_[i + 1])}) {
      const double xu = interpolate(upper_, t).x;
      const double xl = interpolate(lower_, t).x;
      if (std::abs(xu - xl) > 1e-9 * scale) {
        throw std::invalid_argument(
            "unsupported geometry: paths differ in x at equal times");
      }
    }
  }
}

ChordSample TrajectoryPair::chord_at(double t) const {
  const double t0 = upper_.front().t;
  const double t1 = upper_.back().t;
  if (!(t >= t0 && t <= t1)) {
    throw std::domain_error("chord time outside the flight interval");
  }
  const SpacetimeVertex u = interpolate(upper_, t);
  const SpacetimeVertex l = interpolate(lower_, t);
  return {t, u.x, u.z, l.z};
}

SeparationProfile TrajectoryPair::separation_profile() const {
  SeparationProfile p;
  p.times = breakpoints_;
  p.values.reserve(breakpoints_.size());
  for (double t : breakpoints_) {
    const ChordSample c = chord_at(t);
    p.values.push_back(c.z_upper - c.z_lower);
  }
  return p;
}

TrajectoryPair TrajectoryPair::swapped() const {
  return TrajectoryPair(lower_, upper_);
}

TrajectoryPair TrajectoryPair::time_shifted(double dt) const {
  auto shift = [dt](std::vector<SpacetimeVertex> path) {
    for (auto& v : path) v.t += dt;
    return path;
  };
  return TrajectoryPair(shift(upper_), shift(lower_));
}

double SeparationProfile::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

double SeparationProfile::integral() const {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    sum += 0.5 * (values[i] + values[i + 1]) * (times[i + 1] - times[i]);
  }
  return sum;
}

double SeparationProfile::at(double t) const {
  auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return values.front();
  if (it == times.end()) return values.back();
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return values[i - 1] + w * (values[i] - values[i - 1]);
}

TrajectoryPair build_trapezoid(const TrapezoidGeometry& geom) {
  geom.validate();

  const double c = geom.half_separation_c;
  const double d = geom.half_middle_d;
  const double l = geom.longitudinal_l;
  const double theta = geom.ramp_time();
  const double plateau = geom.plateau_time();

  std::vector<SpacetimeVertex> upper;
  upper.push_back({0.0, -(d + l), 0.0, 0.0});
  upper.push_back({theta, -d, 0.0, c});
  if (plateau > 0.0) {
    upper.push_back({theta + plateau, d, 0.0, c});
  }
  upper.push_back({2.0 * theta + plateau, d + l, 0.0, 0.0});

  std::vector<SpacetimeVertex> lower = upper;
  for (auto& v : lower) v.z = -v.z;

  return TrajectoryPair(std::move(upper), std::move(lower));
}

}  // namespace abcontrast
