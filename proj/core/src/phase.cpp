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

#include "abcontrast/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "abcontrast/compensated.hpp"
#include "abcontrast/parallel.hpp"
#include "abcontrast/units.hpp"
#include "gauss_legendre.hpp"

namespace abcontrast {

namespace {

constexpr double k_two_pi = 2.0 * std::numbers::pi;
constexpr int k_max_simpson_depth = 28;
constexpr double k_cancellation_limit = 1e6;
// |C| below this fraction of the L1 mass is rounding noise of the
// cancelling ramp and plateau contributions; no relative target can be met
// beneath it in double precision.
constexpr double k_cancellation_noise = 1e-13;

struct ZOutcome {
  std::complex<double> value{0.0, 0.0};
  std::size_t evals = 0;
};

std::complex<double> simpson_recurse(const FieldConfig& field, double x,
                                     double a, std::complex<double> fa,
                                     double b, std::complex<double> fb,
                                     double m, std::complex<double> fm,
                                     std::complex<double> whole,
                                     double abs_tol, int depth,
                                     std::size_t& evals) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const std::complex<double> flm = field.phasor(x, 0.0, lm);
  const std::complex<double> frm = field.phasor(x, 0.0, rm);
  evals += 2;
  const std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const std::complex<double> delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol) {
    return left + right + delta / 15.0;  // Richardson correction
  }
  return simpson_recurse(field, x, a, fa, m, fm, lm, flm, left,
                         0.5 * abs_tol, depth - 1, evals) +
         simpson_recurse(field, x, m, fm, b, fb, rm, frm, right,
                         0.5 * abs_tol, depth - 1, evals);
}

// Adaptive Simpson over the chord [z_lo, z_hi] at fixed x. The initial
// partition resolves the field's envelope scale; refinement then targets
// rel_tol relative to the crude composite estimate.
ZOutcome integrate_chord(const FieldConfig& field, double x, double z_lo,
                         double z_hi, double rel_tol) {
  ZOutcome out;
  if (z_lo == z_hi) return out;

  const double span = std::abs(z_hi - z_lo);
  const double scale = field.envelope_scale();
  std::size_t n0 = 8;
  if (std::isfinite(scale) && scale > 0.0) {
    n0 = static_cast<std::size_t>(
        std::clamp(std::ceil(4.0 * span / scale), 8.0, 4096.0));
  }

  const double h = (z_hi - z_lo) / static_cast<double>(n0);
  std::vector<std::complex<double>> f(2 * n0 + 1);
  for (std::size_t i = 0; i <= 2 * n0; ++i) {
    f[i] = field.phasor(x, 0.0, z_lo + 0.5 * h * static_cast<double>(i));
  }
  out.evals += 2 * n0 + 1;

  std::complex<double> crude{0.0, 0.0};
  for (std::size_t i = 0; i < n0; ++i) {
    crude += h / 6.0 * (f[2 * i] + 4.0 * f[2 * i + 1] + f[2 * i + 2]);
  }

  const double abs_tol = rel_tol * std::abs(crude) / static_cast<double>(n0);
  CompensatedComplexSum sum;
  for (std::size_t i = 0; i < n0; ++i) {
    const double a = z_lo + h * static_cast<double>(i);
    const double b = a + h;
    const double m = 0.5 * (a + b);
    const std::complex<double> piece =
        h / 6.0 * (f[2 * i] + 4.0 * f[2 * i + 1] + f[2 * i + 2]);
    sum.add(simpson_recurse(field, x, a, f[2 * i], b, f[2 * i + 2], m,
                            f[2 * i + 1], piece, abs_tol,
                            k_max_simpson_depth, out.evals));
  }
  out.value = sum.value();
  return out;
}

struct Panel {
  double t0 = 0.0;
  double t1 = 0.0;
};

// Fixed panel partition: every breakpoint interval is split uniformly so
// that both the field period and the envelope transit are resolved, then
// multiplied by the refinement factor. The partition depends only on the
// inputs, never on the thread count.
std::vector<Panel> build_panels(const TrajectoryPair& pair, double omega,
                                std::size_t samples_per_period,
                                double envelope_scale, std::size_t mult,
                                bool oscillatory) {
  std::vector<Panel> panels;
  const std::vector<double>& breaks = pair.breakpoint_times();
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const double span = b - a;
    if (!(span > 0.0)) continue;

    double n = oscillatory
                   ? std::ceil(static_cast<double>(samples_per_period) *
                               span * omega / k_two_pi)
                   : 16.0;
    if (std::isfinite(envelope_scale) && envelope_scale > 0.0) {
      const double dx = std::abs(pair.chord_at(b).x_common -
                                 pair.chord_at(a).x_common);
      // Capped so a degenerate envelope scale cannot demand unbounded work;
      // past the cap the refinement loop decides, and fails loudly if the
      // feature stays unresolved.
      n = std::max(n, std::min(std::ceil(4.0 * dx / envelope_scale), 16384.0));
    }
    const std::size_t count =
        static_cast<std::size_t>(std::max(1.0, n)) * mult;

    const double h = span / static_cast<double>(count);
    for (std::size_t k = 0; k < count; ++k) {
      panels.push_back({a + h * static_cast<double>(k),
                        a + h * static_cast<double>(k + 1)});
    }
  }
  return panels;
}

struct LevelOutcome {
  std::complex<double> integral{0.0, 0.0};  // without the charge factor
  double l1 = 0.0;                          // integral dt |I_z(t)|
  std::size_t evals = 0;
};

// One refinement level: evaluate every panel independently (optionally in
// parallel, results stored by index), then reduce sequentially in panel
// order with compensated sums so the result is bit-stable.
LevelOutcome evaluate_level(const TrajectoryPair& pair,
                            const FieldConfig& field,
                            const std::vector<Panel>& panels, double omega,
                            bool oscillatory, double rel_tol,
                            unsigned threads) {
  std::vector<std::complex<double>> values(panels.size());
  std::vector<double> l1(panels.size());
  std::vector<std::size_t> evals(panels.size());

  parallel_for(
      panels.size(),
      [&](std::size_t i) {
        const Panel p = panels[i];
        const double h = p.t1 - p.t0;
        const double mid = 0.5 * (p.t0 + p.t1);
        CompensatedComplexSum sum;
        CompensatedSum mass;
        std::size_t n_eval = 0;
        for (std::size_t j = 0; j < detail::gl_order; ++j) {
          const double t = mid + 0.5 * h * detail::gl_nodes[j];
          const ChordSample chord = pair.chord_at(t);
          const ZOutcome zi = integrate_chord(field, chord.x_common,
                                              chord.z_lower, chord.z_upper,
                                              rel_tol);
          n_eval += zi.evals;
          const double w = 0.5 * h * detail::gl_weights[j];
          const std::complex<double> rot =
              oscillatory ? std::polar(1.0, -omega * t)
                          : std::complex<double>{1.0, 0.0};
          sum.add(w * rot * zi.value);
          mass.add(w * std::abs(zi.value));
        }
        values[i] = sum.value();
        l1[i] = mass.value();
        evals[i] = n_eval;
      },
      threads);

  LevelOutcome out;
  CompensatedComplexSum total;
  CompensatedSum total_l1;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    total.add(values[i]);
    total_l1.add(l1[i]);
    out.evals += evals[i];
  }
  out.integral = total.value();
  out.l1 = total_l1.value();
  return out;
}

PhaseResult assemble(std::complex<double> integral, double l1,
                     double rel_err, std::size_t evals) {
  PhaseResult r;
  const double e = constants::elementary_charge_natural;
  r.C = e * integral;
  r.A = r.C.real();
  r.B = r.C.imag();
  r.quadrature_error_estimate = rel_err;
  r.nodes_used = evals;
  const double mag = std::abs(r.C);
  const double mass = e * l1;
  r.cancellation_ratio = (mag > 0.0) ? mass / mag
                                     : (mass > 0.0
                                            ? std::numeric_limits<double>::infinity()
                                            : 0.0);
  r.cancellation_warning = r.cancellation_ratio > k_cancellation_limit;
  return r;
}

}  // namespace

PhaseResult compute_C(const TrajectoryPair& pair, const FieldConfig& field,
                      const QuadratureSettings& settings) {
  if (!(settings.relative_tolerance > 0.0)) {
    throw std::invalid_argument("relative_tolerance must be > 0");
  }
  if (settings.min_samples_per_period < 8) {
    throw std::invalid_argument("min_samples_per_period must be >= 8");
  }
  const double omega = field.omega();
  if (!(omega > 0.0)) {
    throw std::domain_error(
        "compute_C requires an oscillatory field (omega > 0); "
        "use static_phase for static fields");
  }

  const double scale = field.envelope_scale();
  const double rel_tol = settings.relative_tolerance;

  std::size_t mult = 1;
  std::vector<Panel> panels = build_panels(
      pair, omega, settings.min_samples_per_period, scale, mult, true);
  LevelOutcome prev = evaluate_level(pair, field, panels, omega, true,
                                     rel_tol, settings.threads);
  std::size_t evals = prev.evals;

  double rel_err = std::numeric_limits<double>::infinity();
  for (std::size_t iter = 0; iter <= settings.max_subdivisions; ++iter) {
    mult *= 2;
    panels = build_panels(pair, omega, settings.min_samples_per_period,
                          scale, mult, true);
    const LevelOutcome fine = evaluate_level(pair, field, panels, omega,
                                             true, rel_tol,
                                             settings.threads);
    evals += fine.evals;

    // Exact zeros (null field, resonant cancellation) must not chase an
    // unreachable relative target, so the error scale is floored at the
    // rounding noise of the L1 mass.
    const double err = std::abs(fine.integral - prev.integral);
    const double err_scale = std::max(
        std::abs(fine.integral), k_cancellation_noise * fine.l1 / rel_tol);
    rel_err = (err_scale > 0.0) ? err / err_scale : 0.0;
    if (rel_err <= rel_tol) {
      return assemble(fine.integral, fine.l1, rel_err, evals);
    }
    prev = fine;
  }

  PhaseResult best = assemble(prev.integral, prev.l1, rel_err, evals);
  throw QuadratureError(
      "time quadrature did not converge: achieved relative error " +
          std::to_string(rel_err) + " > requested " +
          std::to_string(rel_tol),
      best);
}

double phase_at_emission(const PhaseResult& result, double omega,
                         double t0) {
  return (result.C * std::polar(1.0, -omega * t0)).real();
}

double static_phase(const TrajectoryPair& pair, const FieldConfig& field,
                    double relative_tolerance) {
  if (!(relative_tolerance > 0.0)) {
    throw std::invalid_argument("relative_tolerance must be > 0");
  }
  const double scale = field.envelope_scale();

  std::size_t mult = 1;
  std::vector<Panel> panels =
      build_panels(pair, 0.0, 0, scale, mult, false);
  LevelOutcome prev = evaluate_level(pair, field, panels, 0.0, false,
                                     relative_tolerance, 1);
  // Best-effort refinement: the integrand is smooth, so a fixed doubling
  // budget always suffices in practice and this path reports no errors.
  for (int iter = 0; iter < 12; ++iter) {
    mult *= 2;
    panels = build_panels(pair, 0.0, 0, scale, mult, false);
    const LevelOutcome fine = evaluate_level(pair, field, panels, 0.0,
                                             false, relative_tolerance, 1);
    const double err = std::abs(fine.integral - prev.integral);
    const double err_scale =
        std::max(std::abs(fine.integral), 1e-12 * fine.l1);
    prev = fine;
    if (err_scale == 0.0 || err <= relative_tolerance * err_scale) break;
  }
  return constants::elementary_charge_natural * prev.integral.real();
}

}  // namespace abcontrast
