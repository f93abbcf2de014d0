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

#include "abcontrast/scan.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "abcontrast/contrast.hpp"
#include "abcontrast/numio.hpp"
#include "abcontrast/parallel.hpp"
#include "abcontrast/units.hpp"

namespace abcontrast {

namespace {

double grid_value(const ScanRange& r, std::size_t i) {
  const double f = static_cast<double>(i) /
                   static_cast<double>(r.n_points - 1);
  if (r.spacing == Spacing::logarithmic) {
    return r.lo * std::pow(r.hi / r.lo, f);
  }
  return r.lo + (r.hi - r.lo) * f;
}

double signed_um_to_natural(double um) {
  return um * 1.0e-6 / constants::hbar_c_ev_m;
}

// |C| at one scan point by the requested engine; failures downgrade to the
// best available estimate and clear *converged.
double engine_abs_C(const ScanSpec& spec, const Scenario& s,
                    Engine engine, bool* converged) {
  if (engine == Engine::closed_form) return closed_form_abs_C(s);
  QuadratureSettings settings = spec.quadrature;
  settings.threads = 1;  // scan parallelism lives at the point level
  try {
    return std::abs(
        compute_C(s.make_trajectory(), *s.make_field(), settings).C);
  } catch (const QuadratureError& err) {
    if (converged != nullptr) *converged = false;
    return std::abs(err.best_estimate().C);
  }
}

double upsilon_at(const ScanSpec& spec, double parameter_value) {
  const Scenario s = scenario_at(spec, parameter_value);
  const Engine primary =
      spec.engine == Engine::closed_form ? Engine::closed_form
                                         : Engine::numeric;
  return bessel_j0(engine_abs_C(spec, s, primary, nullptr));
}

}  // namespace

const char* swept_parameter_name(SweptParameter p) {
  switch (p) {
    case SweptParameter::amplitude: return "amplitude";
    case SweptParameter::flux: return "flux";
    case SweptParameter::wavelength: return "wavelength";
    case SweptParameter::half_separation: return "half_separation";
    case SweptParameter::beam_width: return "beam_width";
  }
  return "?";
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::numeric: return "numeric";
    case Engine::closed_form: return "closed_form";
    case Engine::both: return "both";
  }
  return "?";
}

void ScanSpec::validate() const {
  if (!(range.lo < range.hi)) {
    throw std::invalid_argument("scan range requires lo < hi");
  }
  if (range.n_points < 2) {
    throw std::invalid_argument("scan requires n_points >= 2");
  }
  if (range.spacing == Spacing::logarithmic && !(range.lo > 0.0)) {
    throw std::invalid_argument("logarithmic spacing requires lo > 0");
  }
  base_scenario.validate();
  if (swept_parameter == SweptParameter::beam_width &&
      base_scenario.field_kind != FieldKind::gaussian_beam) {
    throw std::invalid_argument(
        "beam_width sweep requires a gaussian_beam scenario");
  }
}

Scenario scenario_at(const ScanSpec& spec, double parameter_value) {
  Scenario s = spec.base_scenario;
  switch (spec.swept_parameter) {
    case SweptParameter::amplitude:
      s.amplitude_E0 = amplitude_vpm_to_natural(parameter_value);
      break;
    case SweptParameter::flux:
      s.amplitude_E0 =
          std::sqrt(2.0 * flux_to_energy_density_natural(parameter_value));
      break;
    case SweptParameter::wavelength:
      s.omega = wavelength_um_to_omega(parameter_value);
      break;
    case SweptParameter::half_separation:
      s.geom.half_separation_c = signed_um_to_natural(parameter_value);
      break;
    case SweptParameter::beam_width:
      s.sigma = signed_um_to_natural(parameter_value);
      break;
  }
  return s;
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  std::vector<ScanRow> rows(spec.range.n_points);
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        ScanRow row;
        row.parameter_value = grid_value(spec.range, i);
        const Scenario s = scenario_at(spec, row.parameter_value);

        double numeric = 0.0;
        double closed = 0.0;
        if (spec.engine != Engine::closed_form) {
          numeric = engine_abs_C(spec, s, Engine::numeric,
                                 &row.quadrature_converged);
        }
        if (spec.engine != Engine::numeric) {
          closed = engine_abs_C(spec, s, Engine::closed_form, nullptr);
        }
        row.abs_C = spec.engine == Engine::closed_form ? closed : numeric;
        if (spec.engine == Engine::both) {
          const double scale = std::max(numeric, closed);
          row.engine_disagreement =
              scale > 0.0 ? std::abs(numeric - closed) / scale : 0.0;
        }

        row.upsilon_analytic = bessel_j0(row.abs_C);
        row.upsilon_oracle =
            oracle_time_average(row.abs_C, 0.0).real();
        row.upsilon_gaussian_model =
            contrast_gaussian_model({row.abs_C, 0.0});
        rows[i] = row;
      },
      spec.quadrature.threads);
  return rows;
}

std::vector<ZeroCrossing> find_contrast_zeros(const ScanSpec& spec) {
  return find_contrast_zeros(spec, run_scan(spec));
}

std::vector<ZeroCrossing> find_contrast_zeros(
    const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  std::vector<ZeroCrossing> zeros;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double ua = rows[i].upsilon_analytic;
    const double ub = rows[i + 1].upsilon_analytic;
    if (ua == 0.0 || std::signbit(ua) == std::signbit(ub)) continue;

    double lo = rows[i].parameter_value;
    double hi = rows[i + 1].parameter_value;
    double flo = ua;
    ZeroCrossing z;
    z.bracket_lo = lo;
    z.bracket_hi = hi;

    double mid = 0.5 * (lo + hi);
    std::size_t iters = 0;
    while (iters < 200) {
      mid = 0.5 * (lo + hi);
      const double fm = upsilon_at(spec, mid);
      ++iters;
      if (std::abs(fm) <= 1e-9) break;
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
      if (hi - lo <= 1e-15 * std::max(std::abs(lo), std::abs(hi))) break;
    }
    z.parameter_value_at_zero = mid;
    z.refined_by = iters;
    const Scenario s = scenario_at(spec, mid);
    const Engine primary =
        spec.engine == Engine::closed_form ? Engine::closed_form
                                           : Engine::numeric;
    z.abs_C_at_zero = engine_abs_C(spec, s, primary, nullptr);
    zeros.push_back(z);
  }
  return zeros;
}

RevivalSummary find_revivals(const std::vector<ScanRow>& rows) {
  if (rows.size() < 3) {
    throw std::invalid_argument("revival counting requires >= 3 rows");
  }
  RevivalSummary summary;

  std::size_t first_zero = rows.size();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].upsilon_analytic != 0.0 &&
        std::signbit(rows[i].upsilon_analytic) !=
            std::signbit(rows[i + 1].upsilon_analytic)) {
      first_zero = i + 1;
      break;
    }
  }
  if (first_zero >= rows.size()) return summary;

  for (std::size_t i = std::max<std::size_t>(first_zero, 1);
       i + 1 < rows.size(); ++i) {
    const double prev = std::abs(rows[i - 1].upsilon_analytic);
    const double here = std::abs(rows[i].upsilon_analytic);
    const double next = std::abs(rows[i + 1].upsilon_analytic);
    if (here > prev && here >= next) {
      ++summary.count;
      summary.peak_parameters.push_back(rows[i].parameter_value);
      summary.peak_values.push_back(here);
    }
  }
  return summary;
}

std::size_t count_revivals(const std::vector<ScanRow>& rows) {
  return find_revivals(rows).count;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "parameter_value,abs_C,upsilon_analytic,upsilon_oracle,"
         "upsilon_gaussian_model,engine_disagreement,converged\n";
  for (const ScanRow& r : rows) {
    out << format_double(r.parameter_value) << ',' << format_double(r.abs_C)
        << ',' << format_double(r.upsilon_analytic) << ','
        << format_double(r.upsilon_oracle) << ','
        << format_double(r.upsilon_gaussian_model) << ','
        << format_double(r.engine_disagreement) << ','
        << (r.quadrature_converged ? '1' : '0') << '\n';
  }
}

std::string scan_summary(const ScanSpec& spec,
                         const std::vector<ScanRow>& rows,
                         const std::vector<ZeroCrossing>& zeros) {
  std::ostringstream out;
  out << "scan parameter=" << swept_parameter_name(spec.swept_parameter)
      << " engine=" << engine_name(spec.engine)
      << " points=" << rows.size() << " range=["
      << format_double(spec.range.lo) << ", "
      << format_double(spec.range.hi) << "]\n";

  out << "contrast zeros: " << zeros.size() << '\n';
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const ZeroCrossing& z = zeros[i];
    out << "  zero " << (i + 1)
        << ": parameter=" << format_double(z.parameter_value_at_zero)
        << " abs_C=" << format_double(z.abs_C_at_zero)
        << " bisection_iterations=" << z.refined_by << '\n';
  }

  RevivalSummary revivals;
  if (rows.size() >= 3) revivals = find_revivals(rows);
  out << "contrast revivals: " << revivals.count << '\n';
  for (std::size_t i = 0; i < revivals.count; ++i) {
    out << "  revival " << (i + 1)
        << ": parameter=" << format_double(revivals.peak_parameters[i])
        << " peak_upsilon=" << format_double(revivals.peak_values[i])
        << '\n';
  }

  std::size_t failed = 0;
  for (const ScanRow& r : rows) {
    if (!r.quadrature_converged) ++failed;
  }
  if (failed > 0) {
    out << "warning: " << failed
        << " point(s) did not reach the quadrature tolerance\n";
  }
  return out.str();
}

}  // namespace abcontrast
