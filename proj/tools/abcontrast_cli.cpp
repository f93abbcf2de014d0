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

// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 parse error, 3 domain error, 4 quadrature failure, 5 I/O error.

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abcontrast/closed_form.hpp"
#include "abcontrast/contrast.hpp"
#include "abcontrast/errors.hpp"
#include "abcontrast/numio.hpp"
#include "abcontrast/phase.hpp"
#include "abcontrast/run_config.hpp"
#include "abcontrast/scan.hpp"
#include "abcontrast/scenario.hpp"
#include "abcontrast/units.hpp"

namespace {

using namespace abcontrast;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitQuadrature = 4;
constexpr int kExitIo = 5;

struct QuadratureOverrides {
  double rel_tol = 0.0;          // 0 means: keep the config value
  std::size_t min_samples = 0;   // 0 means: keep the config value
};

void apply_overrides(QuadratureSettings& settings,
                     const QuadratureOverrides& ov) {
  if (ov.rel_tol > 0.0) settings.relative_tolerance = ov.rel_tol;
  if (ov.min_samples > 0) settings.min_samples_per_period = ov.min_samples;
}

RealizedConfig realized_from(const std::string& config_path,
                             const QuadratureOverrides& ov) {
  RealizedConfig rc = config_path.empty()
                          ? RealizedConfig{benchmark_scenario(), {}, {}, {}, {}}
                          : realize(load_run_config(config_path));
  apply_overrides(rc.quadrature, ov);
  return rc;
}

// Runs fn against the chosen sink: a file when a path is set, else stdout.
void with_output(const std::optional<std::string>& path,
                 const std::function<void(std::ostream&)>& fn) {
  if (path && !path->empty() && *path != "-") {
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + *path);
    fn(file);
    file.flush();
    if (!file) throw IoError("cannot write output file: " + *path);
  } else {
    fn(std::cout);
  }
}

void print_warnings(const std::vector<std::string>& warnings,
                    std::ostream& out) {
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
}

// ---------------------------------------------------------------------------
// contrast

int cmd_contrast(const std::string& config_path,
                 const QuadratureOverrides& ov,
                 const std::optional<std::string>& output,
                 const std::string& format) {
  RealizedConfig rc = realized_from(config_path, ov);

  const TrajectoryPair pair = rc.scenario.make_trajectory();
  const auto field = rc.scenario.make_field();
  const PhaseResult phase = compute_C(pair, *field, rc.quadrature);
  const ContrastReport report = make_contrast_report(phase.C);

  std::vector<std::string> warnings = rc.warnings;
  if (phase.cancellation_warning) {
    warnings.push_back(
        "severe cancellation in the time integral (ratio " +
        format_double(phase.cancellation_ratio) +
        "); the error estimate may be optimistic");
  }

  with_output(output, [&](std::ostream& out) {
    if (format == "csv") {
      out << "abs_C,abs_C_squared,upsilon_analytic,upsilon_oracle,"
             "upsilon_gaussian_model,upsilon_taylor\n"
          << format_double(report.abs_C) << ','
          << format_double(report.abs_C * report.abs_C) << ','
          << format_double(report.upsilon_analytic) << ','
          << format_double(report.upsilon_oracle.real()) << ','
          << format_double(report.upsilon_gaussian_model) << ','
          << format_double(report.upsilon_taylor) << '\n';
      print_warnings(warnings, std::cerr);
      return;
    }
    out << "abs_C = " << format_double(report.abs_C) << "\n"
        << "abs_C_squared = " << format_double(report.abs_C * report.abs_C)
        << "\n"
        << "upsilon_analytic = " << format_double(report.upsilon_analytic)
        << "\n"
        << "upsilon_oracle = " << format_double(report.upsilon_oracle.real())
        << "\n"
        << "upsilon_gaussian_model = "
        << format_double(report.upsilon_gaussian_model) << "\n"
        << "upsilon_taylor = " << format_double(report.upsilon_taylor)
        << "\n"
        << "quadrature_error_estimate = "
        << format_double(phase.quadrature_error_estimate) << "\n"
        << "integrand_evaluations = " << phase.nodes_used << "\n";
    if (rc.scenario.field_kind != FieldKind::null_field) {
      out << "closed_form_abs_C = "
          << format_double(closed_form_abs_C(rc.scenario)) << "\n";
    }
    if (rc.scenario.field_kind == FieldKind::plane_wave) {
      // Emission- and geometry-phase averaged square, the figure of merit
      // of the parametric estimate.
      out << "abs_C_squared_phase_averaged = "
          << format_double(planewave_C2_averaged(
                 rc.scenario.geom, rc.scenario.omega,
                 energy_density_from_amplitude(rc.scenario.amplitude_E0)))
          << "\n";
    }
    print_warnings(warnings, out);
  });
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

SweptParameter parse_sweep(const std::string& name) {
  if (name == "amplitude") return SweptParameter::amplitude;
  if (name == "flux") return SweptParameter::flux;
  if (name == "wavelength") return SweptParameter::wavelength;
  if (name == "half_separation") return SweptParameter::half_separation;
  if (name == "beam_width") return SweptParameter::beam_width;
  throw ParseError(
      "unknown sweep parameter \"" + name +
      "\"; expected amplitude, flux, wavelength, half_separation or "
      "beam_width");
}

Engine parse_engine(const std::string& name) {
  if (name == "numeric") return Engine::numeric;
  if (name == "closed_form" || name == "closed-form") {
    return Engine::closed_form;
  }
  if (name == "both") return Engine::both;
  throw ParseError("unknown engine \"" + name +
                   "\"; expected numeric, closed_form or both");
}

ScanRange parse_range(const std::string& text, std::size_t points,
                      bool log_spacing) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 1 >= text.size()) {
    throw ParseError("range must look like lo:hi, got \"" + text + "\"");
  }
  ScanRange range;
  try {
    std::size_t used = 0;
    range.lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string hi = text.substr(colon + 1);
    range.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ParseError("range must look like lo:hi, got \"" + text + "\"");
  }
  range.n_points = points;
  range.spacing = log_spacing ? Spacing::logarithmic : Spacing::linear;
  return range;
}

int cmd_scan(const std::string& config_path, const QuadratureOverrides& ov,
             const std::string& sweep, const std::string& range_text,
             std::size_t points, bool log_spacing,
             const std::string& engine,
             const std::optional<std::string>& output_flag,
             const std::optional<std::string>& format_flag) {
  RealizedConfig rc = realized_from(config_path, ov);

  ScanSpec spec;
  spec.swept_parameter = parse_sweep(sweep);
  spec.range = parse_range(range_text, points, log_spacing);
  spec.base_scenario = rc.scenario;
  spec.engine = parse_engine(engine);
  spec.quadrature = rc.quadrature;

  const std::optional<std::string> output =
      output_flag ? output_flag : rc.output.path;
  const std::string format = format_flag.value_or(rc.output.format);

  const std::vector<ScanRow> rows = run_scan(spec);
  const std::vector<ZeroCrossing> zeros = find_contrast_zeros(spec, rows);
  const std::string summary = scan_summary(spec, rows, zeros);

  print_warnings(rc.warnings, std::cerr);
  if (format == "structured") {
    with_output(output, [&](std::ostream& out) { out << summary; });
    return kExitOk;
  }
  const bool csv_on_stdout = !output || output->empty() || *output == "-";
  with_output(output, [&](std::ostream& out) { write_scan_csv(out, rows); });
  (csv_on_stdout ? std::cerr : std::cout) << summary;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& config_path,
                 const QuadratureOverrides& ov, std::ostream& out) {
  RealizedConfig rc = realized_from(config_path, ov);
  const double rel_tol = rc.quadrature.relative_tolerance;
  const double hard_threshold = std::max(1e-6, 10.0 * rel_tol);
  bool hard_failure = false;
  bool degraded = false;

  // Plane-wave cross-check: quadrature vs closed form on the dimensionless
  // (omega*Theta, omega*T) grid, fixed c, v, amplitude.
  constexpr double grid[5] = {0.1, 1.0, 3.0, 10.0, 30.0};
  constexpr double c = 0.01;
  constexpr double v = 0.5;
  constexpr double w = 1.0;
  constexpr double e0 = 1.0;
  double max_rel_err = 0.0;
  out << "plane-wave closed form vs quadrature (5x5 grid)\n";
  for (double wt_theta : grid) {
    for (double wt_plateau : grid) {
      TrapezoidGeometry geom;
      geom.half_separation_c = c;
      geom.speed_v = v;
      const double theta = wt_theta / w;
      const double s = v * theta;
      geom.longitudinal_l = std::sqrt(s * s - c * c);
      geom.half_middle_d = 0.5 * v * (wt_plateau / w);

      const double closed =
          std::abs(planewave_C({geom, e0, w}));
      const PhaseResult numeric = compute_C(
          build_trapezoid(geom), PlaneWaveField(e0, w), rc.quadrature);
      const double rel = std::abs(std::abs(numeric.C) - closed) / closed;
      max_rel_err = std::max(max_rel_err, rel);
    }
  }
  out << "  max relative |C| error = " << format_double(max_rel_err)
      << "\n";
  if (max_rel_err > hard_threshold) {
    hard_failure = true;
    out << "  FAIL: exceeds threshold " << format_double(hard_threshold)
        << "\n";
  } else if (max_rel_err > 1e-6) {
    degraded = true;
    out << "  degraded agreement (tolerance was "
        << format_double(rel_tol) << "); hard threshold "
        << format_double(hard_threshold) << " still met\n";
  }

  // Emission-time average vs Bessel: spot check on 200 deterministic
  // pseudo-random amplitude pairs.
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double max_oracle_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double r = 10.0 * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double a = r * std::cos(phi);
    const double b = r * std::sin(phi);
    const double err =
        std::abs(oracle_time_average(a, b) -
                 std::complex<double>{bessel_j0(r), 0.0});
    max_oracle_err = std::max(max_oracle_err, err);
  }
  out << "time-average oracle vs J0 (200 random amplitudes)\n"
      << "  max absolute error = " << format_double(max_oracle_err) << "\n";
  if (max_oracle_err > 1e-8) {
    hard_failure = true;
    out << "  FAIL: exceeds 1e-8\n";
  }

  // Localized-beam ratio table (diagnostic, no hard tolerance): the
  // closed form's corner-angle convention is an assumption, so only the
  // qualitative suppression is enforced elsewhere.
  Scenario gs = benchmark_scenario();
  gs.field_kind = FieldKind::gaussian_beam;
  out << "gaussian beam numeric vs closed form (diagnostic, no hard "
         "tolerance)\n";
  for (double frac : {1.0 / 3.0, 0.5, 1.0}) {
    gs.sigma = frac * gs.geom.half_middle_d;
    double numeric_abs = 0.0;
    const char* note = "";
    try {
      numeric_abs = std::abs(
          compute_C(gs.make_trajectory(), *gs.make_field(), rc.quadrature)
              .C);
    } catch (const QuadratureError& e) {
      numeric_abs = std::abs(e.best_estimate().C);
      note = " (best estimate, quadrature did not converge)";
    }
    const double closed = std::abs(
        gaussian_C({gs.geom, gs.amplitude_E0, gs.omega, gs.sigma}).value);
    out << "  sigma/d = " << format_double(frac)
        << ": numeric = " << format_double(numeric_abs)
        << ", closed form = " << format_double(closed)
        << ", ratio = " << format_double(numeric_abs / closed) << note
        << "\n";
  }

  print_warnings(rc.warnings, out);
  if (hard_failure) {
    out << "validation: FAIL\n";
    return kExitValidationFailure;
  }
  out << (degraded ? "validation: PASS (degraded tolerances)\n"
                   : "validation: PASS\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mfp

int cmd_mfp(double flux, double lambda_um, const std::string& config_path,
            std::ostream& out) {
  const double mfp_m = thomson_mfp(flux, lambda_um);
  const double rho = flux_to_energy_density_natural(flux);
  const double omega = wavelength_um_to_omega(lambda_um);
  const double n_m3 =
      number_density_from_natural(photon_density(rho, omega));

  Scenario s = config_path.empty()
                   ? benchmark_scenario()
                   : realize(load_run_config(config_path)).scenario;
  const double path_m = length_from_natural(s.geom.path_length());

  out << "thomson_mfp_m = " << format_double(mfp_m) << "\n"
      << "photon_density_per_m3 = " << format_double(n_m3) << "\n"
      << "electron_path_length_m = " << format_double(path_m) << "\n"
      << "scattering_probability = " << format_double(path_m / mfp_m)
      << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string config_path;
  double energy_kev = 5.0;
  double flux = 1.0;
  double ratio_2c_s = 1.0;
  double lambda_um = 100.0;
};

int cmd_eval(const std::string& name, const EvalArgs& args,
             std::ostream& out) {
  const auto scenario = [&]() {
    return args.config_path.empty()
               ? benchmark_scenario()
               : realize(load_run_config(args.config_path)).scenario;
  };

  double value = 0.0;
  if (name == "planewave_C") {
    const Scenario s = scenario();
    value = planewave_C({s.geom, s.amplitude_E0, s.omega});
  } else if (name == "planewave_C2_averaged") {
    const Scenario s = scenario();
    value = planewave_C2_averaged(
        s.geom, s.omega, energy_density_from_amplitude(s.amplitude_E0));
  } else if (name == "energy_density_from_amplitude") {
    value = energy_density_from_amplitude(scenario().amplitude_E0);
  } else if (name == "planewave_C2_parametric") {
    if (args.ratio_2c_s > 1.0) {
      std::cerr << "warning: 2c/s = " << format_double(args.ratio_2c_s)
                << " > 1 is geometrically impossible\n";
    }
    value = planewave_C2_parametric(args.energy_kev, args.flux,
                                    args.ratio_2c_s, args.lambda_um);
  } else if (name == "gaussian_C") {
    const Scenario s = scenario();
    const GaussianClosedForm g =
        gaussian_C({s.geom, s.amplitude_E0, s.omega, s.sigma});
    if (g.validity.sigma_exceeds_2c) {
      std::cerr << "warning: sigma exceeds 2c; validity degraded\n";
    }
    if (g.validity.sigma_exceeds_2d) {
      std::cerr << "warning: sigma exceeds 2d; validity degraded\n";
    }
    value = g.value;
  } else if (name == "photon_density") {
    value = number_density_from_natural(
        photon_density(flux_to_energy_density_natural(args.flux),
                       wavelength_um_to_omega(args.lambda_um)));
  } else if (name == "thomson_mfp") {
    value = thomson_mfp(args.flux, args.lambda_um);
  } else {
    throw ParseError(
        "unknown eval target \"" + name +
        "\"; expected one of planewave_C, planewave_C2_averaged, "
        "planewave_C2_parametric, energy_density_from_amplitude, "
        "gaussian_C, photon_density, thomson_mfp");
  }
  out << format_double(value) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "electron interferometer contrast in an oscillating electromagnetic "
      "field"};
  app.require_subcommand(1);

  std::string config_path;
  QuadratureOverrides overrides;
  std::optional<std::string> output;
  std::optional<std::string> format;

  const auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("--config", config_path,
                                "run configuration file (JSON)");
    if (config_required) opt->required();
    cmd->add_option("--rel-tol", overrides.rel_tol,
                    "quadrature relative tolerance override");
    cmd->add_option("--min-samples-per-period", overrides.min_samples,
                    "minimum time panels per field period override");
  };

  auto* contrast_cmd = app.add_subcommand(
      "contrast", "evaluate one configuration and print the contrast");
  add_common(contrast_cmd, true);
  contrast_cmd->add_option("--output", output, "output file (default stdout)");
  contrast_cmd->add_option("--format", format, "csv or structured")
      ->check(CLI::IsMember({"csv", "structured"}));

  auto* scan_cmd =
      app.add_subcommand("scan", "sweep one parameter and tabulate contrast");
  add_common(scan_cmd, true);
  std::string sweep = "amplitude";
  std::string range_text;
  std::size_t points = 101;
  bool log_spacing = false;
  std::string engine = "closed_form";
  scan_cmd->add_option("--sweep", sweep,
                       "amplitude | flux | wavelength | half_separation | "
                       "beam_width");
  scan_cmd->add_option("--range", range_text, "sweep range lo:hi")
      ->required();
  scan_cmd->add_option("--points", points, "number of grid points");
  scan_cmd->add_flag("--log", log_spacing, "logarithmic grid spacing");
  scan_cmd->add_option("--engine", engine, "numeric | closed_form | both");
  scan_cmd->add_option("--output", output, "CSV file (default stdout)");
  scan_cmd->add_option("--format", format, "csv or structured")
      ->check(CLI::IsMember({"csv", "structured"}));

  auto* validate_cmd = app.add_subcommand(
      "validate", "cross-check the quadrature against the closed forms");
  add_common(validate_cmd, false);

  auto* mfp_cmd = app.add_subcommand(
      "mfp", "Thomson mean free path and photon density");
  double mfp_flux = 1.0;
  double mfp_lambda = 1.0;
  mfp_cmd->add_option("--flux", mfp_flux, "energy flux in W/cm^2");
  mfp_cmd->add_option("--lambda", mfp_lambda, "wavelength in um");
  mfp_cmd->add_option("--config", config_path,
                      "geometry source for the path length");

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate one closed-form expression");
  std::string eval_name;
  EvalArgs eval_args;
  eval_cmd->add_option("name", eval_name, "expression name")->required();
  eval_cmd->add_option("--config", eval_args.config_path,
                       "scenario source for geometry-based expressions");
  eval_cmd->add_option("--energy-kev", eval_args.energy_kev,
                       "electron kinetic energy in keV (parametric)");
  eval_cmd->add_option("--flux", eval_args.flux, "energy flux in W/cm^2");
  eval_cmd->add_option("--ratio-2c-s", eval_args.ratio_2c_s,
                       "2c/s aspect ratio (parametric)");
  eval_cmd->add_option("--lambda", eval_args.lambda_um, "wavelength in um");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(contrast_cmd)) {
      return cmd_contrast(config_path, overrides, output,
                          format.value_or("structured"));
    }
    if (app.got_subcommand(scan_cmd)) {
      return cmd_scan(config_path, overrides, sweep, range_text, points,
                      log_spacing, engine, output, format);
    }
    if (app.got_subcommand(validate_cmd)) {
      return cmd_validate(config_path, overrides, std::cout);
    }
    if (app.got_subcommand(mfp_cmd)) {
      return cmd_mfp(mfp_flux, mfp_lambda, config_path, std::cout);
    }
    if (app.got_subcommand(eval_cmd)) {
      return cmd_eval(eval_name, eval_args, std::cout);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitQuadrature;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}
