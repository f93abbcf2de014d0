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

#include "abcontrast/run_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "abcontrast/errors.hpp"
#include "abcontrast/numio.hpp"
#include "abcontrast/units.hpp"

namespace abcontrast {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("config " + where + ": " + what);
}

// Every reader works on one block object and checks off the keys it
// consumed; leftovers are reported as unknown.
class BlockReader {
 public:
  BlockReader(const json& block, std::string name)
      : block_(block), name_(std::move(name)) {
    if (!block.is_object()) fail(name_, "must be an object");
  }

  ~BlockReader() = default;

  double number(const char* key) {
    const json& v = require(key);
    if (!v.is_number()) fail(name_, std::string(key) + " must be a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(const char* key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number()) fail(name_, std::string(key) + " must be a number");
    return v->get<double>();
  }

  std::optional<std::size_t> optional_count(const char* key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_unsigned()) {
      fail(name_, std::string(key) + " must be a nonnegative integer");
    }
    return v->get<std::size_t>();
  }

  std::optional<std::string> optional_string(const char* key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) fail(name_, std::string(key) + " must be a string");
    return v->get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : block_.items()) {
      if (seen_.count(key) == 0) {
        fail(name_, "unknown key \"" + key + "\"");
      }
    }
  }

 private:
  const json* find(const char* key) {
    auto it = block_.find(key);
    if (it == block_.end()) return nullptr;
    seen_.insert(key);
    return &*it;
  }

  const json& require(const char* key) {
    const json* v = find(key);
    if (v == nullptr) fail(name_, std::string("missing key \"") + key + "\"");
    return *v;
  }

  const json& block_;
  std::string name_;
  std::set<std::string> seen_;
};

GeometryConfig parse_geometry(const json& block) {
  BlockReader r(block, "geometry");
  GeometryConfig g;
  g.half_separation_um = r.number("half_separation_um");
  g.longitudinal_um = r.number("longitudinal_um");
  g.half_middle_um = r.optional_number("half_middle_um").value_or(0.0);
  g.kinetic_energy_kev = r.optional_number("kinetic_energy_keV");
  g.speed_beta = r.optional_number("speed_beta");
  r.finish();
  if (g.kinetic_energy_kev.has_value() == g.speed_beta.has_value()) {
    fail("geometry",
         g.kinetic_energy_kev
             ? "kinetic_energy_keV and speed_beta are both given; "
               "exactly one is allowed"
             : "exactly one of kinetic_energy_keV or speed_beta is "
               "required");
  }
  return g;
}

FieldBlock parse_field(const json& block) {
  BlockReader r(block, "field");
  FieldBlock f;
  f.type = r.optional_string("type").value_or("plane_wave");
  if (f.type != "plane_wave" && f.type != "gaussian_beam" && f.type != "null") {
    fail("field", "type must be plane_wave, gaussian_beam or null, got \"" +
                      f.type + "\"");
  }
  f.amplitude_v_per_m = r.optional_number("amplitude_V_per_m");
  f.flux_w_cm2 = r.optional_number("flux_W_cm2");
  f.wavelength_um = r.optional_number("wavelength_um");
  f.sigma_um = r.optional_number("sigma_um");
  f.center_x_um = r.optional_number("center_x_um").value_or(0.0);
  f.center_z_um = r.optional_number("center_z_um").value_or(0.0);
  r.finish();

  if (f.type != "null") {
    if (f.amplitude_v_per_m.has_value() == f.flux_w_cm2.has_value()) {
      fail("field",
           f.amplitude_v_per_m
               ? "amplitude_V_per_m and flux_W_cm2 are both given; "
                 "exactly one is allowed"
               : "exactly one of amplitude_V_per_m or flux_W_cm2 is "
                 "required");
    }
    if (!f.wavelength_um) fail("field", "missing key \"wavelength_um\"");
  }
  if (f.type == "gaussian_beam" && !f.sigma_um) {
    fail("field", "gaussian_beam field requires sigma_um");
  }
  return f;
}

QuadratureBlock parse_quadrature(const json& block) {
  BlockReader r(block, "quadrature");
  QuadratureBlock q;
  q.relative_tolerance =
      r.optional_number("relative_tolerance").value_or(q.relative_tolerance);
  q.min_samples_per_period = r.optional_count("min_samples_per_period")
                                 .value_or(q.min_samples_per_period);
  q.max_subdivisions =
      r.optional_count("max_subdivisions").value_or(q.max_subdivisions);
  r.finish();
  return q;
}

MeasurementBlock parse_measurement(const json& block) {
  BlockReader r(block, "measurement");
  MeasurementBlock m;
  m.integration_time_s = r.optional_number("integration_time_s");
  r.finish();
  return m;
}

OutputBlock parse_output(const json& block) {
  BlockReader r(block, "output");
  OutputBlock o;
  o.path = r.optional_string("path");
  o.format = r.optional_string("format").value_or(o.format);
  r.finish();
  if (o.format != "csv" && o.format != "structured") {
    fail("output", "format must be csv or structured, got \"" + o.format +
                       "\"");
  }
  return o;
}

double um_to_natural_signed(double um) {
  return um * 1.0e-6 / constants::hbar_c_ev_m;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "top level must be an object");

  RunConfig config;
  bool saw_geometry = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "geometry") {
      config.geometry = parse_geometry(value);
      saw_geometry = true;
    } else if (key == "field") {
      config.field = parse_field(value);
    } else if (key == "quadrature") {
      config.quadrature = parse_quadrature(value);
    } else if (key == "measurement") {
      config.measurement = parse_measurement(value);
    } else if (key == "output") {
      config.output = parse_output(value);
    } else {
      fail("document", "unknown block \"" + key + "\"");
    }
  }
  if (!saw_geometry) fail("document", "missing block \"geometry\"");
  if (!doc.contains("field")) fail("document", "missing block \"field\"");
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file: " + path);
  return parse_run_config(text.str());
}

std::string serialize_run_config(const RunConfig& config) {
  json doc;
  json& g = doc["geometry"];
  g["half_separation_um"] = config.geometry.half_separation_um;
  g["longitudinal_um"] = config.geometry.longitudinal_um;
  g["half_middle_um"] = config.geometry.half_middle_um;
  if (config.geometry.kinetic_energy_kev) {
    g["kinetic_energy_keV"] = *config.geometry.kinetic_energy_kev;
  }
  if (config.geometry.speed_beta) {
    g["speed_beta"] = *config.geometry.speed_beta;
  }

  json& f = doc["field"];
  f["type"] = config.field.type;
  if (config.field.amplitude_v_per_m) {
    f["amplitude_V_per_m"] = *config.field.amplitude_v_per_m;
  }
  if (config.field.flux_w_cm2) f["flux_W_cm2"] = *config.field.flux_w_cm2;
  if (config.field.wavelength_um) {
    f["wavelength_um"] = *config.field.wavelength_um;
  }
  if (config.field.sigma_um) f["sigma_um"] = *config.field.sigma_um;
  if (config.field.center_x_um != 0.0) {
    f["center_x_um"] = config.field.center_x_um;
  }
  if (config.field.center_z_um != 0.0) {
    f["center_z_um"] = config.field.center_z_um;
  }

  json& q = doc["quadrature"];
  q["relative_tolerance"] = config.quadrature.relative_tolerance;
  q["min_samples_per_period"] = config.quadrature.min_samples_per_period;
  q["max_subdivisions"] = config.quadrature.max_subdivisions;

  if (config.measurement.integration_time_s) {
    doc["measurement"]["integration_time_s"] =
        *config.measurement.integration_time_s;
  }

  json& o = doc["output"];
  if (config.output.path) o["path"] = *config.output.path;
  o["format"] = config.output.format;

  return doc.dump(2) + "\n";
}

RealizedConfig realize(const RunConfig& config) {
  RealizedConfig out;
  Scenario& s = out.scenario;

  const GeometryConfig& g = config.geometry;
  s.geom.half_separation_c = length_to_natural(g.half_separation_um * 1e-6);
  s.geom.longitudinal_l = length_to_natural(g.longitudinal_um * 1e-6);
  s.geom.half_middle_d = length_to_natural(g.half_middle_um * 1e-6);
  if (g.kinetic_energy_kev) {
    const SpeedResult sp = speed_from_kinetic_energy(
        *g.kinetic_energy_kev * 1e3, constants::electron_mass_ev);
    s.geom.speed_v = sp.beta;
    if (sp.relativistic_flag) {
      out.warnings.push_back(
          "speed beta = " + format_double(sp.beta) +
          " exceeds 0.3; the nonrelativistic kinematics degrade");
    }
  } else {
    s.geom.speed_v = *g.speed_beta;
    if (s.geom.speed_v > 0.3) {
      out.warnings.push_back(
          "speed beta = " + format_double(s.geom.speed_v) +
          " exceeds 0.3; the nonrelativistic kinematics degrade");
    }
  }

  const FieldBlock& f = config.field;
  if (f.type == "null") {
    s.field_kind = FieldKind::null_field;
    s.omega = f.wavelength_um ? wavelength_um_to_omega(*f.wavelength_um)
                              : 1.0;
  } else {
    s.field_kind = f.type == "gaussian_beam" ? FieldKind::gaussian_beam
                                        : FieldKind::plane_wave;
    s.omega = wavelength_um_to_omega(*f.wavelength_um);
    s.amplitude_E0 =
        f.amplitude_v_per_m
            ? amplitude_vpm_to_natural(*f.amplitude_v_per_m)
            : std::sqrt(2.0 * flux_to_energy_density_natural(*f.flux_w_cm2));
    if (f.type == "gaussian_beam") {
      s.sigma = length_to_natural(*f.sigma_um * 1e-6);
      s.center_x = um_to_natural_signed(f.center_x_um);
      s.center_z = um_to_natural_signed(f.center_z_um);
      if (s.sigma > 2.0 * s.geom.half_separation_c) {
        out.warnings.push_back(
            "beam width sigma exceeds the path separation 2c; the "
            "localized-beam closed form loses validity");
      }
      if (s.sigma > 2.0 * s.geom.half_middle_d) {
        out.warnings.push_back(
            "beam width sigma exceeds the plateau length 2d; the "
            "localized-beam closed form loses validity");
      }
    }
  }
  s.validate();

  out.quadrature.relative_tolerance = config.quadrature.relative_tolerance;
  out.quadrature.min_samples_per_period =
      config.quadrature.min_samples_per_period;
  out.quadrature.max_subdivisions = config.quadrature.max_subdivisions;

  out.integration_time_s = config.measurement.integration_time_s;
  if (out.integration_time_s && s.omega > 0.0 &&
      s.field_kind != FieldKind::null_field) {
    const double period_s =
        time_from_natural(2.0 * std::numbers::pi / s.omega);
    if (period_s > *out.integration_time_s / 10.0) {
      out.warnings.push_back(
          "field period " + format_double(period_s) +
          " s exceeds one tenth of the integration time; emission-time "
          "averaging is not justified");
    }
  }

  out.output = config.output;
  return out;
}

}  // namespace abcontrast
