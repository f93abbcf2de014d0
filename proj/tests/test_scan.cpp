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

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "abcontrast/scan.hpp"
#include "abcontrast/scenario.hpp"
#include "support/oracles.hpp"

using namespace abcontrast;
namespace oracle = abcontrast::testing;

namespace {

// Amplitude in V/m that puts the benchmark plane-wave |C| at the requested
// value; uses the linearity of the closed form in the amplitude.
double vpm_for_abs_C(double target) {
  ScanSpec probe;
  probe.swept_parameter = SweptParameter::amplitude;
  probe.base_scenario = benchmark_scenario();
  const double c_at_1000 =
      closed_form_abs_C(scenario_at(probe, 1000.0));
  REQUIRE(c_at_1000 > 0.0);
  return 1000.0 * target / c_at_1000;
}

ScanSpec amplitude_spec(double max_abs_C, std::size_t n_points) {
  ScanSpec spec;
  spec.swept_parameter = SweptParameter::amplitude;
  spec.base_scenario = benchmark_scenario();
  spec.engine = Engine::closed_form;
  spec.range.lo = vpm_for_abs_C(max_abs_C) / (2.0 * (n_points - 1.0));
  spec.range.hi = vpm_for_abs_C(max_abs_C);
  spec.range.n_points = n_points;
  return spec;
}

}  // namespace

TEST_CASE("null-field scan is flat at full contrast") {
  ScanSpec spec;
  spec.swept_parameter = SweptParameter::amplitude;
  spec.base_scenario = benchmark_scenario();
  spec.base_scenario.field_kind = FieldKind::null_field;
  spec.range = {1.0, 2.0, 2, Spacing::linear};
  const std::vector<ScanRow> rows = run_scan(spec);
  REQUIRE(rows.size() == 2);
  for (const ScanRow& r : rows) {
    CHECK(r.abs_C == 0.0);
    CHECK(r.upsilon_analytic == 1.0);
    CHECK(r.quadrature_converged);
  }
}

TEST_CASE("closed-form amplitude scan is linear in the amplitude") {
  const ScanSpec spec = amplitude_spec(3.0, 31);
  const std::vector<ScanRow> rows = run_scan(spec);
  REQUIRE(rows.size() == 31);
  const double slope = rows.front().abs_C / rows.front().parameter_value;
  for (const ScanRow& r : rows) {
    CHECK(r.abs_C / r.parameter_value ==
          doctest::Approx(slope).epsilon(1e-12));
  }
}

TEST_CASE("contrast profile reproduces the Bessel shape") {
  const ScanSpec spec = amplitude_spec(6.0, 601);
  const std::vector<ScanRow> rows = run_scan(spec);

  double min_upsilon = 2.0;
  double abs_C_at_min = 0.0;
  for (const ScanRow& r : rows) {
    if (r.upsilon_analytic < min_upsilon) {
      min_upsilon = r.upsilon_analytic;
      abs_C_at_min = r.abs_C;
    }
  }
  CHECK(min_upsilon == doctest::Approx(oracle::k_j0_extremum_1_value).epsilon(1e-3));
  CHECK(std::abs(abs_C_at_min - oracle::k_j0_extremum_1) < 0.02);
}

TEST_CASE("zero finding on the amplitude grid") {
  // Grid topping out below the first Bessel zero: nothing to find.
  CHECK(find_contrast_zeros(amplitude_spec(2.0, 101)).empty());

  const std::vector<ZeroCrossing> one =
      find_contrast_zeros(amplitude_spec(6.0, 101));
  REQUIRE(one.size() == 2);
  CHECK(std::abs(one.front().abs_C_at_zero - 2.40483) <= 1e-3);

  const std::vector<ZeroCrossing> three =
      find_contrast_zeros(amplitude_spec(9.0, 301));
  REQUIRE(three.size() >= 3);
  CHECK(std::abs(three[0].abs_C_at_zero - 2.40483) <= 1e-3);
  CHECK(std::abs(three[1].abs_C_at_zero - 5.52008) <= 1e-3);
  CHECK(std::abs(three[2].abs_C_at_zero - 8.65373) <= 1e-3);

  // Ordered strictly in both the parameter and |C|.
  for (std::size_t i = 1; i < three.size(); ++i) {
    CHECK(three[i].parameter_value_at_zero >
          three[i - 1].parameter_value_at_zero);
    CHECK(three[i].abs_C_at_zero > three[i - 1].abs_C_at_zero);
    CHECK(three[i].refined_by > 0);
  }
}

TEST_CASE("revival detection") {
  const std::vector<ScanRow> none = run_scan(amplitude_spec(2.0, 101));
  CHECK(count_revivals(none) == 0);

  const std::vector<ScanRow> rows = run_scan(amplitude_spec(9.0, 901));
  const RevivalSummary revivals = find_revivals(rows);
  REQUIRE(revivals.count == 2);
  CHECK(revivals.peak_values[0] ==
        doctest::Approx(-oracle::k_j0_extremum_1_value).epsilon(1e-2));
  CHECK(revivals.peak_values[1] ==
        doctest::Approx(oracle::k_j0_extremum_2_value).epsilon(1e-2));
  CHECK(revivals.peak_values[1] < revivals.peak_values[0]);

  // Null field never revives.
  ScanSpec null_spec = amplitude_spec(2.0, 11);
  null_spec.base_scenario.field_kind = FieldKind::null_field;
  CHECK(count_revivals(run_scan(null_spec)) == 0);

  CHECK_THROWS_AS(find_revivals(std::vector<ScanRow>(2)),
                  std::invalid_argument);
}

TEST_CASE("numeric scan rows are identical for every worker count") {
  ScanSpec spec = amplitude_spec(1.5, 6);
  spec.engine = Engine::numeric;

  spec.quadrature.threads = 1;
  const std::vector<ScanRow> a = run_scan(spec);
  spec.quadrature.threads = 3;
  const std::vector<ScanRow> b = run_scan(spec);
  spec.quadrature.threads = 8;
  const std::vector<ScanRow> c = run_scan(spec);

  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].abs_C == b[i].abs_C);
    CHECK(a[i].abs_C == c[i].abs_C);
    CHECK(a[i].upsilon_analytic == b[i].upsilon_analytic);
    CHECK(a[i].upsilon_oracle == b[i].upsilon_oracle);
  }
}

TEST_CASE("numeric and closed-form engines agree") {
  ScanSpec spec = amplitude_spec(4.0, 7);
  spec.engine = Engine::both;
  const std::vector<ScanRow> rows = run_scan(spec);
  for (const ScanRow& r : rows) {
    CHECK(r.quadrature_converged);
    CHECK(r.engine_disagreement <= 1e-6);
  }
}

TEST_CASE("csv output round-trips and is reproducible") {
  const ScanSpec spec = amplitude_spec(3.0, 5);
  const std::vector<ScanRow> rows = run_scan(spec);

  std::ostringstream first;
  write_scan_csv(first, rows);
  std::ostringstream second;
  write_scan_csv(second, rows);
  CHECK(first.str() == second.str());

  std::istringstream in(first.str());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header ==
        "parameter_value,abs_C,upsilon_analytic,upsilon_oracle,"
        "upsilon_gaussian_model,engine_disagreement,converged");

  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    REQUIRE(n < rows.size());
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    CHECK(std::strtod(cell.c_str(), nullptr) == rows[n].parameter_value);
    std::getline(cells, cell, ',');
    CHECK(std::strtod(cell.c_str(), nullptr) == rows[n].abs_C);
    std::getline(cells, cell, ',');
    CHECK(std::strtod(cell.c_str(), nullptr) == rows[n].upsilon_analytic);
    ++n;
  }
  CHECK(n == rows.size());
}

TEST_CASE("scan spec validation") {
  ScanSpec spec = amplitude_spec(2.0, 11);
  CHECK_NOTHROW(spec.validate());

  ScanSpec bad = spec;
  bad.range.hi = bad.range.lo;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.range.n_points = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.range.lo = 0.0;
  bad.range.spacing = Spacing::logarithmic;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  // Sweeping the beam width of a plane wave is meaningless.
  bad = spec;
  bad.swept_parameter = SweptParameter::beam_width;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("scan summary names the zeros") {
  const ScanSpec spec = amplitude_spec(6.0, 101);
  const std::vector<ScanRow> rows = run_scan(spec);
  const std::vector<ZeroCrossing> zeros = find_contrast_zeros(spec, rows);
  const std::string summary = scan_summary(spec, rows, zeros);
  CHECK(summary.find("amplitude") != std::string::npos);
  CHECK(summary.find("zero") != std::string::npos);
  CHECK(summary.find("2.404") != std::string::npos);
}
