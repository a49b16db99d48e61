// Copyright 2026 The lindqsl Authors
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
#include <cstdio>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "lqsl/config.hpp"
#include "lqsl/experiments.hpp"
#include "lqsl/output.hpp"

namespace lqsl {
namespace {

std::string printf_17g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-20), "-2.4999999999999999e-20");
  for (double v : {0.30685281944005469, 1e-300, 6.02214076e23, -0.0001234, 123456.0, 1e17}) {
    EXPECT_EQ(format_double(v), printf_17g(v));
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.30685281944005469, 1e-300, 6.02214076e23, -0.0001234}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Csv, HeaderAndRows) {
  Table t;
  t.columns = {"a", "b"};
  t.rows = {{1.5, std::string("ok")}, {0.25, std::string("x")}};
  EXPECT_EQ(to_csv(t), "a,b\n1.5,ok\n0.25,x\n");
}

TEST(Json, DeterministicLayout) {
  nlohmann::json j = {{"b", 1}, {"a", {0.5, 2.0}}, {"c", {{"z", nullptr}}}};
  EXPECT_EQ(dump_json(j), "{\n  \"a\": [0.5, 2],\n  \"b\": 1,\n  \"c\": {\n    \"z\": null\n  }\n}\n");
  EXPECT_EQ(dump_json(nlohmann::json(std::nan(""))), "null\n");
}

TEST(Commands, HeadersAreExact) {
  const ExperimentConfig emission = parse_experiment_config("");
  EXPECT_EQ(to_csv(cmd_qsl(emission)).substr(0, 71),
            "sweep_value,delta_h0,g_term,e_term,v_coeff,t_qsl,t_lower,status\n,0,1,1,");
  const std::string fig1a = to_csv(cmd_fig1a(emission));
  EXPECT_EQ(fig1a.substr(0, fig1a.find('\n')),
            "gamma,t_qsl_omega_0.01,t_qsl_omega_1,t_qsl_omega_4");
  const ExperimentConfig short_grid =
      parse_experiment_config("[fig1b]\ntheta_values = [0.5]\n[integrator]\ndt = 1e-3\n");
  const std::string fig1b = to_csv(cmd_fig1b(short_grid));
  EXPECT_EQ(fig1b.substr(0, fig1b.find('\n')), "theta_target,t_exa,t_first_passage,t_qsl");
  const std::string qfi = to_csv(cmd_qfi(emission));
  EXPECT_EQ(qfi.substr(0, qfi.find('\n')), "t,fidelity,qfi_estimate,qfi_bound,satisfied,warning");
  const ExperimentConfig evolve_cfg =
      parse_experiment_config("[integrator]\ndt = 1e-2\nhorizon = 1\n");
  const std::string ev = to_csv(cmd_evolve(evolve_cfg));
  EXPECT_EQ(ev.substr(0, ev.find('\n')), "t,theta,trace_drift,min_eig");
}

TEST(Commands, QslEmissionRow) {
  const Table t = cmd_qsl(parse_experiment_config("[model]\ntheta_target = pi/4\n"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_NEAR(std::get<double>(t.rows[0][5]), 0.30685281944005469, 1e-12);
  EXPECT_EQ(std::get<std::string>(t.rows[0][7]), "ok");
}

TEST(Commands, QslClosedSweepPoint) {
  const Table t = cmd_qsl(parse_experiment_config(
      "[model]\npreset = dephasing\nomega = 1\ntheta = pi/4\ntheta_target = 0.6\n"
      "[sweep]\nname = gamma\nvalues = [0, 1]\n"));
  ASSERT_EQ(t.rows.size(), 2u);
  const double dh = std::get<double>(t.rows[0][1]);
  EXPECT_NEAR(std::get<double>(t.rows[0][5]), std::sin(0.6) / dh, 1e-12);
}

TEST(Commands, QslFrozenDynamicsStatus) {
  const Table t = cmd_qsl(parse_experiment_config(
      "[model]\npreset = dephasing\nomega = 1\ntheta = pi/2\ngamma = 0\n"));
  EXPECT_EQ(std::get<std::string>(t.rows[0][7]), "frozen_dynamics");
}

TEST(Commands, ScalingTrailingExponentRow) {
  const Table t = cmd_scaling(parse_experiment_config(""));
  ASSERT_GE(t.rows.size(), 4u);
  EXPECT_EQ(std::get<std::string>(t.rows.back()[0]), "fitted_exponent");
  const double slope = std::get<double>(t.rows.back()[1]);
  EXPECT_GE(slope, -1.02);
  EXPECT_LE(slope, -0.98);
}

TEST(Commands, ScalingSingleSiteMatchesDense) {
  const Table t = cmd_scaling(parse_experiment_config("[scaling]\nn_values = [1]\n"));
  ASSERT_EQ(t.rows.size(), 1u);
  const ExperimentConfig dense_cfg = parse_experiment_config(
      "[model]\npreset = product\nn = 1\ngamma = 10\nomega = 0.1\ntheta = pi/4\n"
      "theta_target = pi/4\n");
  const Table d = cmd_qsl(dense_cfg);
  EXPECT_NEAR(std::get<double>(t.rows[0][1]), std::get<double>(d.rows[0][5]), 1e-12);
}

TEST(Commands, RerunsAreByteIdentical) {
  const ExperimentConfig c = parse_experiment_config("");
  EXPECT_EQ(to_csv(cmd_fig1a(c)), to_csv(cmd_fig1a(c)));
  EXPECT_EQ(to_json_text(cmd_qfi(c)), to_json_text(cmd_qfi(c)));
}

}  // namespace
}  // namespace lqsl
