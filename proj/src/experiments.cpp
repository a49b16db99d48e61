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

#include "lqsl/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "lqsl/error.hpp"
#include "lqsl/fisher.hpp"
#include "lqsl/models.hpp"
#include "lqsl/parallel.hpp"

#ifndef LQSL_VERSION
#define LQSL_VERSION "0.0.0"
#endif

namespace lqsl {

namespace {

using nlohmann::json;

constexpr double kQuarterPi = std::numbers::pi / 4;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string short_number(double v) {
  std::array<char, 32> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

std::vector<double> log_grid(double lo, double hi, double per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || !(per_decade > 0.0)) {
    throw ConfigError("log grid needs 0 < min <= max and points_per_decade > 0");
  }
  const double l0 = std::log10(lo);
  const auto count = static_cast<std::size_t>(std::llround((std::log10(hi) - l0) * per_decade));
  std::vector<double> grid;
  for (std::size_t k = 0; k <= count; ++k) {
    grid.push_back(std::pow(10.0, l0 + static_cast<double>(k) / per_decade));
  }
  return grid;
}

QslQuantities quantities_for(const ExperimentConfig& config,
                             const std::map<std::string, double>& params) {
  if (config.preset == "product") {
    const auto it = params.find("n");
    const double n = it == params.end() ? 2.0 : it->second;
    if (n > static_cast<double>(kMaxDenseSites) && n == std::floor(n)) {
      const auto get = [&](const char* key, double fallback) {
        const auto p = params.find(key);
        return p == params.end() ? fallback : p->second;
      };
      return product_quantities_analytic({static_cast<std::size_t>(n), get("omega", 1.0),
                                          get("gamma", 1.0), get("theta", kQuarterPi),
                                          get("single_site", 0.0) != 0.0});
    }
  }
  const Preset preset = build_preset(config, params);
  return compute_quantities(preset.model, preset.psi0);
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json preset_json(const Preset& p) {
  json ops = json::array();
  for (const auto& l : p.model.lindblad_ops()) ops.push_back(matrix_json(l));
  json psi = json::array();
  for (Eigen::Index i = 0; i < p.psi0.amplitudes().size(); ++i) {
    psi.push_back({p.psi0.amplitudes()(i).real(), p.psi0.amplitudes()(i).imag()});
  }
  return {{"hamiltonian", matrix_json(p.model.hamiltonian())}, {"lindblad", ops}, {"psi0", psi}};
}

double emission_calibration() {
  static const double factor = calibrate_emission_rate();
  return factor;
}

}  // namespace

const char* library_version() { return LQSL_VERSION; }

Table cmd_qsl(const ExperimentConfig& config, const RunContext& ctx) {
  Table table;
  table.columns = {"sweep_value", "delta_h0", "g_term", "e_term", "v_coeff",
                   "t_qsl",       "t_lower",  "status"};
  const std::vector<double> points =
      config.sweep ? config.sweep->values : std::vector<double>{kNaN};
  table.rows.resize(points.size());
  parallel_for(points.size(), ctx.workers, [&](std::size_t i) {
    std::map<std::string, double> params = config.parameters;
    if (config.sweep) params[config.sweep->name] = points[i];
    const double target = params.contains("theta_target") ? params["theta_target"] : kQuarterPi;
    const QslQuantities q = quantities_for(config, params);

    std::vector<Cell> row;
    row.emplace_back(config.sweep ? Cell(points[i]) : Cell(std::string()));
    row.insert(row.end(), {q.delta_h0, q.g_term, q.e_term, q.v_coeff});
    try {
      row.insert(row.end(), {t_qsl(q, target), qsl_lower_bound(q, target), std::string("ok")});
    } catch (const FrozenDynamicsError&) {
      row.insert(row.end(), {kNaN, kNaN, std::string("frozen_dynamics")});
    } catch (const DomainError& e) {
      throw ConfigError(std::string("[qsl] theta_target: ") + e.what());
    }
    table.rows[i] = std::move(row);
  });
  table.extras["preset"] = config.preset;
  if (config.sweep) table.extras["sweep_name"] = config.sweep->name;
  return table;
}

Table cmd_fig1a(const ExperimentConfig& config, const RunContext& ctx) {
  const RawConfig& raw = config.raw;
  const std::vector<double> omegas =
      raw.numbers("fig1a", "omegas").value_or(std::vector<double>{0.01, 1.0, 4.0});
  const std::vector<double> gammas =
      log_grid(raw.number_or("fig1a", "gamma_min", 1e-3), raw.number_or("fig1a", "gamma_max", 1e4),
               raw.number_or("fig1a", "points_per_decade", 10.0));
  const double theta = raw.number_or("fig1a", "theta", kQuarterPi);
  const double target = raw.number_or("fig1a", "theta_target", kQuarterPi);

  Table table;
  table.columns = {"gamma"};
  for (const double w : omegas) table.columns.push_back("t_qsl_omega_" + short_number(w));
  table.rows.resize(gammas.size());
  parallel_for(gammas.size(), ctx.workers, [&](std::size_t i) {
    std::vector<Cell> row{gammas[i]};
    for (const double w : omegas) {
      const Preset p = dephasing_model({w, gammas[i], theta});
      row.emplace_back(t_qsl(compute_quantities(p.model, p.psi0), target));
    }
    table.rows[i] = std::move(row);
  });
  table.extras = {{"theta", theta}, {"theta_target", target}, {"omegas", omegas}};
  return table;
}

Table cmd_fig1b(const ExperimentConfig& config, const RunContext&) {
  const RawConfig& raw = config.raw;
  const double gamma = raw.number_or("fig1b", "gamma", config.parameter("gamma", 1.0));
  std::vector<double> targets;
  if (auto values = raw.numbers("fig1b", "theta_values")) {
    targets = *values;
  } else {
    const double lo = raw.number_or("fig1b", "theta_min", 0.05);
    const double hi = raw.number_or("fig1b", "theta_max", 1.55);
    const double step = raw.number_or("fig1b", "theta_step", 0.05);
    if (!(step > 0.0) || !(lo > 0.0) || hi < lo) {
      throw ConfigError("[fig1b] needs 0 < theta_min <= theta_max and theta_step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t k = 0; k <= count; ++k) targets.push_back(lo + static_cast<double>(k) * step);
  }
  constexpr double kCap = std::numbers::pi / 2 - 0.01;
  for (double& t : targets) {
    if (!(t > 0.0)) throw ConfigError("[fig1b] target angles must be positive");
    t = std::min(t, kCap);
  }

  const Preset emission = spontaneous_emission_model(gamma);
  const QslQuantities q = compute_quantities(emission.model, emission.psi0);
  const double max_target = *std::max_element(targets.begin(), targets.end());
  const double dt = config.integrator.dt;
  const double horizon = std::max(config.integrator.horizon,
                                  1.1 * exact_emission_time(gamma, max_target) + 10.0 * dt);
  EvolveOptions options;
  options.stop_angle = max_target;
  options.eig_stride = 100;
  const Trajectory traj = evolve(emission.model, emission.psi0, horizon, dt, options);

  Table table;
  table.columns = {"theta_target", "t_exa", "t_first_passage", "t_qsl"};
  for (const double target : targets) {
    double t_fp = kNaN;
    try {
      t_fp = first_passage_time(traj, target);
    } catch (const UnreachableError&) {
    }
    table.rows.push_back({target, exact_emission_time(gamma, target), t_fp, t_qsl(q, target)});
  }
  table.extras = {{"gamma", gamma},
                  {"dt", traj.step},
                  {"horizon", horizon},
                  {"gamma_eff_factor", kEmissionRateFactor},
                  {"trace_drift", traj.trace_drift},
                  {"min_eig", traj.min_eig}};
  return table;
}

Table cmd_scaling(const ExperimentConfig& config, const RunContext&) {
  const RawConfig& raw = config.raw;
  const std::string axis = raw.word("scaling", "axis").value_or("n");
  if (axis != "n" && axis != "gamma") throw ConfigError("[scaling] axis must be n or gamma");
  const double omega = raw.number_or("scaling", "omega", 0.1);
  const double gamma = raw.number_or("scaling", "gamma", 10.0);
  const double theta = raw.number_or("scaling", "theta", kQuarterPi);
  const double target = raw.number_or("scaling", "theta_target", kQuarterPi);
  const double fixed_n = raw.number_or("scaling", "n", 16.0);

  std::vector<double> values;
  if (axis == "n") {
    if (auto v = raw.numbers("scaling", "n_values")) {
      values = *v;
    } else {
      for (int n = 4; n <= 256; n += 4) values.push_back(n);
    }
  } else {
    values = raw.numbers("scaling", "gamma_values").value_or(log_grid(1e1, 1e4, 4.0));
  }

  Table table;
  table.columns = {axis, "t_qsl"};
  std::vector<std::pair<double, double>> samples;
  for (const double v : values) {
    const double n = axis == "n" ? v : fixed_n;
    if (n < 1.0 || n != std::floor(n)) throw ConfigError("[scaling] n must be a positive integer");
    const QslQuantities q = product_quantities_analytic(
        {static_cast<std::size_t>(n), omega, axis == "gamma" ? v : gamma, theta});
    const double t = t_qsl(q, target);
    table.rows.push_back({v, t});
    samples.emplace_back(v, t);
  }
  table.extras = {{"axis", axis}, {"omega", omega}, {"theta", theta},
                  {"theta_target", target}};
  if (axis == "n") table.extras["gamma"] = gamma;
  if (axis == "gamma") table.extras["n"] = fixed_n;
  if (samples.size() >= 3) {
    const double slope = scaling_exponent(samples);
    table.rows.push_back({std::string("fitted_exponent"), slope});
    table.extras["fitted_exponent"] = slope;
  }
  return table;
}

Table cmd_qfi(const ExperimentConfig& config, const RunContext&) {
  const std::vector<double> grid = config.raw.numbers("qfi", "t_values")
                                       .value_or(std::vector<double>{1e-3, 2e-3, 5e-3, 1e-2});
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() <= 0.0) {
    throw ConfigError("[qfi] t_values must be positive and increasing");
  }
  const Preset preset = build_preset(config, config.parameters);
  FisherOptions options;
  options.window_scale = config.raw.number_or("qfi", "window_scale", options.window_scale);
  const auto reports =
      verify_fisher_tradeoff(preset.model, preset.psi0, grid, config.integrator.dt, options);

  Table table;
  table.columns = {"t", "fidelity", "qfi_estimate", "qfi_bound", "satisfied", "warning"};
  for (const FisherReport& r : reports) {
    table.rows.push_back({r.horizon_t, r.fidelity_at_t, r.qfi_estimate, r.qfi_bound,
                          std::string(r.satisfied ? "true" : "false"),
                          std::string(r.in_window ? "" : "outside_short_time_window")});
  }
  const QslQuantities q = compute_quantities(preset.model, preset.psi0);
  table.extras = {{"preset", config.preset},
                  {"short_time_window", short_time_window(q, options.window_scale)},
                  {"v_coeff", q.v_coeff},
                  {"e_term", q.e_term}};
  return table;
}

Table cmd_evolve(const ExperimentConfig& config, const RunContext&) {
  const Preset preset = build_preset(config, config.parameters);
  const double horizon = config.integrator.horizon;
  const double dt = std::min(config.integrator.dt, horizon);
  const auto n_steps = static_cast<std::size_t>(std::max(1.0, std::ceil(horizon / dt - 1e-9)));
  const std::uint64_t default_stride = std::max<std::size_t>(1, (n_steps + 999) / 1000);
  const std::uint64_t stride =
      config.raw.unsigned_integer("evolve", "output_stride").value_or(default_stride);
  if (stride == 0) throw ConfigError("[evolve] output_stride must be positive");

  EvolveOptions options;
  options.state_stride = stride;
  const Trajectory traj = evolve(preset.model, preset.psi0, horizon, dt, options);

  Table table;
  table.columns = {"t", "theta", "trace_drift", "min_eig"};
  for (std::size_t j = 0; j < traj.states.size(); ++j) {
    const std::size_t k = j * traj.state_stride;
    const ComplexMatrix& rho = traj.states[j].matrix();
    table.rows.push_back({traj.times[k], traj.bures_angles[k],
                          std::abs(rho.trace().real() - 1.0),
                          min_eigenvalue_hermitian(rho, 1e-6)});
  }
  table.extras = {{"preset", config.preset},
                  {"step", traj.step},
                  {"max_trace_drift", traj.trace_drift},
                  {"min_eig", traj.min_eig},
                  {"renormalizations", traj.renormalizations}};
  return table;
}

VerifyConfig verify_config_from(const ExperimentConfig& config, const RunContext& ctx) {
  const RawConfig& raw = config.raw;
  VerifyConfig v;
  v.seed = ctx.seed.value_or(raw.unsigned_integer("verify", "seed").value_or(0));
  v.workers = ctx.workers;
  v.models = raw.unsigned_integer("verify", "models").value_or(v.models);
  v.tolerance = raw.number_or("verify", "tolerance", v.tolerance);
  v.fisher_models = raw.unsigned_integer("verify", "fisher_models").value_or(v.fisher_models);
  v.log_samples = raw.unsigned_integer("verify", "log_samples").value_or(v.log_samples);
  v.differential_points =
      raw.unsigned_integer("verify", "differential_points").value_or(v.differential_points);
  v.step_fraction = raw.number_or("verify", "step_fraction", v.step_fraction);
  v.horizon_multiple = raw.number_or("verify", "horizon_multiple", v.horizon_multiple);
  v.algebraic_tolerance = raw.number_or("verify", "algebraic_tolerance", v.algebraic_tolerance);
  v.fisher_tolerance = raw.number_or("verify", "fisher_tolerance", v.fisher_tolerance);
  v.fisher_dt = raw.number_or("verify", "fisher_dt", v.fisher_dt);
  v.model_spec.min_dim = raw.unsigned_integer("verify", "min_dim").value_or(v.model_spec.min_dim);
  v.model_spec.max_dim = raw.unsigned_integer("verify", "max_dim").value_or(v.model_spec.max_dim);
  if (v.model_spec.min_dim < 1 || v.model_spec.max_dim < v.model_spec.min_dim) {
    throw ConfigError("[verify] needs 1 <= min_dim <= max_dim");
  }
  if (!(v.step_fraction > 0.0) || !(v.horizon_multiple > v.step_fraction)) {
    throw ConfigError("[verify] needs 0 < step_fraction < horizon_multiple");
  }
  return v;
}

json to_json(const VerifyReport& report, const VerifyConfig& config) {
  json properties = json::array();
  for (const PropertyResult& p : report.properties) {
    json details = json::array();
    for (const Violation& v : p.violations) {
      json d = {{"index", v.index},
                {"sub_seed", v.sub_seed},
                {"margin", v.margin},
                {"parameters", v.parameters}};
      if (v.model) d["model"] = preset_json(*v.model);
      details.push_back(std::move(d));
    }
    properties.push_back({{"name", p.name},
                          {"checks", p.checks},
                          {"passed", p.passed},
                          {"skipped", p.skipped},
                          {"violations", p.violations.size()},
                          {"worst_margin", p.worst_margin},
                          {"tolerance", p.tolerance},
                          {"violation_details", std::move(details)}});
  }
  json settings = {{"models", config.models},
                   {"targets", config.targets},
                   {"tolerance", config.tolerance},
                   {"step_fraction", config.step_fraction},
                   {"horizon_multiple", config.horizon_multiple},
                   {"differential_points", config.differential_points},
                   {"differential_margin", config.differential_margin},
                   {"min_dim", config.model_spec.min_dim},
                   {"max_dim", config.model_spec.max_dim},
                   {"max_h_norm", config.model_spec.max_h_norm},
                   {"max_l_norm", config.model_spec.max_l_norm},
                   {"max_ops", config.model_spec.max_ops},
                   {"fisher_models", config.fisher_models},
                   {"fisher_grid", config.fisher_grid},
                   {"fisher_dt", config.fisher_dt},
                   {"fisher_tolerance", config.fisher_tolerance},
                   {"log_samples", config.log_samples},
                   {"algebraic_tolerance", config.algebraic_tolerance}};
  return {{"seed", config.seed},
          {"all_passed", report.all_passed()},
          {"settings", std::move(settings)},
          {"properties", std::move(properties)},
          {"version", library_version()}};
}

json make_metadata(const std::string& command, const ExperimentConfig& config,
                   const RunContext& ctx, const json& extras) {
  json echo = json::object();
  for (const auto& [section, entries] : config.raw.sections()) {
    json s = json::object();
    for (const auto& [key, entry] : entries) s[key] = entry.text;
    echo[section] = std::move(s);
  }
  json meta = {{"command", command},
               {"version", library_version()},
               {"config", std::move(echo)},
               {"dt", config.integrator.dt},
               {"horizon", config.integrator.horizon},
               {"gamma_eff_factor", kEmissionRateFactor},
               {"gamma_eff_calibrated", emission_calibration()},
               {"extras", extras}};
  const std::optional<std::uint64_t> seed =
      ctx.seed ? ctx.seed : config.raw.unsigned_integer("verify", "seed");
  meta["seed"] = seed ? json(*seed) : json(nullptr);
  return meta;
}

}  // namespace lqsl
