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

#include "lqsl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lqsl/error.hpp"
#include "lqsl/fisher.hpp"
#include "lqsl/parallel.hpp"

namespace lqsl {

namespace {

enum SuiteSalt : std::uint64_t {
  kDominanceSalt = 1,
  kFisherSalt = 2,
  kLogSalt = 3,
  kOrderingSalt = 4,
};

std::uint64_t suite_seed(std::uint64_t seed, SuiteSalt salt, std::size_t index) {
  return mix_seed(mix_seed(seed, salt), index);
}

struct Check {
  bool passed = true;
  bool skipped = false;
  double margin = 0.0;
  std::map<std::string, double> parameters;
};

struct ModelChecks {
  std::uint64_t sub_seed = 0;
  std::optional<Preset> model;
  std::vector<Check> dominance;
  std::vector<Check> differential;
};

PropertyResult start(const char* name, double tolerance) {
  PropertyResult r;
  r.name = name;
  r.tolerance = tolerance;
  r.worst_margin = std::numeric_limits<double>::infinity();
  return r;
}

void record(PropertyResult& r, const Check& c, std::size_t index, std::uint64_t sub_seed,
            const std::optional<Preset>& model) {
  if (c.skipped) {
    ++r.skipped;
    return;
  }
  ++r.checks;
  r.worst_margin = std::min(r.worst_margin, c.margin);
  if (c.passed) {
    ++r.passed;
    return;
  }
  Violation v;
  v.property = r.name;
  v.index = index;
  v.sub_seed = sub_seed;
  v.margin = c.margin;
  v.parameters = c.parameters;
  v.model = model;
  r.violations.push_back(std::move(v));
}

void finish(PropertyResult& r) {
  if (r.checks == 0) r.worst_margin = 0.0;
}

ModelChecks check_model(const VerifyConfig& config, std::size_t index) {
  ModelChecks out;
  out.sub_seed = suite_seed(config.seed, kDominanceSalt, index);
  Rng rng(out.sub_seed);
  Preset preset = random_model(rng, config.model_spec);
  const LindbladModel& model = preset.model;
  const QslQuantities q = compute_quantities(model, preset.psi0);
  const double scale = generator_scale(model);

  const auto skip_all = [&] {
    Check skipped;
    skipped.skipped = true;
    out.dominance.assign(config.targets.size(), skipped);
    out.model = std::move(preset);
    return out;
  };
  if (!(scale > 0.0) || (q.v_coeff <= 0.0 && q.e_term <= 0.0)) return skip_all();

  const double dt = config.step_fraction / scale;
  const double horizon = config.horizon_multiple / scale;
  EvolveOptions options;
  options.stop_angle = *std::max_element(config.targets.begin(), config.targets.end());
  options.eig_stride = 10;
  const Trajectory traj = evolve(model, preset.psi0, horizon, dt, options);

  for (const double target : config.targets) {
    Check c;
    c.parameters = {{"theta_target", target}, {"dt", dt}, {"horizon", horizon},
                    {"dim", static_cast<double>(model.dim())},
                    {"lindblad_ops", static_cast<double>(model.lindblad_ops().size())}};
    const double bound = t_qsl(q, target);
    c.parameters["t_qsl"] = bound;
    try {
      const double t_fp = first_passage_time(traj, target);
      c.parameters["t_first_passage"] = t_fp;
      c.margin = t_fp - bound;
      c.passed = t_fp >= bound - config.tolerance;
    } catch (const UnreachableError&) {
      c.skipped = true;
    }
    out.dominance.push_back(std::move(c));
  }

  const double lo = config.differential_margin;
  const double hi = std::numbers::pi / 2 - config.differential_margin;
  std::vector<std::size_t> interior;
  for (std::size_t k = 1; k < traj.bures_angles.size(); ++k) {
    if (traj.bures_angles[k] > lo && traj.bures_angles[k] < hi) interior.push_back(k);
  }
  const std::size_t samples = std::min(config.differential_points, interior.size());
  for (std::size_t j = 0; j < samples; ++j) {
    const std::size_t k = interior[j * interior.size() / samples];
    const double theta = traj.bures_angles[k];
    const double exact =
        theta_dot_exact(model, traj.rho0, DensityMatrix::trusted(traj.state_at(k)), theta);
    const double bound = theta_dot_bound(q, theta);
    Check c;
    c.margin = bound - exact;
    c.passed = exact <= bound + config.tolerance;
    c.parameters = {{"t", traj.times[k]}, {"theta", theta}, {"theta_dot", exact},
                    {"theta_dot_bound", bound}, {"dt", dt}};
    out.differential.push_back(std::move(c));
  }
  out.model = std::move(preset);
  return out;
}

}  // namespace

Preset random_model(Rng& rng, const RandomModelSpec& spec) {
  const auto dim = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(spec.min_dim), static_cast<std::int64_t>(spec.max_dim)));
  ComplexMatrix h = random_hermitian(rng, dim, rng.uniform(0.0, spec.max_h_norm));
  const auto n_ops = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(spec.min_ops), static_cast<std::int64_t>(spec.max_ops)));
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < n_ops; ++k) {
    ops.push_back(random_matrix(rng, dim, rng.uniform(0.0, spec.max_l_norm)));
  }
  PureState psi0 = random_pure_state(rng, dim);
  return {LindbladModel(std::move(h), std::move(ops)), std::move(psi0)};
}

double generator_scale(const LindbladModel& model) {
  double scale = 2.0 * frobenius_norm(model.hamiltonian());
  for (const auto& l : model.lindblad_ops()) scale += l.squaredNorm();
  return scale;
}

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.violations.empty(); });
}

std::vector<PropertyResult> verify_dominance(const VerifyConfig& config) {
  std::vector<ModelChecks> per_model(config.models);
  parallel_for(config.models, config.workers,
               [&](std::size_t i) { per_model[i] = check_model(config, i); });

  PropertyResult dominance = start(kBoundDominance, config.tolerance);
  PropertyResult differential = start(kDifferentialDominance, config.tolerance);
  for (std::size_t i = 0; i < per_model.size(); ++i) {
    const ModelChecks& m = per_model[i];
    for (const Check& c : m.dominance) record(dominance, c, i, m.sub_seed, m.model);
    for (const Check& c : m.differential) record(differential, c, i, m.sub_seed, m.model);
  }
  finish(dominance);
  finish(differential);
  return {std::move(dominance), std::move(differential)};
}

PropertyResult verify_fisher(const VerifyConfig& config) {
  struct Outcome {
    std::uint64_t sub_seed = 0;
    std::optional<Preset> model;
    std::vector<Check> checks;
  };
  std::vector<Outcome> outcomes(config.fisher_models);
  parallel_for(config.fisher_models, config.workers, [&](std::size_t i) {
    Outcome& o = outcomes[i];
    o.sub_seed = suite_seed(config.seed, kFisherSalt, i);
    Rng rng(o.sub_seed);
    Preset preset = random_model(rng, config.fisher_spec);
    const double scale = generator_scale(preset.model);
    const double dt = scale > 0.0 ? std::min(config.fisher_dt, 0.005 / scale) : config.fisher_dt;
    FisherOptions options;
    options.relative_tolerance = config.fisher_tolerance;
    const auto reports =
        verify_fisher_tradeoff(preset.model, preset.psi0, config.fisher_grid, dt, options);
    for (const FisherReport& r : reports) {
      Check c;
      c.passed = r.satisfied;
      c.margin = r.qfi_bound > 0.0 ? (r.qfi_bound - r.qfi_estimate) / r.qfi_bound
                                   : -r.qfi_estimate;
      c.parameters = {{"t", r.horizon_t},
                      {"fidelity", r.fidelity_at_t},
                      {"qfi_estimate", r.qfi_estimate},
                      {"qfi_bound", r.qfi_bound},
                      {"dt", dt}};
      o.checks.push_back(std::move(c));
    }
    o.model = std::move(preset);
  });

  PropertyResult result = start(kFisherTradeoff, config.fisher_tolerance);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (const Check& c : outcomes[i].checks) {
      record(result, c, i, outcomes[i].sub_seed, outcomes[i].model);
    }
  }
  finish(result);
  return result;
}

PropertyResult verify_log_inequality(const VerifyConfig& config) {
  PropertyResult result = start(kLogInequality, config.algebraic_tolerance);
  const std::uint64_t sub_seed = suite_seed(config.seed, kLogSalt, 0);
  Rng rng(sub_seed);
  for (std::size_t i = 0; i < config.log_samples; ++i) {
    const double x = rng.log_uniform(1e-6, 1e6);
    Check c;
    c.margin = log_inequality_margin(x);
    c.passed = c.margin > -config.algebraic_tolerance;
    c.parameters = {{"x", x}};
    record(result, c, i, sub_seed, std::nullopt);
  }
  finish(result);
  return result;
}

PropertyResult verify_lower_bound_ordering(const VerifyConfig& config) {
  PropertyResult result = start(kLowerBoundOrdering, config.algebraic_tolerance);
  const std::uint64_t sub_seed = suite_seed(config.seed, kOrderingSalt, 0);
  Rng rng(sub_seed);
  for (std::size_t i = 0; i < config.log_samples; ++i) {
    const double v = rng.log_uniform(1e-3, 1e3);
    const double e = rng.log_uniform(1e-3, 1e3);
    const double theta = rng.uniform(1e-3, std::numbers::pi / 2);
    const QslQuantities q = QslQuantities::from_terms(0.5 * v, 0.0, e);
    const double upper = t_qsl(q, theta);
    const double lower = qsl_lower_bound(q, theta);
    const double scale = std::max(1.0, upper);
    Check c;
    c.margin = (upper - lower) / scale;
    c.passed = lower <= upper + config.algebraic_tolerance * scale;
    c.parameters = {{"v_coeff", v}, {"e_term", e}, {"theta_target", theta},
                    {"t_qsl", upper}, {"t_lower", lower}};
    record(result, c, i, sub_seed, std::nullopt);
  }
  finish(result);
  return result;
}

VerifyReport run_verification(const VerifyConfig& config) {
  VerifyReport report;
  report.properties = verify_dominance(config);
  report.properties.push_back(verify_fisher(config));
  report.properties.push_back(verify_log_inequality(config));
  report.properties.push_back(verify_lower_bound_ordering(config));
  return report;
}

}  // namespace lqsl
