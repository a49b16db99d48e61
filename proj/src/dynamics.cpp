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

#include "lqsl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lqsl/error.hpp"

namespace lqsl {

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> lindblad_ops)
    : hamiltonian_(std::move(hamiltonian)), lindblad_ops_(std::move(lindblad_ops)) {
  require_square(hamiltonian_, "hamiltonian");
  const double dev = hermitian_deviation(hamiltonian_);
  if (dev > default_tolerances().hermitian) {
    throw DomainError("hamiltonian is not Hermitian (max deviation " + std::to_string(dev) +
                      ")");
  }
  effective_hamiltonian_ = hamiltonian_;
  for (const auto& l : lindblad_ops_) {
    require_same_dim(hamiltonian_, l, "lindblad operator");
    effective_hamiltonian_.noalias() -= cplx(0.0, 0.5) * (l.adjoint() * l);
  }
}

LindbladModel LindbladModel::scaled(double lambda) const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(lindblad_ops_.size());
  const double root = std::sqrt(lambda);
  for (const auto& l : lindblad_ops_) ops.push_back(root * l);
  return LindbladModel(lambda * hamiltonian_, std::move(ops));
}

ComplexMatrix dissipator(const ComplexMatrix& l, const ComplexMatrix& rho) {
  require_same_dim(l, rho, "dissipator");
  const ComplexMatrix ldl = l.adjoint() * l;
  ComplexMatrix out = l * rho * l.adjoint();
  out.noalias() -= 0.5 * (ldl * rho);
  out.noalias() -= 0.5 * (rho * ldl);
  return out;
}

ComplexMatrix adjoint_dissipator(const ComplexMatrix& l, const ComplexMatrix& a) {
  require_same_dim(l, a, "adjoint_dissipator");
  const ComplexMatrix ldl = l.adjoint() * l;
  ComplexMatrix out = l.adjoint() * a * l;
  out.noalias() -= 0.5 * (ldl * a);
  out.noalias() -= 0.5 * (a * ldl);
  return out;
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
  require_same_dim(model.hamiltonian(), rho, "lindblad_rhs");
  // -i H_eff rho + i rho H_eff^dagger + sum L rho L^dagger, H_eff = H - (i/2) sum L^dagger L.
  // Holds for non-Hermitian rho as well.
  const ComplexMatrix& h_eff = model.effective_hamiltonian();
  ComplexMatrix out = cplx(0.0, -1.0) * (h_eff * rho);
  out.noalias() += cplx(0.0, 1.0) * (rho * h_eff.adjoint());
  for (const auto& l : model.lindblad_ops()) {
    out.noalias() += l * rho * l.adjoint();
  }
  return out;
}

ComplexMatrix rk4_step(const LindbladModel& model, const ComplexMatrix& rho, double h) {
  const ComplexMatrix k1 = lindblad_rhs(model, rho);
  const ComplexMatrix k2 = lindblad_rhs(model, rho + (0.5 * h) * k1);
  const ComplexMatrix k3 = lindblad_rhs(model, rho + (0.5 * h) * k2);
  const ComplexMatrix k4 = lindblad_rhs(model, rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double angle_from_overlap(double overlap) {
  return std::acos(std::sqrt(std::clamp(overlap, 0.0, 1.0)));
}

namespace {

std::size_t step_count(double t_end, double dt) {
  if (!(t_end > 0.0) || !(dt > 0.0) || !std::isfinite(t_end) || !std::isfinite(dt)) {
    throw DomainError("evolve: t_end and dt must be positive and finite");
  }
  if (dt > t_end) throw DomainError("evolve: dt must not exceed t_end");
  return static_cast<std::size_t>(std::max(1.0, std::ceil(t_end / dt - 1e-9)));
}

double overlap(const ComplexMatrix& rho0, const ComplexMatrix& rho) {
  return trace_product(rho0, rho).real();
}

}  // namespace

ComplexMatrix Trajectory::state_at(std::size_t k) const {
  if (k >= times.size()) throw DomainError("Trajectory::state_at: index out of range");
  const std::size_t j = k / state_stride;
  ComplexMatrix rho = states.at(j).matrix();
  for (std::size_t i = j * state_stride; i < k; ++i) {
    rho = rk4_step(model, rho, step);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > renormalize_threshold) rho /= tr;
  }
  return rho;
}

Trajectory evolve(const LindbladModel& model, const PureState& psi0, double t_end, double dt,
                  const EvolveOptions& options) {
  if (psi0.dim() != model.dim()) {
    throw DimensionError("evolve: state dim " + std::to_string(psi0.dim()) +
                         " != model dim " + std::to_string(model.dim()));
  }
  const std::size_t n_steps = step_count(t_end, dt);
  const std::size_t state_stride = std::max<std::size_t>(1, options.state_stride);
  const std::size_t eig_stride = std::max<std::size_t>(1, options.eig_stride);
  const double h = t_end / static_cast<double>(n_steps);

  Trajectory traj{model, DensityMatrix::from_pure(psi0)};
  traj.step = h;
  traj.state_stride = state_stride;
  traj.renormalize_threshold = options.renormalize_threshold;
  traj.times.reserve(n_steps + 1);
  traj.bures_angles.reserve(n_steps + 1);
  traj.states.reserve(n_steps / state_stride + 1);

  const ComplexMatrix& rho0 = traj.rho0.matrix();
  ComplexMatrix rho = rho0;
  traj.times.push_back(0.0);
  traj.bures_angles.push_back(angle_from_overlap(overlap(rho0, rho)));
  traj.states.push_back(traj.rho0);
  traj.min_eig = min_eigenvalue_hermitian(rho, 1e-8);

  for (std::size_t k = 1; k <= n_steps; ++k) {
    rho = rk4_step(model, rho, h);
    const double t = static_cast<double>(k) * h;

    const double drift = std::abs(rho.trace().real() - 1.0);
    traj.trace_drift = std::max(traj.trace_drift, drift);
    if (drift > options.max_trace_drift) {
      throw IntegrationError("trace drift " + std::to_string(drift) + " at t = " +
                             std::to_string(t) + "; reduce dt");
    }
    if (drift > options.renormalize_threshold) {
      rho /= rho.trace().real();
      ++traj.renormalizations;
    }

    const bool last = k == n_steps;
    const double theta = angle_from_overlap(overlap(rho0, rho));
    const bool stop = options.stop_angle && theta >= *options.stop_angle;
    if (k % eig_stride == 0 || last || stop) {
      const double lmin = min_eigenvalue_hermitian(rho, 1e-6);
      traj.min_eig = std::min(traj.min_eig, lmin);
      if (lmin < options.min_eig_floor) {
        throw IntegrationError("eigenvalue " + std::to_string(lmin) + " at t = " +
                               std::to_string(t) + "; reduce dt");
      }
    }

    traj.times.push_back(t);
    traj.bures_angles.push_back(theta);
    if (k % state_stride == 0) traj.states.push_back(DensityMatrix::trusted(rho));
    if (stop) break;
  }
  return traj;
}

ComplexMatrix propagate(const LindbladModel& model, ComplexMatrix rho, double duration,
                        double dt) {
  require_same_dim(model.hamiltonian(), rho, "propagate");
  const std::size_t n_steps = step_count(duration, std::min(dt, duration));
  const double h = duration / static_cast<double>(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) rho = rk4_step(model, rho, h);
  return rho;
}

double first_passage_time(const Trajectory& traj, double theta_target, double time_resolution) {
  if (traj.times.empty()) throw DomainError("first_passage_time: empty trajectory");
  if (!(theta_target > 0.0) || theta_target > std::numbers::pi / 2) {
    throw DomainError("first_passage_time: target must lie in (0, pi/2]");
  }
  const auto hit = std::find_if(traj.bures_angles.begin(), traj.bures_angles.end(),
                                [&](double a) { return a >= theta_target; });
  if (hit == traj.bures_angles.end()) {
    throw UnreachableError("Bures angle " + std::to_string(theta_target) +
                           " not reached within horizon t = " +
                           std::to_string(traj.times.back()));
  }
  const auto k = static_cast<std::size_t>(hit - traj.bures_angles.begin());
  if (k == 0) return 0.0;

  const ComplexMatrix start = traj.state_at(k - 1);
  const ComplexMatrix& rho0 = traj.rho0.matrix();
  double lo = 0.0;
  double hi = traj.times[k] - traj.times[k - 1];
  while (hi - lo > time_resolution) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double theta = angle_from_overlap(overlap(rho0, rk4_step(traj.model, start, mid)));
    (theta >= theta_target ? hi : lo) = mid;
  }
  return traj.times[k - 1] + hi;
}

double theta_dot_exact(const LindbladModel& model, const DensityMatrix& rho0,
                       const DensityMatrix& rho_t, double theta_t) {
  constexpr double kSingularMargin = 1e-6;
  if (theta_t < kSingularMargin || theta_t > std::numbers::pi / 2 - kSingularMargin) {
    throw SingularPointError("theta_dot_exact: angle " + std::to_string(theta_t) +
                             " too close to 0 or pi/2");
  }
  const ComplexMatrix& r0 = rho0.matrix();
  const ComplexMatrix& rt = rho_t.matrix();
  require_same_dim(model.hamiltonian(), r0, "theta_dot_exact");
  require_same_dim(r0, rt, "theta_dot_exact");

  const ComplexMatrix coherent = cplx(0.0, 1.0) * commutator(r0, model.hamiltonian());
  double numerator = trace_product(coherent, rt).real();
  for (const auto& l : model.lindblad_ops()) {
    numerator -= trace_product(rt, adjoint_dissipator(l, r0)).real();
  }
  return numerator / std::sin(2.0 * theta_t);
}

}  // namespace lqsl
