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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lqsl/linalg.hpp"

namespace lqsl {

/// Generator of d rho/dt = -i[H, rho] + sum_k D[L_k] rho (hbar = 1).
class LindbladModel {
 public:
  /// Throws DomainError if H is not Hermitian, DimensionError on mixed dims.
  LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> lindblad_ops = {});

  std::size_t dim() const { return static_cast<std::size_t>(hamiltonian_.rows()); }
  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<ComplexMatrix>& lindblad_ops() const { return lindblad_ops_; }
  bool closed() const { return lindblad_ops_.empty(); }

  /// H - (i/2) sum_k L_k^dagger L_k
  const ComplexMatrix& effective_hamiltonian() const { return effective_hamiltonian_; }

  /// Time-rescaled generator: H -> lambda H, L_k -> sqrt(lambda) L_k.
  LindbladModel scaled(double lambda) const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> lindblad_ops_;
  ComplexMatrix effective_hamiltonian_;
};

/// L rho L^dagger - {L^dagger L, rho}/2
ComplexMatrix dissipator(const ComplexMatrix& l, const ComplexMatrix& rho);

/// L^dagger a L - {L^dagger L, a}/2 (Heisenberg-picture adjoint of dissipator).
ComplexMatrix adjoint_dissipator(const ComplexMatrix& l, const ComplexMatrix& a);

/// -i[H, rho] + sum_k D[L_k] rho
ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho);

/// One classical RK4 step of size h.
ComplexMatrix rk4_step(const LindbladModel& model, const ComplexMatrix& rho, double h);

/// arccos(sqrt(clamp(overlap, 0, 1)))
double angle_from_overlap(double overlap);

struct EvolveOptions {
  /// Keep every state_stride-th state (always including the first). 1 keeps all.
  std::size_t state_stride = 1;
  /// Minimum eigenvalue is checked every eig_stride steps and at the final step.
  std::size_t eig_stride = 1;
  /// Stop after the first step whose angle reaches this value.
  std::optional<double> stop_angle;
  double max_trace_drift = 1e-6;
  double min_eig_floor = -1e-5;
  /// Trace is renormalized only when |Tr rho - 1| exceeds this.
  double renormalize_threshold = 1e-12;
};

/// Sampled solution of the master equation from a pure initial state.
struct Trajectory {
  Trajectory(LindbladModel m, DensityMatrix initial)
      : model(std::move(m)), rho0(std::move(initial)) {}

  LindbladModel model;
  DensityMatrix rho0;
  double step = 0.0;
  std::size_t state_stride = 1;
  double renormalize_threshold = 1e-12;
  std::vector<double> times;
  std::vector<double> bures_angles;
  /// states[j] is the state at times[j * state_stride].
  std::vector<DensityMatrix> states;
  double trace_drift = 0.0;
  double min_eig = 0.0;
  std::size_t renormalizations = 0;

  /// State at grid index k, re-integrated from the nearest stored state if needed.
  ComplexMatrix state_at(std::size_t k) const;
};

/// Fixed-step RK4 integration of the master equation from |psi0><psi0| to t_end.
/// The step is t_end / ceil(t_end / dt), so the grid ends exactly at t_end.
/// Throws IntegrationError if the trace drifts past max_trace_drift or an
/// eigenvalue drops below min_eig_floor.
Trajectory evolve(const LindbladModel& model, const PureState& psi0, double t_end, double dt,
                  const EvolveOptions& options = {});

/// Final state only, starting from an arbitrary rho.
ComplexMatrix propagate(const LindbladModel& model, ComplexMatrix rho, double duration,
                        double dt);

/// Earliest time the Bures angle reaches theta_target. The crossing interval on
/// the grid is refined by bisection over a re-integrated partial RK4 step.
/// Throws UnreachableError if the angle never reaches the target.
double first_passage_time(const Trajectory& traj, double theta_target,
                          double time_resolution = 1e-10);

/// Exact d Theta / dt:
///   [Tr(i[rho0, H] rho_t) - sum_k Tr(rho_t D^dagger[L_k] rho0)] / sin(2 theta_t).
/// Throws SingularPointError within 1e-6 of 0 or pi/2.
double theta_dot_exact(const LindbladModel& model, const DensityMatrix& rho0,
                       const DensityMatrix& rho_t, double theta_t);

}  // namespace lqsl
