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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace lqsl {

using cplx = std::complex<double>;

/// Dense complex square matrix in row-major order. Carries operators and states.
using ComplexMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;

/// Numerical tolerances shared by every validation check.
struct Tolerances {
  double hermitian = 1e-10;  ///< max |m - m^dagger| entry
  double trace = 1e-10;      ///< |Tr rho - 1|
  double positivity = 1e-8;  ///< smallest admissible eigenvalue is -positivity
  double normalization = 1e-12;
};

/// Process-wide defaults. Mutable so a CLI can override them from configuration.
Tolerances& default_tolerances();

inline constexpr std::size_t kDefaultKronDimCap = std::size_t{1} << 12;

/// Pure state |psi> with unit Euclidean norm.
class PureState {
 public:
  /// Throws DomainError unless |amplitudes| = 1 within tolerance.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales the input to unit norm; throws DomainError on the zero vector.
  static PureState normalized(ComplexVector amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates all three invariants; throws DomainError on violation.
  explicit DensityMatrix(ComplexMatrix m);

  /// Skips validation. For states already known to be valid (integrator output
  /// whose diagnostics are tracked separately).
  static DensityMatrix trusted(ComplexMatrix m);

  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Tr(rho^2)
  double purity() const;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Throws DimensionError unless m is square and non-empty.
void require_square(const ComplexMatrix& m, const char* what);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

/// sqrt(Tr(m^dagger m))
double frobenius_norm(const ComplexMatrix& m);

/// Tr(a b) in O(d^2) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b. Throws ResourceError if the result exceeds dim_cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t dim_cap = kDefaultKronDimCap);

/// Kronecker product of the vectors a (x) b.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Largest |m_ij - conj(m_ji)|.
double hermitian_deviation(const ComplexMatrix& m);

/// Smallest eigenvalue of the Hermitian part of m. Throws DomainError if m
/// deviates from Hermitian by more than herm_tol.
double min_eigenvalue_hermitian(const ComplexMatrix& m, double herm_tol = 1e-8);

ComplexMatrix identity(std::size_t dim);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_- = |1><0| with |0> the excited state.
ComplexMatrix lowering();
}  // namespace pauli

/// I (x) ... (x) op (x) ... (x) I with op on `site` of `n_sites` two-level sites.
ComplexMatrix embed_site(const ComplexMatrix& op, std::size_t site, std::size_t n_sites,
                         std::size_t dim_cap = kDefaultKronDimCap);

}  // namespace lqsl
