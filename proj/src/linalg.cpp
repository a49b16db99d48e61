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

#include "lqsl/linalg.hpp"

#include <cmath>
#include <string>

#include "lqsl/error.hpp"

namespace lqsl {

Tolerances& default_tolerances() {
  static Tolerances tol;
  return tol;
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DomainError("pure state must have dim >= 1");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > default_tolerances().normalization) {
    throw DomainError("pure state not normalized: |psi| = " + std::to_string(norm));
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || norm == 0.0) {
    throw DomainError("cannot normalize the zero vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

ComplexMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "density matrix");
  const Tolerances& tol = default_tolerances();
  const double dev = hermitian_deviation(matrix_);
  if (dev > tol.hermitian) {
    throw DomainError("density matrix not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw DomainError("density matrix trace " + std::to_string(tr) + " != 1");
  }
  const double lmin = min_eigenvalue_hermitian(matrix_, tol.hermitian);
  if (lmin < -tol.positivity) {
    throw DomainError("density matrix not positive (min eigenvalue " + std::to_string(lmin) +
                      ")");
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), Unchecked{});
}

double DensityMatrix::purity() const { return trace_product(matrix_, matrix_).real(); }

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " +
                         std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
  }
}

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_product");
  // Tr(ab) = sum_ij a_ij b_ji
  return a.cwiseProduct(b.transpose()).sum();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  ComplexMatrix out = a * b;
  out.noalias() -= b * a;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t dim_cap) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (static_cast<std::size_t>(ra * rb) > dim_cap ||
      static_cast<std::size_t>(ca * cb) > dim_cap) {
    throw ResourceError("kron: result dimension " + std::to_string(ra * rb) +
                        " exceeds cap " + std::to_string(dim_cap));
  }
  ComplexMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

double hermitian_deviation(const ComplexMatrix& m) {
  require_square(m, "hermitian_deviation");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue_hermitian(const ComplexMatrix& m, double herm_tol) {
  const double dev = hermitian_deviation(m);
  if (dev > herm_tol) {
    throw DomainError("min_eigenvalue_hermitian: matrix not Hermitian (deviation " +
                      std::to_string(dev) + ")");
  }
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  if (h.rows() == 1) return h(0, 0).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix lowering() {
  ComplexMatrix m(2, 2);
  m << 0.0, 0.0, 1.0, 0.0;
  return m;
}

}  // namespace pauli

ComplexMatrix embed_site(const ComplexMatrix& op, std::size_t site, std::size_t n_sites,
                         std::size_t dim_cap) {
  if (site >= n_sites) {
    throw DomainError("embed_site: site " + std::to_string(site) + " out of range");
  }
  ComplexMatrix out = identity(1);
  const ComplexMatrix id2 = identity(2);
  for (std::size_t k = 0; k < n_sites; ++k) {
    out = kron(out, k == site ? op : id2, dim_cap);
  }
  return out;
}

}  // namespace lqsl
