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

#include <gtest/gtest.h>

#include "lqsl/error.hpp"
#include "lqsl/linalg.hpp"
#include "lqsl/random.hpp"
#include "oracles.hpp"

namespace lqsl {
namespace {

constexpr cplx kI{0.0, 1.0};

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Frobenius, PauliAndIdentity) {
  EXPECT_NEAR(frobenius_norm(pauli::x()), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(frobenius_norm(identity(3)), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(frobenius_norm(ComplexMatrix::Zero(4, 4)), 0.0);
  EXPECT_NEAR(frobenius_norm(mat2({3, 0}, {0, 4}, 0, 0)), 5.0, 1e-15);
}

TEST(TraceProduct, MatchesExplicitProduct) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix a = random_matrix(rng, 4, 1.0);
    const ComplexMatrix b = random_matrix(rng, 4, 1.0);
    EXPECT_LT(std::abs(trace_product(a, b) - oracle::trace(oracle::mul(a, b))), 1e-13);
  }
  EXPECT_NEAR(trace_product(pauli::x(), pauli::x()).real(), 2.0, 1e-15);
  EXPECT_THROW(trace_product(identity(2), identity(3)), DimensionError);
}

TEST(Commutator, PauliAlgebra) {
  const ComplexMatrix c = commutator(pauli::x(), pauli::y());
  EXPECT_LT(oracle::max_abs_diff(c, 2.0 * kI * pauli::z()), 1e-15);
  EXPECT_LT(frobenius_norm(commutator(pauli::z(), pauli::z())), 1e-15);
}

TEST(Commutator, AntisymmetricOnRandomPairs) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const ComplexMatrix a = random_matrix(rng, d, 1.0);
    const ComplexMatrix b = random_matrix(rng, d, 1.0);
    EXPECT_LT(frobenius_norm(commutator(a, b) + commutator(b, a)), 1e-13);
  }
}

TEST(Kron, SmallExampleAndAssociativity) {
  const ComplexMatrix k = kron(pauli::z(), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(1, 1) = 1.0;
  expected(2, 2) = expected(3, 3) = -1.0;
  EXPECT_LT(oracle::max_abs_diff(k, expected), 1e-15);

  Rng rng(13);
  const ComplexMatrix a = random_matrix(rng, 2, 1.0);
  const ComplexMatrix b = random_matrix(rng, 3, 1.0);
  const ComplexMatrix c = random_matrix(rng, 2, 1.0);
  EXPECT_LT(oracle::max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-14);
}

TEST(Kron, MixedProductProperty) {
  Rng rng(14);
  const ComplexMatrix a = random_matrix(rng, 2, 1.0), b = random_matrix(rng, 3, 1.0);
  const ComplexMatrix c = random_matrix(rng, 2, 1.0), d = random_matrix(rng, 3, 1.0);
  EXPECT_LT(oracle::max_abs_diff(oracle::mul(kron(a, b), kron(c, d)),
                                 kron(oracle::mul(a, c), oracle::mul(b, d))),
            1e-13);
}

TEST(Kron, CapRaisesResourceError) {
  EXPECT_THROW(kron(identity(64), identity(128), 4096), ResourceError);
  EXPECT_NO_THROW(kron(identity(2), identity(2), 4));
}

TEST(MinEigenvalue, KnownSpectra) {
  EXPECT_NEAR(min_eigenvalue_hermitian(0.5 * identity(2)), 0.5, 1e-15);
  const double e2 = std::exp(-2.0);
  EXPECT_NEAR(min_eigenvalue_hermitian(mat2(e2, 0, 0, 1 - e2)), e2, 1e-15);
  EXPECT_NEAR(min_eigenvalue_hermitian(pauli::y()), -1.0, 1e-14);
  EXPECT_THROW(min_eigenvalue_hermitian(mat2(0, 1, 0, 0)), DomainError);
}

TEST(CauchySchwarz, HoldsForRandomMatrices) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const ComplexMatrix a = random_matrix(rng, d, rng.uniform(0.1, 3.0));
    const ComplexMatrix b = random_matrix(rng, d, rng.uniform(0.1, 3.0));
    const double lhs = std::abs(trace_product(oracle::dagger(a), b));
    EXPECT_LE(lhs, frobenius_norm(a) * frobenius_norm(b) * (1 + 1e-14));
  }
}

TEST(PureState, ValidatesNormalization) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState{v}, DomainError);
  const PureState s = PureState::normalized(v);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(PureState::normalized(ComplexVector::Zero(2)), DomainError);
}

TEST(DensityMatrix, ValidatesInvariants) {
  EXPECT_NO_THROW(DensityMatrix(0.5 * identity(2)));
  EXPECT_THROW(DensityMatrix(identity(2)), DomainError);
  EXPECT_THROW(DensityMatrix(mat2(0.5, 1.0, 0.0, 0.5)), DomainError);
  EXPECT_THROW(DensityMatrix(mat2(1.5, 0.0, 0.0, -0.5)), DomainError);
  const PureState plus = PureState::normalized(ComplexVector::Ones(2));
  EXPECT_NEAR(DensityMatrix::from_pure(plus).purity(), 1.0, 1e-15);
  EXPECT_NEAR(DensityMatrix(0.5 * identity(2)).purity(), 0.5, 1e-15);
}

TEST(EmbedSite, MatchesExplicitKron) {
  const ComplexMatrix e = embed_site(pauli::x(), 1, 3);
  const ComplexMatrix expected = kron(kron(identity(2), pauli::x()), identity(2));
  EXPECT_LT(oracle::max_abs_diff(e, expected), 1e-15);
  EXPECT_THROW(embed_site(pauli::x(), 3, 3), DomainError);
}

TEST(Pauli, Lowering) {
  const ComplexMatrix s = pauli::lowering();
  ComplexVector up(2);
  up << 1.0, 0.0;
  const ComplexVector down = s * up;
  EXPECT_NEAR(std::abs(down(1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(down(0)), 0.0, 1e-15);
}

}  // namespace
}  // namespace lqsl
