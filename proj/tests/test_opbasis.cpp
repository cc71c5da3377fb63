// Copyright 2026 The randcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "randcorr/opbasis.hpp"
#include "randcorr/random.hpp"

namespace randcorr {
namespace {

const Complex kI(0.0, 1.0);

TEST(Pauli, Algebra) {
  EXPECT_NEAR(std::abs((pauli_x() * pauli_y().adjoint()).trace()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs((pauli_z() * pauli_z().adjoint()).trace() - 2.0), 0.0, 1e-15);
  EXPECT_NEAR((pauli_x() * pauli_y() - kI * pauli_z()).norm(), 0.0, 1e-15);
  const OperatorBasis b = pauli_basis();
  EXPECT_EQ(b.kind, BasisKind::kPauli);
  EXPECT_EQ(b.elements.size(), 3u);
  EXPECT_EQ(b.element(0), CMatrix::Identity(2, 2));
  EXPECT_EQ(b.element(3), pauli_z());
}

TEST(GellMann, QubitCaseIsPauli) {
  const OperatorBasis g = gell_mann_basis(2);
  ASSERT_EQ(g.elements.size(), 3u);
  // Entrywise comparison against hand-written Pauli matrices.
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  EXPECT_NEAR((g.elements[0] - x).norm(), 0.0, 1e-15);
  EXPECT_NEAR((g.elements[1] - y).norm(), 0.0, 1e-15);
  EXPECT_NEAR((g.elements[2] - z).norm(), 0.0, 1e-15);
}

TEST(GellMann, QutritNormalization) {
  const OperatorBasis g = gell_mann_basis(3);
  ASSERT_EQ(g.elements.size(), 8u);
  for (const CMatrix& s : g.elements) {
    EXPECT_NEAR((s - s.adjoint()).norm(), 0.0, 1e-15);
    EXPECT_NEAR(std::abs((s * s.adjoint()).trace() - 3.0), 0.0, 1e-13);
  }
}

TEST(GellMann, DiagonalElementD4) {
  const OperatorBasis g = gell_mann_basis(4);
  // λ_0, λ_1, λ_2 are the last three elements.
  const CMatrix& lambda2 = g.elements.back();
  const double scale = std::sqrt(4.0 / 12.0);
  const double expected[] = {scale, scale, scale, -3.0 * scale};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(lambda2(k, k) - expected[k]), 0.0, 1e-14);
  EXPECT_NEAR((lambda2 - CMatrix(lambda2.diagonal().asDiagonal())).norm(), 0.0, 1e-15);
  EXPECT_THROW(gell_mann_basis(1), Error);
}

TEST(Weyl, QubitCase) {
  const OperatorBasis w = weyl_heisenberg_basis(2);
  ASSERT_EQ(w.elements.size(), 3u);
  // Lexicographic (m,n): (0,1) = Z, (1,0) = X, (1,1) = XZ.
  EXPECT_NEAR((w.elements[0] - pauli_z()).norm(), 0.0, 1e-15);
  EXPECT_NEAR((w.elements[1] - pauli_x()).norm(), 0.0, 1e-15);
  const CMatrix xz = pauli_x() * pauli_z();
  EXPECT_NEAR((w.elements[2] - xz).norm(), 0.0, 1e-15);
  EXPECT_GT((xz - xz.adjoint()).norm(), 1.0);
}

TEST(Weyl, QutritShiftAndClock) {
  const OperatorBasis w = weyl_heisenberg_basis(3);
  const CMatrix& z = w.elements[0];
  for (int k = 0; k < 3; ++k)
    EXPECT_NEAR(std::abs(z(k, k) - std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0)), 0.0, 1e-14);
  for (const CMatrix& u : w.elements) {
    EXPECT_NEAR((u * u.adjoint() - CMatrix::Identity(3, 3)).norm(), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u.trace()), 0.0, 1e-14);
  }
  EXPECT_THROW(weyl_heisenberg_basis(1), Error);
}

TEST(Mixed, IdentityMixingIsGellMann) {
  const OperatorBasis m = mixed_basis(3, CMatrix::Identity(8, 8));
  const OperatorBasis g = gell_mann_basis(3);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_NEAR((m.elements[j] - g.elements[j]).norm(), 0.0, 1e-15);
  EXPECT_THROW(mixed_basis(3, 2.0 * CMatrix::Identity(8, 8)), Error);
  EXPECT_THROW(mixed_basis(3, CMatrix::Identity(3, 3)), Error);
}

TEST(Mixed, SeededIsReproducible) {
  const OperatorBasis a = random_mixed_basis(3, 42);
  const OperatorBasis b = random_mixed_basis(3, 42);
  const OperatorBasis c = random_mixed_basis(3, 43);
  ASSERT_TRUE(a.seed.has_value());
  EXPECT_EQ(*a.seed, 42u);
  EXPECT_EQ(a.mixing, b.mixing);
  EXPECT_GT((a.mixing - c.mixing).norm(), 1e-3);
  EXPECT_EQ(a.name(), "mixed:42");
}

class AllBases : public ::testing::TestWithParam<int> {};

TEST_P(AllBases, SatisfyTraceConditions) {
  const int d = GetParam();
  std::vector<OperatorBasis> bases{gell_mann_basis(d), weyl_heisenberg_basis(d)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) bases.push_back(random_mixed_basis(d, seed));
  if (d == 2) bases.push_back(pauli_basis());
  for (const OperatorBasis& b : bases) {
    EXPECT_LE(validate_basis(b), 1e-10) << b.name();
    ASSERT_EQ(b.elements.size(), static_cast<std::size_t>(d * d - 1));
    Complex sum = 0.0;
    for (const CMatrix& s : b.elements) sum += (s * s.adjoint()).trace();
    EXPECT_NEAR(std::abs(sum - static_cast<double>(d * (d * d - 1))), 0.0, 1e-10) << b.name();
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, AllBases, ::testing::Values(2, 3, 4, 5));

TEST(Validator, RejectsBrokenBasis) {
  OperatorBasis b = gell_mann_basis(2);
  b.elements[0] = CMatrix::Identity(2, 2);
  EXPECT_THROW(validate_basis(b), Error);
  OperatorBasis short_basis = gell_mann_basis(2);
  short_basis.elements.pop_back();
  EXPECT_THROW(validate_basis(short_basis), Error);
}

TEST(BasisNames, Parse) {
  EXPECT_EQ(basis_from_name("pauli", 2).kind, BasisKind::kPauli);
  EXPECT_EQ(basis_from_name("gell-mann", 3).kind, BasisKind::kGellMann);
  EXPECT_EQ(basis_from_name("weyl", 3).kind, BasisKind::kWeylHeisenberg);
  EXPECT_EQ(*basis_from_name("mixed:7", 3).seed, 7u);
  EXPECT_THROW(basis_from_name("pauli", 3), Error);
  EXPECT_THROW(basis_from_name("mixed:", 3), Error);
  EXPECT_THROW(basis_from_name("fourier", 3), Error);
}

TEST(Haar, UnitaryAndFirstMoment) {
  Rng rng = make_stream(3, 0);
  CMatrix mean = CMatrix::Zero(3, 3);
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const CMatrix u = sample_haar_unitary(3, rng);
    ASSERT_NEAR((u * u.adjoint() - CMatrix::Identity(3, 3)).norm(), 0.0, 1e-10);
    mean += u;
  }
  // E[U] = 0 for Haar; each entry has variance 1/3, so |mean entry| ~ 0.01.
  EXPECT_LT((mean / n).cwiseAbs().maxCoeff(), 0.06);
}

TEST(Haar, DirectionsAreUnitAndCentered) {
  Rng rng = make_stream(4, 0);
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  double zz = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d u = sample_direction(rng);
    ASSERT_NEAR(u.norm(), 1.0, 1e-12);
    mean += u;
    zz += u.z() * u.z();
  }
  EXPECT_LT((mean / n).norm(), 0.03);
  EXPECT_NEAR(zz / n, 1.0 / 3.0, 0.01);
}

}  // namespace
}  // namespace randcorr
