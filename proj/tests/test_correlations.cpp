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

#include "oracles.hpp"
#include "randcorr/correlations.hpp"
#include "randcorr/named_states.hpp"
#include "randcorr/random.hpp"

namespace randcorr {
namespace {

std::vector<OperatorBasis> paulis(int n) { return std::vector<OperatorBasis>(static_cast<std::size_t>(n), pauli_basis()); }

std::vector<OperatorBasis> gell_manns(const SystemShape& shape) {
  std::vector<OperatorBasis> out;
  for (int d : shape.dims()) out.push_back(gell_mann_basis(d));
  return out;
}

double pauli_length(const CMatrix& rho, int n) { return oracle::length(rho, paulis(n)); }

TEST(CorrelationTensor, SingletPauli) {
  const auto bases = paulis(2);
  const auto t = correlation_tensor(DensityMatrix::from_pure(singlet()), bases);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const std::vector<int> mu{a, b};
      double expected = 0.0;
      if (a == 0 && b == 0) expected = 1.0;
      if (a == b && a > 0) expected = -1.0;
      EXPECT_NEAR(std::abs(t.at(mu) - expected), 0.0, 1e-14) << a << b;
    }
}

TEST(CorrelationTensor, ProductZeroZero) {
  const auto bases = paulis(2);
  const auto t = correlation_tensor(product_state({0, 0}), bases);
  EXPECT_NEAR(t.at(std::vector<int>{3, 3}).real(), 1.0, 1e-14);
  EXPECT_NEAR(t.at(std::vector<int>{3, 0}).real(), 1.0, 1e-14);
  EXPECT_NEAR(t.at(std::vector<int>{0, 3}).real(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(t.at(std::vector<int>{1, 1})), 0.0, 1e-14);
}

TEST(CorrelationTensor, GhzMatchesStringOracle) {
  const auto bases = paulis(3);
  const auto rho = DensityMatrix::from_pure(ghz_state(3));
  const auto dense = correlation_tensor(rho, bases);
  const auto pure = correlation_tensor(ghz_state(3), bases);
  oracle::for_each_index(bases, 0, [&](const std::vector<int>& mu) {
    const Complex expected = oracle::tensor_entry(rho.matrix(), bases, mu);
    EXPECT_NEAR(std::abs(dense.at(mu) - expected), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(pure.at(mu) - expected), 0.0, 1e-14);
  });
  EXPECT_NEAR(dense.at(std::vector<int>{1, 1, 1}).real(), 1.0, 1e-14);
  EXPECT_NEAR(dense.at(std::vector<int>{1, 2, 2}).real(), -1.0, 1e-14);
  EXPECT_NEAR(dense.at(std::vector<int>{2, 1, 2}).real(), -1.0, 1e-14);
  EXPECT_NEAR(dense.at(std::vector<int>{2, 2, 1}).real(), -1.0, 1e-14);
}

TEST(CorrelationTensor, RandomMixedQutritWeylMatchesOracle) {
  Rng rng = make_stream(21, 0);
  const SystemShape shape({3, 2});
  CMatrix g = CMatrix::Zero(6, 6);
  for (int k = 0; k < 3; ++k) {
    const CVector v = random_pure_state(shape, rng).amplitudes();
    g += (k + 1.0) * v * v.adjoint();
  }
  const DensityMatrix rho(shape, g / g.trace().real());
  const std::vector<OperatorBasis> bases{weyl_heisenberg_basis(3), random_mixed_basis(2, 9)};
  const auto t = correlation_tensor(rho, bases);
  oracle::for_each_index(bases, 0, [&](const std::vector<int>& mu) {
    EXPECT_NEAR(std::abs(t.at(mu) - oracle::tensor_entry(rho.matrix(), bases, mu)), 0.0, 1e-13);
  });
  const auto full = correlation_tensor(rho, bases, true);
  EXPECT_EQ(full.coefficients.size(), 8u * 3u);
  EXPECT_NEAR(full.full_weight_length(), oracle::length(rho.matrix(), bases), 1e-13);
  EXPECT_THROW(full.at(std::vector<int>{0, 1}), Error);
}

TEST(CorrelationTensor, Invariants) {
  Rng rng = make_stream(22, 0);
  const SystemShape shape({2, 3, 2});
  const PureState psi = random_pure_state(shape, rng);
  const auto bases = gell_manns(shape);
  for (const auto& t : {correlation_tensor(DensityMatrix::from_pure(psi), bases), correlation_tensor(psi, bases)}) {
    EXPECT_NEAR(std::abs(t.at(std::vector<int>{0, 0, 0}) - 1.0), 0.0, 1e-10);
    double max_imag = 0.0;
    for (const Complex& c : t.coefficients) max_imag = std::max(max_imag, std::abs(c.imag()));
    EXPECT_LT(max_imag, 1e-10);
  }
  const std::vector<OperatorBasis> wrong{pauli_basis(), pauli_basis(), pauli_basis()};
  EXPECT_THROW(correlation_tensor(psi, wrong), Error);
  EXPECT_THROW(correlation_tensor(DensityMatrix::from_pure(psi), wrong), Error);
}

TEST(CorrelationTensor, ThreadCountDoesNotChangeResult) {
  Rng rng = make_stream(23, 0);
  const PureState psi = random_pure_state(SystemShape::uniform(7, 2), rng);
  const auto bases = paulis(7);
  const double one = length_of_correlations(psi, bases, 1);
  const double four = length_of_correlations(psi, bases, 4);
  EXPECT_NEAR(one, four, 1e-12);
}

TEST(CorrelationFunction, Examples) {
  const Eigen::Vector3d x(1, 0, 0), z(0, 0, 1);
  const std::vector<Eigen::Vector3d> zz{z, z};
  EXPECT_NEAR(correlation_function(singlet(), zz), -1.0, 1e-14);
  EXPECT_NEAR(correlation_function(product_state({0, 0}), zz), 1.0, 1e-14);
  const std::vector<Eigen::Vector3d> xxx{x, x, x};
  EXPECT_NEAR(correlation_function(DensityMatrix::from_pure(ghz_state(3)), xxx), 1.0, 1e-14);
  const std::vector<Eigen::Vector3d> bad{z, Eigen::Vector3d(0, 0, 1.01)};
  EXPECT_THROW(correlation_function(singlet(), bad), Error);
  EXPECT_THROW(correlation_function(singlet(), std::vector<Eigen::Vector3d>{z}), Error);
}

TEST(CorrelationFunction, MatchesTensorContraction) {
  Rng rng = make_stream(24, 0);
  const auto bases = paulis(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = random_pure_state(SystemShape::uniform(3, 2), rng);
    const std::vector<Eigen::Vector3d> u{sample_direction(rng), sample_direction(rng), sample_direction(rng)};
    const auto t = correlation_tensor(psi, bases, true);
    double expected = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          expected += t.at(std::vector<int>{a + 1, b + 1, c + 1}).real() * u[0](a) * u[1](b) * u[2](c);
    EXPECT_NEAR(correlation_function(psi, u), expected, 1e-13);
    EXPECT_NEAR(correlation_function(DensityMatrix::from_pure(psi), u), expected, 1e-13);
  }
}

TEST(Length, KnownStateValues) {
  EXPECT_NEAR(length_of_correlations(ghz_state(3)), 4.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(ghz_state(4)), 9.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(double_singlet()), 9.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(five_qubit_counterexample()), 8.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(ghz_state(4)), pauli_length(DensityMatrix::from_pure(ghz_state(4)).matrix(), 4),
              1e-12);
}

// Measuring party 0 of the five-qubit state in Z leaves GHZ_4 or D^2_4.
TEST(Length, FiveQubitBranches) {
  EXPECT_NEAR(length_of_correlations(ghz_state(4)), 9.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(dicke_state(4, 2)), 9.0, 1e-12);
  const CVector amps = five_qubit_counterexample().amplitudes();
  const PureState branch0 = PureState::normalized(SystemShape::uniform(4, 2), amps.head(16));
  const PureState branch1 = PureState::normalized(SystemShape::uniform(4, 2), amps.tail(16));
  EXPECT_NEAR(length_of_correlations(branch0), 9.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(branch1), 9.0, 1e-12);
}

TEST(Length, LoccPair) {
  EXPECT_NEAR(length_of_correlations(locc_psi()), 8.0, 1e-12);
  EXPECT_NEAR(length_of_correlations(locc_phi()), 9.0, 1e-12);
}

TEST(Length, DensityAndPureRoutesAgreeWithOracle) {
  Rng rng = make_stream(25, 0);
  for (const SystemShape& shape : {SystemShape({2, 2, 2}), SystemShape({3, 3}), SystemShape({2, 3})}) {
    for (int trial = 0; trial < 3; ++trial) {
      const PureState psi = random_pure_state(shape, rng);
      const auto rho = DensityMatrix::from_pure(psi);
      const auto bases = gell_manns(shape);
      const double expected = oracle::length(rho.matrix(), bases);
      EXPECT_NEAR(length_of_correlations(psi), expected, 1e-12);
      EXPECT_NEAR(length_of_correlations(rho), expected, 1e-12);
      EXPECT_NEAR(length_from_purities(rho), expected, 1e-10);
    }
  }
}

TEST(Length, BasisInvariance) {
  Rng rng = make_stream(26, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = random_pure_state(SystemShape::uniform(2, 3), rng);
    const double reference = length_of_correlations(psi, gell_mann_basis(3));
    EXPECT_NEAR(length_of_correlations(psi, weyl_heisenberg_basis(3)), reference, 1e-9);
    for (std::uint64_t seed = 100; seed < 103; ++seed)
      EXPECT_NEAR(length_of_correlations(psi, random_mixed_basis(3, seed)), reference, 1e-9);
    EXPECT_NEAR(length_of_correlations(DensityMatrix::from_pure(psi), weyl_heisenberg_basis(3)), reference, 1e-9);
  }
}

TEST(SectorLengths, GhzThree) {
  const auto s = sector_lengths(DensityMatrix::from_pure(ghz_state(3)));
  const auto oracle_values = oracle::sectors(DensityMatrix::from_pure(ghz_state(3)).matrix(), paulis(3));
  const double expected[] = {1.0, 0.0, 3.0, 4.0};
  ASSERT_EQ(s.values.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(s.values[k], expected[k], 1e-12);
    EXPECT_NEAR(oracle_values[k], expected[k], 1e-12);
  }
  EXPECT_NEAR(s.total(), 8.0, 1e-12);
  EXPECT_NEAR(s.alternating_sum(), 0.0, 1e-12);
}

TEST(SectorLengths, ProductState) {
  const auto s = sector_lengths(DensityMatrix::from_pure(product_state({0, 0, 0})));
  const double expected[] = {1.0, 3.0, 3.0, 1.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s.values[k], expected[k], 1e-12);
}

TEST(SectorLengths, MixedStateMatchesOracle) {
  const auto rho = w_family(0.4);
  const auto s = sector_lengths(rho);
  const auto expected = oracle::sectors(rho.matrix(), paulis(3));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s.values[k], expected[k], 1e-12);
  EXPECT_NEAR(s.values.back(), length_of_correlations(rho), 1e-12);
}

class PureIdentities : public ::testing::TestWithParam<int> {};

TEST_P(PureIdentities, PurityAndParity) {
  const int n = GetParam();
  Rng rng = make_stream(27, static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = DensityMatrix::from_pure(random_pure_state(SystemShape::uniform(n, 2), rng));
    const auto s = sector_lengths(rho);
    EXPECT_NEAR(s.values[0], 1.0, 1e-12);
    for (double c : s.values) EXPECT_GE(c, -1e-12);
    EXPECT_NEAR(s.total(), std::pow(2.0, n), 1e-8);
    if (n % 2 == 1) EXPECT_NEAR(s.alternating_sum(), 0.0, 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Qubits, PureIdentities, ::testing::Values(2, 3, 4, 5));

TEST(PureIdentities, ThreeQubitPairSum) {
  Rng rng = make_stream(28, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = DensityMatrix::from_pure(random_pure_state(SystemShape::uniform(3, 2), rng));
    const double sum = length_of_correlations(partial_trace(rho, {0, 1})) +
                       length_of_correlations(partial_trace(rho, {0, 2})) +
                       length_of_correlations(partial_trace(rho, {1, 2}));
    EXPECT_NEAR(sum, 3.0, 1e-8);
  }
}

// C >= 1 for pure two- and three-qubit states, with equality exactly when
// every single-party Bloch vector is a unit vector.
TEST(PureIdentities, LowerBoundOne) {
  Rng rng = make_stream(29, 0);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const SystemShape shape = SystemShape::uniform(n, 2);
      const PureState psi = trial % 4 == 0 ? random_product_state(shape, rng) : random_pure_state(shape, rng);
      const auto rho = DensityMatrix::from_pure(psi);
      const double c = length_of_correlations(psi);
      EXPECT_GE(c, 1.0 - 1e-8);
      bool all_unit = true;
      for (int p = 0; p < n; ++p) all_unit = all_unit && std::abs(qubit_bloch_vector(rho, p).norm() - 1.0) < 1e-6;
      EXPECT_EQ(std::abs(c - 1.0) < 1e-8, all_unit) << "n=" << n << " C=" << c;
    }
  }
}

TEST(PureIdentities, OddMaximumNeverExceeded) {
  Rng rng = make_stream(30, 0);
  for (int n : {3, 5}) {
    const double bound = std::pow(2.0, n - 1);
    double best = 0.0;
    for (int trial = 0; trial < 200; ++trial)
      best = std::max(best, length_of_correlations(random_pure_state(SystemShape::uniform(n, 2), rng)));
    EXPECT_LE(best, bound + 1e-8);
  }
}

TEST(Entanglement, Verdicts) {
  const auto product = is_entangled_pure(product_state({0, 0, 0}));
  EXPECT_FALSE(product.entangled);
  EXPECT_NEAR(product.margin, 0.0, 1e-12);
  const auto qutrits = is_entangled_pure(ghz_state(2, 3));
  EXPECT_TRUE(qutrits.entangled);
  const auto bases = gell_manns(SystemShape::uniform(2, 3));
  EXPECT_NEAR(qutrits.length, oracle::length(DensityMatrix::from_pure(ghz_state(2, 3)).matrix(), bases), 1e-12);
  EXPECT_NEAR(qutrits.threshold, 4.0, 1e-15);
  const auto s = is_entangled_pure(singlet());
  EXPECT_NEAR(s.margin, 2.0, 1e-12);
  EXPECT_THROW(is_entangled_pure(w_family(0.5)), Error);
  EXPECT_FALSE(is_entangled_pure(DensityMatrix::from_pure(product_state({1, 0}))).entangled);
}

TEST(SOperator, Spectra) {
  for (int d : {2, 3, 4, 5}) {
    const auto report = s_operator_spectrum_check(d);
    EXPECT_TRUE(report.passed) << d;
    EXPECT_EQ(report.count_plus, d * (d + 1) / 2);
    EXPECT_EQ(report.count_minus, d * (d - 1) / 2);
    EXPECT_NEAR(report.trace, 0.0, 1e-10);
  }
  const auto two = s_operator_spectrum_check(2);
  EXPECT_EQ(two.count_plus, 3);
  EXPECT_EQ(two.count_minus, 1);
}

TEST(SOperator, BasisIndependent) {
  const CMatrix gm = s_operator_local(gell_mann_basis(3));
  EXPECT_NEAR((s_operator_local(random_mixed_basis(3, 5)) - gm).norm(), 0.0, 1e-12);
  // Eigenvectors: |jj> with eigenvalue d-1 and |01>-|10> with -(d+1).
  CVector jj = CVector::Zero(9);
  jj(4) = 1.0;
  EXPECT_NEAR((gm * jj - 2.0 * jj).norm(), 0.0, 1e-12);
  CVector anti = CVector::Zero(9);
  anti(1) = 1.0;
  anti(3) = -1.0;
  EXPECT_NEAR((gm * anti + 4.0 * anti).norm(), 0.0, 1e-12);
}

TEST(TwoCopy, Examples) {
  EXPECT_NEAR(two_copy_length(ghz_state(5)), 16.0, 1e-9);
  EXPECT_NEAR(two_copy_length(product_state({0, 0, 0, 0})), 1.0, 1e-9);
  EXPECT_NEAR(two_copy_length(locc_psi()), 8.0, 1e-9);
  EXPECT_THROW(two_copy_length(ghz_state(9)), Error);
}

TEST(TwoCopy, MatchesPrimaryPath) {
  Rng rng = make_stream(31, 0);
  for (const SystemShape& shape : {SystemShape::uniform(4, 2), SystemShape({3, 2, 3})}) {
    for (int trial = 0; trial < 5; ++trial) {
      const PureState psi = random_pure_state(shape, rng);
      EXPECT_NEAR(two_copy_length(psi), length_of_correlations(psi), 1e-9);
    }
  }
}

TEST(Werner, ProductInput) {
  const auto out = werner_twirl(DensityMatrix::from_pure(product_state({0, 1})));
  const CMatrix expected = (CMatrix::Identity(4, 4) - 0.5 * swap_operator(2)) / 3.0;
  EXPECT_NEAR((out.matrix() - expected).norm(), 0.0, 1e-14);
}

TEST(Werner, SingletFixedPoint) {
  const auto rho = DensityMatrix::from_pure(singlet());
  EXPECT_NEAR((werner_twirl(rho).matrix() - rho.matrix()).norm(), 0.0, 1e-14);
  const auto twice = werner_twirl(werner_twirl(rho));
  EXPECT_NEAR((twice.matrix() - rho.matrix()).norm(), 0.0, 1e-14);
}

TEST(Werner, PreservesSwapExpectationAndIsIdempotent) {
  Rng rng = make_stream(32, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = DensityMatrix::from_pure(random_pure_state(SystemShape::uniform(2, 3), rng));
    const auto out = werner_twirl(rho);
    const CMatrix p = swap_operator(3);
    EXPECT_NEAR(std::abs((out.matrix() * p).trace() - (rho.matrix() * p).trace()), 0.0, 1e-13);
    EXPECT_NEAR((werner_twirl(out).matrix() - out.matrix()).norm(), 0.0, 1e-13);
    EXPECT_NEAR((out.matrix() * p - p * out.matrix()).norm(), 0.0, 1e-13);
  }
  EXPECT_THROW(werner_twirl(DensityMatrix::from_pure(ghz_state(3))), Error);
  EXPECT_THROW(werner_twirl(DensityMatrix::from_pure(PureState::normalized(SystemShape({2, 3}), CVector::Ones(6)))),
               Error);
}

}  // namespace
}  // namespace randcorr
