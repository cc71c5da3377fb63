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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "randcorr/opbasis.hpp"
#include "randcorr/statekit.hpp"

namespace randcorr {

/// Coefficients T_{mu_1..mu_N} = Tr(rho σ^†_{mu_1} ⊗ .. ⊗ σ^†_{mu_N}), stored
/// row-major with party 0 most significant. In the full-correlation block
/// every mu_n runs over 1..d_n^2-1 only.
struct CorrelationTensor {
  SystemShape shape;
  std::vector<std::string> basis_names;
  bool full_block = false;
  /// Number of stored indices per party (d^2, or d^2-1 for the full block).
  std::vector<int> extents;
  std::vector<Complex> coefficients;

  /// Entry for basis indices mu (0 = identity).
  Complex at(std::span<const int> mu) const;
  /// Sum of |T|^2 over entries with no identity factor.
  double full_weight_length() const;
};

CorrelationTensor correlation_tensor(const DensityMatrix& rho, std::span<const OperatorBasis> bases,
                                     bool full_block = false);
/// Pure-state route: each entry is <psi| string |psi>, strings applied factor
/// by factor with shared prefixes.
CorrelationTensor correlation_tensor(const PureState& psi, std::span<const OperatorBasis> bases,
                                     bool full_block = false, unsigned threads = 0);

/// E(u_1..u_N) = Tr(rho ⊗_n u_n·σ) for qubits; directions must be unit vectors.
double correlation_function(const DensityMatrix& rho, std::span<const Eigen::Vector3d> directions);
double correlation_function(const PureState& psi, std::span<const Eigen::Vector3d> directions);

/// Length of correlations: sum of |T|^2 over the full-correlation block.
double length_of_correlations(const DensityMatrix& rho, std::span<const OperatorBasis> bases);
double length_of_correlations(const DensityMatrix& rho, const OperatorBasis& basis);
/// Gell-Mann basis on every party (Pauli for qubits).
double length_of_correlations(const DensityMatrix& rho);
double length_of_correlations(const PureState& psi, std::span<const OperatorBasis> bases,
                              unsigned threads = 0);
double length_of_correlations(const PureState& psi, const OperatorBasis& basis, unsigned threads = 0);
double length_of_correlations(const PureState& psi, unsigned threads = 0);

/// Cross-check route through subset purities: Möbius inversion of
/// prod_{n in A} d_n · Tr(rho_A^2) over all 2^N subsets A.
double length_from_purities(const DensityMatrix& rho);

/// C_k = sum of |T|^2 over index tuples with exactly k non-identity slots.
struct SectorLengths {
  std::vector<double> values;

  double total() const;
  /// sum_k (-1)^k C_k.
  double alternating_sum() const;
};

SectorLengths sector_lengths(const DensityMatrix& rho);

struct EntanglementVerdict {
  bool entangled = false;
  /// C - (d-1)^N.
  double margin = 0.0;
  double length = 0.0;
  double threshold = 0.0;
};

inline constexpr double kEntanglementTol = 1e-9;

/// Pure-state test C > (d-1)^N; for mixed local dimensions the threshold is
/// prod_n (d_n - 1).
EntanglementVerdict is_entangled_pure(const PureState& psi);
/// Accepts only density matrices of unit purity.
EntanglementVerdict is_entangled_pure(const DensityMatrix& rho);

/// Two-copy operator S^{nn'} = sum_j σ_j^† ⊗ σ_j for one party pair; equal to
/// sum_j σ_j ⊗ σ_j for Hermitian bases and basis-independent in general.
CMatrix s_operator_local(const OperatorBasis& basis);

struct SSpectrumReport {
  int dim = 0;
  std::vector<double> eigenvalues;
  int count_plus = 0;   // eigenvalue d-1
  int count_minus = 0;  // eigenvalue -(d+1)
  int expected_plus = 0;
  int expected_minus = 0;
  double trace = 0.0;
  bool passed = false;
};

/// Diagonalizes S^{nn'} built from the Gell-Mann basis and counts the
/// multiplicities of d-1 and -(d+1).
SSpectrumReport s_operator_spectrum_check(int d);

/// C = <psi psi| S |psi psi> evaluated by applying S^{nn'} pairwise to the
/// doubled state. Limited to total two-copy dimension 2^16.
double two_copy_length(const PureState& psi);

/// Swap operator P = sum_ij |ij><ji| on C^d ⊗ C^d.
CMatrix swap_operator(int d);
/// Haar twirl ∫dU (U⊗U) rho (U⊗U)^† in closed form a·I + b·P.
DensityMatrix werner_twirl(const DensityMatrix& rho);

}  // namespace randcorr
