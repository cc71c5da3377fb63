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

#include <cstdint>
#include <vector>

#include "randcorr/statekit.hpp"

namespace randcorr {

/// Orthonormal eigenvectors spanning the range of a density matrix.
struct SupportBasis {
  SystemShape shape;
  int rank = 0;
  /// total_dim x rank, one support vector per column, eigenvalues descending.
  CMatrix vectors;
  RVector eigenvalues;
  double cutoff = 0.0;
};

inline constexpr double kRankTol = 1e-10;

SupportBasis support_basis(const DensityMatrix& rho, double tol = kRankTol);

/// S̃_{(ij),(mn)} = <ĩ j̃| S |m̃ ñ> = sum over full-weight Pauli strings P of
/// <ĩ|P|m̃><j̃|P|ñ>. Qubit systems with at most 8 parties.
CMatrix projected_s_tilde(const SupportBasis& support);

/// Expansion of S̃ = (1/m^2)(s0 I⊗I + s·σ⊗I + I⊗s·σ + sum_ij W_ij σ_i⊗σ_j)
/// in the Gell-Mann basis of the m-dimensional support (Tr σσ^† = m).
struct ConvexRoofContext {
  int rank = 0;
  double s0 = 0.0;
  RVector s_vec;
  /// Symmetric (m^2-1) x (m^2-1) correlation block.
  RMatrix w;
  /// Eigenvalues of w, descending, with matching eigenvector columns.
  RVector w_eigenvalues;
  RMatrix w_eigenvectors;
  double w_min = 0.0;
  /// Bloch vector of rho inside the support; empty until filled by the caller.
  RVector rho_bloch;
};

ConvexRoofContext bloch_decompose(const CMatrix& s_tilde, int m);

/// Bloch vector ρ_i = Tr(ρ̃ σ_i) of rho restricted to its support.
RVector support_bloch_vector(const DensityMatrix& rho, const SupportBasis& support);

/// Full pipeline: support, S̃, decomposition and ρ⃗.
ConvexRoofContext convex_roof_context(const DensityMatrix& rho, double tol = kRankTol);

struct Rank2Result {
  /// C(rho) + (1 - Tr rho^2) w_min / 2.
  double value = 0.0;
  /// (1/4)[s0 + 2 s·ρ + w_3 + (w_1-w_3) ρ_x^2 + (w_2-w_3) ρ_y^2] in W's eigenframe.
  double closed_form = 0.0;
  double length = 0.0;
  double purity = 0.0;
  double w_min = 0.0;
  bool entangled = false;
  ConvexRoofContext context;
};

/// Exact convex roof of the length of correlations for rank-2 states.
Rank2Result convex_roof_rank2(const DensityMatrix& rho, double tol = kRankTol);

struct RankWitness {
  int rank = 0;
  double length = 0.0;
  double purity = 0.0;
  double w_min = 0.0;
  /// C + (w_min / m^2)(1 - Tr rho^2).
  double value = 0.0;
  /// C + (w_min / m)(1 - Tr rho^2).
  double variant_over_m = 0.0;
  bool entangled = false;
  bool variant_entangled = false;
};

/// Lower-bound witness for the convex roof of a rank-m state; rank 1 returns C.
RankWitness witness_rank_m(const DensityMatrix& rho, double tol = kRankTol);

struct PureDecomposition {
  std::vector<double> weights;
  std::vector<PureState> states;
};

/// max |sum_k mu_k |psi_k><psi_k| - rho|.
double decomposition_residual(const DensityMatrix& rho, const PureDecomposition& decomposition);

struct OracleOptions {
  int restarts = 32;
  /// Ensemble size L; 0 selects 2m.
  int ensemble_size = 0;
  std::uint64_t seed = 0;
  int max_sweeps = 400;
  double min_step = 1e-7;
};

struct OracleResult {
  /// Best average length of correlations found: an upper bound on E(rho).
  double value = 0.0;
  PureDecomposition best;
};

/// Random-restart coordinate descent over decompositions
/// |ψ̃_k> = sum_i U_ki sqrt(λ_i)|e_i> with U an L x m isometry.
OracleResult convex_roof_oracle(const DensityMatrix& rho, const OracleOptions& options = {});

}  // namespace randcorr
