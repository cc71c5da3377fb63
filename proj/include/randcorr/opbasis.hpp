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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randcorr/common.hpp"

namespace randcorr {

enum class BasisKind { kPauli, kGellMann, kWeylHeisenberg, kMixed };

/// Identity (implicit, index 0) plus d^2-1 operators with Tr(σ_j) = 0 and
/// Tr(σ_j σ_k^†) = d δ_jk. `elements[j-1]` holds σ_j.
struct OperatorBasis {
  int dim = 0;
  std::vector<CMatrix> elements;
  BasisKind kind = BasisKind::kGellMann;
  /// Set for kMixed: the seed and the unitary α with σ'_j = Σ_k α_jk σ_k.
  std::optional<std::uint64_t> seed;
  CMatrix mixing;

  /// σ_mu with σ_0 = identity.
  CMatrix element(int mu) const;
  std::string name() const;
};

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

OperatorBasis pauli_basis();
/// Ordering: G+_{mn} for m<n lexicographic, then G-_{mn}, then λ_0..λ_{d-2}.
OperatorBasis gell_mann_basis(int d);
/// W_{mn} = X^m Z^n for (m,n) != (0,0), lexicographic in (m,n).
OperatorBasis weyl_heisenberg_basis(int d);
/// Gell-Mann elements mixed by a seeded Haar-random (d^2-1)x(d^2-1) unitary.
OperatorBasis random_mixed_basis(int d, std::uint64_t seed);
/// Gell-Mann elements mixed by `alpha`, which must be unitary.
OperatorBasis mixed_basis(int d, const CMatrix& alpha);

/// Largest deviation from the trace conditions; throws when it exceeds `tol`.
double validate_basis(const OperatorBasis& basis, double tol = kBasisTol);

/// "pauli" | "gell-mann" | "weyl" | "mixed:<seed>".
OperatorBasis basis_from_name(std::string_view name, int d);

}  // namespace randcorr
