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
#include <vector>

#include "randcorr/common.hpp"

namespace randcorr {

/// Local dimensions of an N-party system. Party 0 is the most significant
/// tensor factor in amplitude indexing, everywhere in this library.
class SystemShape {
 public:
  explicit SystemShape(std::vector<int> local_dims);
  static SystemShape uniform(int parties, int dim);

  int party_count() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t total_dim() const { return total_; }
  /// Product of the dimensions of parties after `party`.
  std::size_t stride(int party) const { return strides_.at(static_cast<std::size_t>(party)); }
  /// Common local dimension, or 0 when the parties differ.
  int uniform_dim() const;

  /// Shape made of the listed parties, in the listed order.
  SystemShape subsystem(std::span<const int> parties) const;
  SystemShape concat(const SystemShape& other) const;

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

class PureState {
 public:
  /// Validates normalization to kStateTol.
  PureState(SystemShape shape, CVector amplitudes);
  /// Rescales `amplitudes` to unit norm; a zero vector is rejected.
  static PureState normalized(SystemShape shape, CVector amplitudes);

  const SystemShape& shape() const { return shape_; }
  const CVector& amplitudes() const { return amplitudes_; }
  int party_count() const { return shape_.party_count(); }

 private:
  SystemShape shape_;
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity to kStateTol.
  DensityMatrix(SystemShape shape, CMatrix matrix);
  static DensityMatrix from_pure(const PureState& psi);

  const SystemShape& shape() const { return shape_; }
  const CMatrix& matrix() const { return matrix_; }
  int party_count() const { return shape_.party_count(); }

 private:
  DensityMatrix(SystemShape shape, CMatrix matrix, bool /*trusted*/);

  SystemShape shape_;
  CMatrix matrix_;
};

/// Squared Schmidt coefficients, sorted descending.
struct SchmidtSpectrum {
  std::vector<double> probabilities;
};

// Applies `op` (rows x dims[party]) to one tensor factor of `in`, a vector
// laid out over `dims` in row-major party order. Returns the new vector;
// the caller owns updating dims[party] to op.rows().
CVector contract_party(std::span<const int> dims, const CVector& in, int party,
                       const CMatrix& op);

/// (I ⊗ .. ⊗ op ⊗ .. ⊗ I) |psi>, with `op` square and unnormalized output.
CVector apply_local(const SystemShape& shape, const CVector& amplitudes, int party,
                    const CMatrix& op);

/// Expectation Tr(rho · ⊗_n ops[n]).
Complex product_expectation(const DensityMatrix& rho, std::span<const CMatrix> ops);
/// <psi| ⊗_n ops[n] |psi>.
Complex product_expectation(const PureState& psi, std::span<const CMatrix> ops);

PureState tensor_product(std::span<const PureState> states);

/// Reduced state on `keep` (0-based party indices, any order; the result
/// orders parties ascending).
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

double purity(const DensityMatrix& rho);

/// Schmidt probabilities across the cut `part` | complement.
SchmidtSpectrum schmidt_spectrum(const PureState& psi, std::vector<int> part);

/// True iff `p` is majorized by `q`: every descending partial sum of q is at
/// least the matching partial sum of p. Shorter inputs are zero-padded.
bool majorizes(const SchmidtSpectrum& p, const SchmidtSpectrum& q, double tol = 1e-12);

/// Bloch vector (Tr(rho σ_x), Tr(rho σ_y), Tr(rho σ_z)) of a single qubit party.
Eigen::Vector3d qubit_bloch_vector(const DensityMatrix& rho, int party);

/// Conjugates `rho` by the product unitary ⊗_n unitaries[n].
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const CMatrix> unitaries);

}  // namespace randcorr
