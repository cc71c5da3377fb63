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

#include "randcorr/statekit.hpp"

#include <algorithm>
#include <numeric>

namespace randcorr {

namespace {

using RowMajorCMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<int> sorted_unique_parties(std::vector<int> parties, int party_count) {
  std::sort(parties.begin(), parties.end());
  require(std::adjacent_find(parties.begin(), parties.end()) == parties.end(),
          "party list contains duplicates");
  for (int p : parties)
    require(p >= 0 && p < party_count, "party index " + std::to_string(p) + " out of range");
  return parties;
}

std::vector<int> complement(const std::vector<int>& parties, int party_count) {
  std::vector<int> rest;
  for (int p = 0; p < party_count; ++p)
    if (!std::binary_search(parties.begin(), parties.end(), p)) rest.push_back(p);
  return rest;
}

// Index of each full basis state within the sub-register spanned by `parties`.
std::vector<std::size_t> sub_indices(const SystemShape& shape, const std::vector<int>& parties) {
  std::vector<std::size_t> out(shape.total_dim(), 0);
  for (std::size_t i = 0; i < shape.total_dim(); ++i) {
    std::size_t sub = 0;
    for (int p : parties) {
      const auto digit = (i / shape.stride(p)) % static_cast<std::size_t>(shape.dim(p));
      sub = sub * static_cast<std::size_t>(shape.dim(p)) + digit;
    }
    out[i] = sub;
  }
  return out;
}

}  // namespace

SystemShape::SystemShape(std::vector<int> local_dims) : dims_(std::move(local_dims)) {
  require(!dims_.empty(), "a system needs at least one party");
  strides_.assign(dims_.size(), 1);
  for (std::size_t n = dims_.size(); n-- > 0;) {
    require(dims_[n] >= 2, "local dimensions must be at least 2");
    strides_[n] = total_;
    total_ *= static_cast<std::size_t>(dims_[n]);
  }
}

SystemShape SystemShape::uniform(int parties, int dim) {
  require(parties >= 1, "party count must be positive");
  return SystemShape(std::vector<int>(static_cast<std::size_t>(parties), dim));
}

int SystemShape::uniform_dim() const {
  for (int d : dims_)
    if (d != dims_.front()) return 0;
  return dims_.front();
}

SystemShape SystemShape::subsystem(std::span<const int> parties) const {
  std::vector<int> dims;
  for (int p : parties) dims.push_back(dim(p));
  return SystemShape(std::move(dims));
}

SystemShape SystemShape::concat(const SystemShape& other) const {
  std::vector<int> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return SystemShape(std::move(dims));
}

PureState::PureState(SystemShape shape, CVector amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
  require(static_cast<std::size_t>(amplitudes_.size()) == shape_.total_dim(),
          "amplitude count does not match the system dimension");
  require(std::abs(amplitudes_.squaredNorm() - 1.0) <= kStateTol, "pure state is not normalized");
}

PureState PureState::normalized(SystemShape shape, CVector amplitudes) {
  const double norm = amplitudes.norm();
  require(norm > 0.0, "cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(std::move(shape), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(SystemShape shape, CMatrix matrix, bool)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {}

DensityMatrix::DensityMatrix(SystemShape shape, CMatrix matrix)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(shape_.total_dim());
  require(matrix_.rows() == dim && matrix_.cols() == dim,
          "density matrix size does not match the system dimension");
  require((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= kStateTol,
          "density matrix is not Hermitian");
  const Complex trace = matrix_.trace();
  require(std::abs(trace.real() - 1.0) <= kStateTol && std::abs(trace.imag()) <= kStateTol,
          "density matrix trace is not 1");
  const CMatrix hermitian = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  require(solver.eigenvalues().minCoeff() >= -kStateTol, "density matrix is not positive");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.shape(), psi.amplitudes() * psi.amplitudes().adjoint(), true);
}

CVector contract_party(std::span<const int> dims, const CVector& in, int party,
                       const CMatrix& op) {
  std::size_t outer = 1;
  std::size_t inner = 1;
  for (int k = 0; k < party; ++k) outer *= static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]);
  for (std::size_t k = static_cast<std::size_t>(party) + 1; k < dims.size(); ++k)
    inner *= static_cast<std::size_t>(dims[k]);
  const auto d = static_cast<Eigen::Index>(dims[static_cast<std::size_t>(party)]);
  require(op.cols() == d, "operator does not match the local dimension");
  const Eigen::Index rows = op.rows();
  const auto inner_i = static_cast<Eigen::Index>(inner);
  CVector out(static_cast<Eigen::Index>(outer) * rows * inner_i);
  for (std::size_t o = 0; o < outer; ++o) {
    Eigen::Map<const RowMajorCMatrix> src(in.data() + o * static_cast<std::size_t>(d) * inner, d,
                                          inner_i);
    Eigen::Map<RowMajorCMatrix> dst(out.data() + o * static_cast<std::size_t>(rows) * inner, rows,
                                    inner_i);
    dst.noalias() = op * src;
  }
  return out;
}

CVector apply_local(const SystemShape& shape, const CVector& amplitudes, int party,
                    const CMatrix& op) {
  require(op.rows() == op.cols(), "local operator must be square");
  return contract_party(shape.dims(), amplitudes, party, op);
}

Complex product_expectation(const PureState& psi, std::span<const CMatrix> ops) {
  require(static_cast<int>(ops.size()) == psi.party_count(), "need one operator per party");
  CVector phi = psi.amplitudes();
  for (int n = 0; n < psi.party_count(); ++n)
    phi = apply_local(psi.shape(), phi, n, ops[static_cast<std::size_t>(n)]);
  return psi.amplitudes().dot(phi);
}

Complex product_expectation(const DensityMatrix& rho, std::span<const CMatrix> ops) {
  require(static_cast<int>(ops.size()) == rho.party_count(), "need one operator per party");
  // Tr(rho A) = sum_k (A rho)_{kk}; A acts on each column of rho.
  Complex total = 0.0;
  const auto dim = static_cast<Eigen::Index>(rho.shape().total_dim());
  for (Eigen::Index k = 0; k < dim; ++k) {
    CVector column = rho.matrix().col(k);
    for (int n = 0; n < rho.party_count(); ++n)
      column = apply_local(rho.shape(), column, n, ops[static_cast<std::size_t>(n)]);
    total += column(k);
  }
  return total;
}

PureState tensor_product(std::span<const PureState> states) {
  require(!states.empty(), "tensor product of an empty list");
  SystemShape shape = states.front().shape();
  CVector amps = states.front().amplitudes();
  for (std::size_t i = 1; i < states.size(); ++i) {
    const CVector& next = states[i].amplitudes();
    CVector joined(amps.size() * next.size());
    for (Eigen::Index a = 0; a < amps.size(); ++a) joined.segment(a * next.size(), next.size()) = amps(a) * next;
    amps = std::move(joined);
    shape = shape.concat(states[i].shape());
  }
  return PureState::normalized(std::move(shape), std::move(amps));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const SystemShape& shape = rho.shape();
  require(!keep.empty(), "partial trace must keep at least one party");
  keep = sorted_unique_parties(std::move(keep), shape.party_count());
  const std::vector<int> traced = complement(keep, shape.party_count());
  const SystemShape kept_shape = shape.subsystem(keep);
  const auto kept_idx = sub_indices(shape, keep);
  const auto traced_idx = sub_indices(shape, traced);

  std::size_t traced_dim = 1;
  for (int p : traced) traced_dim *= static_cast<std::size_t>(shape.dim(p));
  std::vector<std::vector<std::size_t>> groups(traced_dim);
  for (std::size_t i = 0; i < shape.total_dim(); ++i) groups[traced_idx[i]].push_back(i);

  const auto kd = static_cast<Eigen::Index>(kept_shape.total_dim());
  CMatrix out = CMatrix::Zero(kd, kd);
  const CMatrix& m = rho.matrix();
  for (const auto& group : groups)
    for (std::size_t a : group)
      for (std::size_t b : group)
        out(static_cast<Eigen::Index>(kept_idx[a]), static_cast<Eigen::Index>(kept_idx[b])) +=
            m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return DensityMatrix(kept_shape, std::move(out));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

SchmidtSpectrum schmidt_spectrum(const PureState& psi, std::vector<int> part) {
  const SystemShape& shape = psi.shape();
  part = sorted_unique_parties(std::move(part), shape.party_count());
  require(!part.empty() && static_cast<int>(part.size()) < shape.party_count(),
          "bipartition must be proper and non-empty");
  const std::vector<int> rest = complement(part, shape.party_count());
  const auto row_idx = sub_indices(shape, part);
  const auto col_idx = sub_indices(shape, rest);
  const auto rows = static_cast<Eigen::Index>(shape.subsystem(part).total_dim());
  const auto cols = static_cast<Eigen::Index>(shape.subsystem(rest).total_dim());
  CMatrix m = CMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < shape.total_dim(); ++i)
    m(static_cast<Eigen::Index>(row_idx[i]), static_cast<Eigen::Index>(col_idx[i])) =
        psi.amplitudes()(static_cast<Eigen::Index>(i));
  Eigen::JacobiSVD<CMatrix> svd(m);
  SchmidtSpectrum out;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()(k);
    out.probabilities.push_back(s * s);
  }
  std::sort(out.probabilities.begin(), out.probabilities.end(), std::greater<>());
  return out;
}

bool majorizes(const SchmidtSpectrum& p, const SchmidtSpectrum& q, double tol) {
  std::vector<double> a = p.probabilities;
  std::vector<double> b = q.probabilities;
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_a += a[k];
    sum_b += b[k];
    if (sum_b < sum_a - tol) return false;
  }
  return true;
}

Eigen::Vector3d qubit_bloch_vector(const DensityMatrix& rho, int party) {
  require(rho.shape().dim(party) == 2, "Bloch vectors are defined for qubit parties");
  const DensityMatrix local = partial_trace(rho, {party});
  const CMatrix& m = local.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const CMatrix> unitaries) {
  require(static_cast<int>(unitaries.size()) == rho.party_count(), "need one unitary per party");
  CMatrix u = unitaries[0];
  for (std::size_t n = 1; n < unitaries.size(); ++n) u = kron(u, unitaries[n]);
  require(u.rows() == static_cast<Eigen::Index>(rho.shape().total_dim()),
          "unitaries do not match the local dimensions");
  CMatrix out = u * rho.matrix() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(rho.shape(), std::move(out));
}

}  // namespace randcorr
