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

#include "randcorr/correlations.hpp"

#include <cmath>
#include <functional>

#include "randcorr/parallel.hpp"

namespace randcorr {

namespace {

std::vector<OperatorBasis> default_bases(const SystemShape& shape) {
  std::vector<OperatorBasis> bases;
  for (int d : shape.dims()) bases.push_back(gell_mann_basis(d));
  return bases;
}

void check_bases(const SystemShape& shape, std::span<const OperatorBasis> bases) {
  require(static_cast<int>(bases.size()) == shape.party_count(), "need one operator basis per party");
  for (int n = 0; n < shape.party_count(); ++n)
    require(bases[static_cast<std::size_t>(n)].dim == shape.dim(n),
            "basis dimension does not match party " + std::to_string(n));
}

// Offsets of (i, j) in the layout where party n carries the pair index
// i_n*d_n + j_n: offset = row_part[i] + col_part[j].
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> pair_offsets(const SystemShape& shape,
                                                                           const SystemShape& pair_shape) {
  const std::size_t dim = shape.total_dim();
  std::vector<std::size_t> row_part(dim, 0);
  std::vector<std::size_t> col_part(dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (int p = 0; p < shape.party_count(); ++p) {
      const auto d = static_cast<std::size_t>(shape.dim(p));
      const std::size_t digit = (i / shape.stride(p)) % d;
      row_part[i] += digit * d * pair_shape.stride(p);
      col_part[i] += digit * pair_shape.stride(p);
    }
  return {std::move(row_part), std::move(col_part)};
}

CorrelationTensor empty_tensor(const SystemShape& shape, std::span<const OperatorBasis> bases,
                               bool full_block) {
  CorrelationTensor t{shape, {}, full_block, {}, {}};
  std::size_t total = 1;
  for (const auto& b : bases) {
    t.basis_names.push_back(b.name());
    const int extent = b.dim * b.dim - (full_block ? 1 : 0);
    t.extents.push_back(extent);
    total *= static_cast<std::size_t>(extent);
  }
  t.coefficients.assign(total, Complex(0.0));
  return t;
}

// Leaf visitor over the operator strings ⊗_n ops[n][k_n] applied to psi.
// Leaves are produced in row-major order; the index space is split into
// prefix blocks so callers can reduce deterministically per block.
class StringWalker {
 public:
  StringWalker(const PureState& psi, std::vector<std::vector<CMatrix>> ops)
      : psi_(psi), ops_(std::move(ops)) {
    const int n = psi.party_count();
    std::size_t blocks = 1;
    prefix_ = 0;
    while (prefix_ < n && blocks < 64) blocks *= ops_[static_cast<std::size_t>(prefix_++)].size();
    blocks_ = blocks;
    leaves_per_block_ = 1;
    for (int k = prefix_; k < n; ++k) leaves_per_block_ *= ops_[static_cast<std::size_t>(k)].size();
  }

  std::size_t blocks() const { return blocks_; }
  std::size_t leaves_per_block() const { return leaves_per_block_; }

  /// Calls leaf(local_index, <psi|string|psi>) for every leaf in `block`.
  template <class Leaf>
  void walk(std::size_t block, Leaf&& leaf) const {
    CVector phi = psi_.amplitudes();
    std::size_t rem = block;
    std::vector<std::size_t> digits(static_cast<std::size_t>(prefix_));
    for (int k = prefix_; k-- > 0;) {
      const std::size_t e = ops_[static_cast<std::size_t>(k)].size();
      digits[static_cast<std::size_t>(k)] = rem % e;
      rem /= e;
    }
    for (int k = 0; k < prefix_; ++k)
      phi = apply_local(psi_.shape(), phi, k, ops_[static_cast<std::size_t>(k)][digits[static_cast<std::size_t>(k)]]);
    std::size_t counter = 0;
    descend(prefix_, phi, counter, leaf);
  }

 private:
  template <class Leaf>
  void descend(int party, const CVector& phi, std::size_t& counter, Leaf& leaf) const {
    if (party == psi_.party_count()) {
      leaf(counter++, psi_.amplitudes().dot(phi));
      return;
    }
    for (const CMatrix& op : ops_[static_cast<std::size_t>(party)]) {
      const CVector next = apply_local(psi_.shape(), phi, party, op);
      descend(party + 1, next, counter, leaf);
    }
  }

  const PureState& psi_;
  std::vector<std::vector<CMatrix>> ops_;
  int prefix_ = 0;
  std::size_t blocks_ = 1;
  std::size_t leaves_per_block_ = 1;
};

std::vector<std::vector<CMatrix>> adjoint_ops(std::span<const OperatorBasis> bases, bool full_block) {
  std::vector<std::vector<CMatrix>> ops;
  for (const auto& b : bases) {
    std::vector<CMatrix> party;
    if (!full_block) party.push_back(CMatrix::Identity(b.dim, b.dim));
    for (const auto& s : b.elements) party.push_back(s.adjoint());
    ops.push_back(std::move(party));
  }
  return ops;
}

CMatrix direction_operator(const Eigen::Vector3d& u) {
  require(std::abs(u.norm() - 1.0) <= 1e-8, "measurement direction must be a unit vector");
  return u.x() * pauli_x() + u.y() * pauli_y() + u.z() * pauli_z();
}

std::vector<CMatrix> direction_operators(const SystemShape& shape, std::span<const Eigen::Vector3d> dirs) {
  require(shape.uniform_dim() == 2, "correlation functions with directions need qubits");
  require(static_cast<int>(dirs.size()) == shape.party_count(), "need one direction per party");
  std::vector<CMatrix> ops;
  for (const auto& u : dirs) ops.push_back(direction_operator(u));
  return ops;
}

}  // namespace

Complex CorrelationTensor::at(std::span<const int> mu) const {
  require(mu.size() == extents.size(), "index arity does not match the tensor");
  std::size_t index = 0;
  for (std::size_t n = 0; n < mu.size(); ++n) {
    const int local = full_block ? mu[n] - 1 : mu[n];
    require(local >= 0 && local < extents[n], "tensor index out of range");
    index = index * static_cast<std::size_t>(extents[n]) + static_cast<std::size_t>(local);
  }
  return coefficients[index];
}

double CorrelationTensor::full_weight_length() const {
  CompensatedSum sum;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    bool full = true;
    if (!full_block) {
      std::size_t rem = i;
      for (std::size_t n = extents.size(); n-- > 0;) {
        if (rem % static_cast<std::size_t>(extents[n]) == 0) full = false;
        rem /= static_cast<std::size_t>(extents[n]);
      }
    }
    if (full) sum.add(std::norm(coefficients[i]));
  }
  return sum.value();
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho, std::span<const OperatorBasis> bases,
                                     bool full_block) {
  const SystemShape& shape = rho.shape();
  check_bases(shape, bases);
  const int n = shape.party_count();

  // Interleave row and column digits so each party owns one d^2 index.
  std::vector<int> dims;
  for (int d : shape.dims()) dims.push_back(d * d);
  const SystemShape pair_shape(dims);
  const std::size_t dim = shape.total_dim();
  const auto [row_part, col_part] = pair_offsets(shape, pair_shape);
  CVector v(static_cast<Eigen::Index>(pair_shape.total_dim()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      v(static_cast<Eigen::Index>(row_part[i] + col_part[j])) =
          rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  for (int p = 0; p < n; ++p) {
    const OperatorBasis& b = bases[static_cast<std::size_t>(p)];
    const int d = b.dim;
    const int first = full_block ? 1 : 0;
    CMatrix map(d * d - first, d * d);
    for (int mu = first; mu < d * d; ++mu) {
      const CMatrix s = b.element(mu);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) map(mu - first, i * d + j) = std::conj(s(i, j));
    }
    v = contract_party(dims, v, p, map);
    dims[static_cast<std::size_t>(p)] = static_cast<int>(map.rows());
  }

  CorrelationTensor t = empty_tensor(shape, bases, full_block);
  for (std::size_t i = 0; i < t.coefficients.size(); ++i) t.coefficients[i] = v(static_cast<Eigen::Index>(i));
  return t;
}

CorrelationTensor correlation_tensor(const PureState& psi, std::span<const OperatorBasis> bases,
                                     bool full_block, unsigned threads) {
  check_bases(psi.shape(), bases);
  CorrelationTensor t = empty_tensor(psi.shape(), bases, full_block);
  const StringWalker walker(psi, adjoint_ops(bases, full_block));
  const std::size_t per_block = walker.leaves_per_block();
  for_each_block(walker.blocks(), threads, [&](std::size_t block) {
    Complex* out = t.coefficients.data() + block * per_block;
    walker.walk(block, [out](std::size_t k, Complex value) { out[k] = value; });
  });
  return t;
}

double correlation_function(const DensityMatrix& rho, std::span<const Eigen::Vector3d> directions) {
  const auto ops = direction_operators(rho.shape(), directions);
  return product_expectation(rho, ops).real();
}

double correlation_function(const PureState& psi, std::span<const Eigen::Vector3d> directions) {
  const auto ops = direction_operators(psi.shape(), directions);
  return product_expectation(psi, ops).real();
}

double length_of_correlations(const DensityMatrix& rho, std::span<const OperatorBasis> bases) {
  return correlation_tensor(rho, bases, true).full_weight_length();
}

double length_of_correlations(const DensityMatrix& rho, const OperatorBasis& basis) {
  const std::vector<OperatorBasis> bases(static_cast<std::size_t>(rho.party_count()), basis);
  return length_of_correlations(rho, bases);
}

double length_of_correlations(const DensityMatrix& rho) {
  return length_of_correlations(rho, default_bases(rho.shape()));
}

double length_of_correlations(const PureState& psi, std::span<const OperatorBasis> bases, unsigned threads) {
  check_bases(psi.shape(), bases);
  const StringWalker walker(psi, adjoint_ops(bases, true));
  std::vector<double> partial(walker.blocks(), 0.0);
  for_each_block(walker.blocks(), threads, [&](std::size_t block) {
    CompensatedSum sum;
    walker.walk(block, [&sum](std::size_t, Complex value) { sum.add(std::norm(value)); });
    partial[block] = sum.value();
  });
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

double length_of_correlations(const PureState& psi, const OperatorBasis& basis, unsigned threads) {
  const std::vector<OperatorBasis> bases(static_cast<std::size_t>(psi.party_count()), basis);
  return length_of_correlations(psi, bases, threads);
}

double length_of_correlations(const PureState& psi, unsigned threads) {
  return length_of_correlations(psi, default_bases(psi.shape()), threads);
}

double length_from_purities(const DensityMatrix& rho) {
  const SystemShape& shape = rho.shape();
  const int n = shape.party_count();
  require(n <= 12, "subset-purity route is limited to 12 parties");
  CompensatedSum sum;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parties;
    double weight = 1.0;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) {
        parties.push_back(p);
        weight *= shape.dim(p);
      }
    const double pur = parties.empty() ? 1.0 : purity(partial_trace(rho, parties));
    const int sign = ((n - static_cast<int>(parties.size())) % 2 == 0) ? 1 : -1;
    sum.add(sign * weight * pur);
  }
  return sum.value();
}

double SectorLengths::total() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double SectorLengths::alternating_sum() const {
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) s += (k % 2 == 0 ? 1.0 : -1.0) * values[k];
  return s;
}

SectorLengths sector_lengths(const DensityMatrix& rho) {
  const auto bases = default_bases(rho.shape());
  const CorrelationTensor t = correlation_tensor(rho, bases, false);
  const int n = rho.party_count();
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
    std::size_t rem = i;
    int weight = 0;
    for (std::size_t p = t.extents.size(); p-- > 0;) {
      if (rem % static_cast<std::size_t>(t.extents[p]) != 0) ++weight;
      rem /= static_cast<std::size_t>(t.extents[p]);
    }
    sums[static_cast<std::size_t>(weight)].add(std::norm(t.coefficients[i]));
  }
  SectorLengths out;
  for (const auto& s : sums) out.values.push_back(s.value());
  return out;
}

EntanglementVerdict is_entangled_pure(const PureState& psi) {
  EntanglementVerdict v;
  v.threshold = 1.0;
  for (int d : psi.shape().dims()) v.threshold *= (d - 1);
  v.length = length_of_correlations(psi);
  v.margin = v.length - v.threshold;
  v.entangled = v.margin > kEntanglementTol;
  return v;
}

EntanglementVerdict is_entangled_pure(const DensityMatrix& rho) {
  require(std::abs(purity(rho) - 1.0) <= 1e-9, "the length-of-correlations test applies to pure states only");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  const Eigen::Index top = solver.eigenvalues().size() - 1;
  return is_entangled_pure(PureState::normalized(rho.shape(), solver.eigenvectors().col(top)));
}

CMatrix s_operator_local(const OperatorBasis& basis) {
  const int d = basis.dim;
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (const auto& sigma : basis.elements) s += kron(sigma.adjoint(), sigma);
  return s;
}

SSpectrumReport s_operator_spectrum_check(int d) {
  require(d >= 2, "S operator needs d >= 2");
  SSpectrumReport r;
  r.dim = d;
  const CMatrix s = s_operator_local(gell_mann_basis(d));
  r.trace = s.trace().real();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (s + s.adjoint()), Eigen::EigenvaluesOnly);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double e = solver.eigenvalues()(k);
    r.eigenvalues.push_back(e);
    if (std::abs(e - (d - 1)) <= 1e-9) ++r.count_plus;
    if (std::abs(e + (d + 1)) <= 1e-9) ++r.count_minus;
  }
  r.expected_plus = d * (d + 1) / 2;
  r.expected_minus = d * (d - 1) / 2;
  r.passed = r.count_plus == r.expected_plus && r.count_minus == r.expected_minus &&
             std::abs(r.trace) <= 1e-9 && (s - s.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
  return r;
}

double two_copy_length(const PureState& psi) {
  const SystemShape& shape = psi.shape();
  const std::size_t dim = shape.total_dim();
  require(dim * dim <= (std::size_t{1} << 16), "two-copy evaluation limited to 2^16 amplitudes");
  const int n = shape.party_count();
  std::vector<int> dims;
  for (int d : shape.dims()) dims.push_back(d * d);
  const SystemShape pair_shape(dims);

  // Doubled state with copy n' placed next to party n.
  const auto [row_part, col_part] = pair_offsets(shape, pair_shape);
  CVector doubled(static_cast<Eigen::Index>(dim * dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      doubled(static_cast<Eigen::Index>(row_part[i] + col_part[j])) =
          psi.amplitudes()(static_cast<Eigen::Index>(i)) * psi.amplitudes()(static_cast<Eigen::Index>(j));
  CVector out = doubled;
  for (int p = 0; p < n; ++p) out = contract_party(dims, out, p, s_operator_local(gell_mann_basis(shape.dim(p))));
  return doubled.dot(out).real();
}

CMatrix swap_operator(int d) {
  CMatrix p = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
  return p;
}

DensityMatrix werner_twirl(const DensityMatrix& rho) {
  require(rho.party_count() == 2 && rho.shape().uniform_dim() != 0,
          "Werner twirl needs two parties of equal dimension");
  const int d = rho.shape().dim(0);
  const CMatrix p = swap_operator(d);
  const double t = (rho.matrix() * p).trace().real();
  const double dd = static_cast<double>(d);
  const double b = (t - 1.0 / dd) / (dd * dd - 1.0);
  const double a = (1.0 - b * dd) / (dd * dd);
  CMatrix out = a * CMatrix::Identity(d * d, d * d) + b * p;
  return DensityMatrix(rho.shape(), std::move(out));
}

}  // namespace randcorr
