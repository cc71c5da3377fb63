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

#include "randcorr/convexroof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "randcorr/correlations.hpp"
#include "randcorr/opbasis.hpp"
#include "randcorr/random.hpp"

namespace randcorr {

namespace {

constexpr int kMaxSupportQubits = 8;

// V^† P V for every full-weight Pauli string P, in row-major string order.
std::vector<CMatrix> support_pauli_blocks(const SupportBasis& support) {
  const SystemShape& shape = support.shape;
  require(shape.uniform_dim() == 2, "convex-roof tools apply to qubit systems");
  require(shape.party_count() <= kMaxSupportQubits, "convex-roof tools are limited to 8 qubits");
  const std::vector<CMatrix> paulis{pauli_x(), pauli_y(), pauli_z()};
  std::vector<CMatrix> blocks;
  const auto descend = [&](auto&& self, int party, const CMatrix& phi) -> void {
    if (party == shape.party_count()) {
      blocks.push_back(support.vectors.adjoint() * phi);
      return;
    }
    for (const CMatrix& p : paulis) {
      CMatrix next(phi.rows(), phi.cols());
      for (Eigen::Index c = 0; c < phi.cols(); ++c) next.col(c) = apply_local(shape, phi.col(c), party, p);
      self(self, party + 1, next);
    }
  };
  descend(descend, 0, support.vectors);
  return blocks;
}

RMatrix real_part_checked(const CMatrix& m, const char* what) {
  require(m.imag().cwiseAbs().maxCoeff() <= 1e-8, std::string(what) + " has a non-negligible imaginary part");
  return m.real();
}

}  // namespace

SupportBasis support_basis(const DensityMatrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  const RVector& values = solver.eigenvalues();
  SupportBasis out{rho.shape(), 0, {}, {}, tol};
  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = values.size(); k-- > 0;) {
    const double v = values(k);
    require(!(v > 0.1 * tol && v <= 10.0 * tol),
            "density matrix rank is ambiguous at the requested tolerance");
    if (v > tol) kept.push_back(k);
  }
  require(!kept.empty(), "density matrix has empty support");
  out.rank = static_cast<int>(kept.size());
  out.vectors.resize(values.size(), out.rank);
  out.eigenvalues.resize(out.rank);
  for (int i = 0; i < out.rank; ++i) {
    out.vectors.col(i) = solver.eigenvectors().col(kept[static_cast<std::size_t>(i)]);
    out.eigenvalues(i) = values(kept[static_cast<std::size_t>(i)]);
  }
  return out;
}

CMatrix projected_s_tilde(const SupportBasis& support) {
  const int m = support.rank;
  CMatrix s = CMatrix::Zero(m * m, m * m);
  for (const CMatrix& a : support_pauli_blocks(support)) s += kron(a, a);
  return s;
}

ConvexRoofContext bloch_decompose(const CMatrix& s_tilde, int m) {
  require(m >= 1 && s_tilde.rows() == m * m && s_tilde.cols() == m * m, "S̃ must be m^2 x m^2");
  require((s_tilde - s_tilde.adjoint()).cwiseAbs().maxCoeff() <= 1e-8, "S̃ is not Hermitian");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          require(std::abs(s_tilde(i * m + j, k * m + l) - s_tilde(j * m + i, l * m + k)) <= 1e-8,
                  "S̃ is not symmetric under exchange of the copies");

  ConvexRoofContext ctx;
  ctx.rank = m;
  ctx.s0 = s_tilde.trace().real();
  if (m == 1) {
    ctx.s_vec = RVector(0);
    ctx.w = RMatrix(0, 0);
    ctx.w_eigenvalues = RVector(0);
    ctx.w_eigenvectors = RMatrix(0, 0);
    return ctx;
  }
  const auto basis = gell_mann_basis(m).elements;
  const auto count = static_cast<Eigen::Index>(basis.size());
  const CMatrix id = CMatrix::Identity(m, m);
  ctx.s_vec.resize(count);
  CMatrix w(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const CMatrix& si = basis[static_cast<std::size_t>(i)];
    const Complex left = (s_tilde * kron(si, id)).trace();
    const Complex right = (s_tilde * kron(id, si)).trace();
    require(std::abs(left - right) <= 1e-8, "local parts of S̃ differ between the copies");
    ctx.s_vec(i) = left.real();
    for (Eigen::Index j = 0; j < count; ++j)
      w(i, j) = (s_tilde * kron(si, basis[static_cast<std::size_t>(j)])).trace();
  }
  const RMatrix wr = real_part_checked(w, "correlation block W");
  require((wr - wr.transpose()).cwiseAbs().maxCoeff() <= 1e-8, "correlation block W is not symmetric");
  ctx.w = 0.5 * (wr + wr.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(ctx.w);
  ctx.w_eigenvalues = solver.eigenvalues().reverse();
  ctx.w_eigenvectors = solver.eigenvectors().rowwise().reverse();
  ctx.w_min = solver.eigenvalues()(0);
  return ctx;
}

RVector support_bloch_vector(const DensityMatrix& rho, const SupportBasis& support) {
  const CMatrix reduced = support.vectors.adjoint() * rho.matrix() * support.vectors;
  if (support.rank == 1) return RVector(0);
  const auto basis = gell_mann_basis(support.rank).elements;
  RVector out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = (reduced * basis[i]).trace().real();
  return out;
}

ConvexRoofContext convex_roof_context(const DensityMatrix& rho, double tol) {
  const SupportBasis support = support_basis(rho, tol);
  ConvexRoofContext ctx = bloch_decompose(projected_s_tilde(support), support.rank);
  ctx.rho_bloch = support_bloch_vector(rho, support);
  return ctx;
}

Rank2Result convex_roof_rank2(const DensityMatrix& rho, double tol) {
  const SupportBasis support = support_basis(rho, tol);
  require(support.rank == 2, "exact convex roof needs a rank-2 state (rank " + std::to_string(support.rank) + ")");
  Rank2Result r;
  r.context = bloch_decompose(projected_s_tilde(support), 2);
  r.context.rho_bloch = support_bloch_vector(rho, support);
  r.length = length_of_correlations(rho);
  r.purity = purity(rho);
  r.w_min = r.context.w_min;
  r.value = r.length + 0.5 * (1.0 - r.purity) * r.w_min;

  const RVector& w = r.context.w_eigenvalues;
  const RVector frame = r.context.w_eigenvectors.transpose() * r.context.rho_bloch;
  r.closed_form = 0.25 * (r.context.s0 + 2.0 * r.context.s_vec.dot(r.context.rho_bloch) + w(2) +
                          (w(0) - w(2)) * frame(0) * frame(0) + (w(1) - w(2)) * frame(1) * frame(1));
  r.entangled = r.value > 1.0 + kEntanglementTol;
  return r;
}

RankWitness witness_rank_m(const DensityMatrix& rho, double tol) {
  const SupportBasis support = support_basis(rho, tol);
  RankWitness r;
  r.rank = support.rank;
  r.length = length_of_correlations(rho);
  r.purity = purity(rho);
  if (support.rank >= 2) r.w_min = bloch_decompose(projected_s_tilde(support), support.rank).w_min;
  const double m = support.rank;
  r.value = r.length + r.w_min / (m * m) * (1.0 - r.purity);
  r.variant_over_m = r.length + r.w_min / m * (1.0 - r.purity);
  r.entangled = r.value > 1.0 + kEntanglementTol;
  r.variant_entangled = r.variant_over_m > 1.0 + kEntanglementTol;
  return r;
}

double decomposition_residual(const DensityMatrix& rho, const PureDecomposition& decomposition) {
  require(decomposition.weights.size() == decomposition.states.size(), "weights and states differ in length");
  CMatrix sum = CMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t k = 0; k < decomposition.states.size(); ++k) {
    const CVector& v = decomposition.states[k].amplitudes();
    sum += decomposition.weights[k] * v * v.adjoint();
  }
  return (sum - rho.matrix()).cwiseAbs().maxCoeff();
}

OracleResult convex_roof_oracle(const DensityMatrix& rho, const OracleOptions& options) {
  const SupportBasis support = support_basis(rho);
  const int m = support.rank;
  require(m <= 4 && rho.party_count() <= 4, "the convex-roof oracle is limited to rank 4 and 4 qubits");
  require(options.restarts >= 1, "need at least one restart");
  const int ensemble = options.ensemble_size > 0 ? options.ensemble_size : 2 * m;
  require(ensemble >= m, "ensemble size must be at least the rank");
  const std::vector<CMatrix> blocks = support_pauli_blocks(support);
  const RVector sqrt_weights = support.eigenvalues.cwiseSqrt();

  // Average length of correlations of the decomposition defined by `a`
  // (L x m, orthonormalized before use). Per-state weights go to `weights`.
  const auto evaluate = [&](const CMatrix& a, std::vector<double>* weights,
                            std::vector<CVector>* coefficients) {
    const CMatrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
    if (solver.eigenvalues().minCoeff() < 1e-12) return std::numeric_limits<double>::infinity();
    const CMatrix inv_sqrt = solver.eigenvectors() *
                             solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                             solver.eigenvectors().adjoint();
    const CMatrix u = a * inv_sqrt;
    double total = 0.0;
    for (Eigen::Index k = 0; k < u.rows(); ++k) {
      CVector c = u.row(k).transpose().cwiseProduct(sqrt_weights.cast<Complex>());
      const double mu = c.squaredNorm();
      if (mu < 1e-14) continue;
      c /= std::sqrt(mu);
      double length = 0.0;
      for (const CMatrix& block : blocks) length += std::norm(c.dot(block * c));
      total += mu * length;
      if (weights) weights->push_back(mu);
      if (coefficients) coefficients->push_back(c);
    }
    return total;
  };

  double best_value = std::numeric_limits<double>::infinity();
  CMatrix best_a;
  for (int restart = 0; restart < options.restarts; ++restart) {
    CMatrix a = CMatrix::Zero(ensemble, m);
    if (restart == 0) {
      a.topRows(m) = CMatrix::Identity(m, m);
    } else {
      Rng rng = make_stream(options.seed, static_cast<std::uint64_t>(restart));
      std::normal_distribution<double> normal;
      for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(normal(rng), normal(rng));
    }
    double value = evaluate(a, nullptr, nullptr);
    double step = 0.5;
    for (int sweep = 0; sweep < options.max_sweeps && step >= options.min_step; ++sweep) {
      bool improved = false;
      for (Eigen::Index i = 0; i < a.size(); ++i)
        for (const Complex direction : {Complex(1.0, 0.0), Complex(0.0, 1.0)})
          for (const double sign : {1.0, -1.0}) {
            CMatrix trial = a;
            trial.data()[i] += sign * step * direction;
            const double v = evaluate(trial, nullptr, nullptr);
            if (v < value - 1e-15) {
              value = v;
              a = std::move(trial);
              improved = true;
              break;
            }
          }
      if (!improved) step *= 0.5;
    }
    if (value < best_value) {
      best_value = value;
      best_a = a;
    }
  }

  OracleResult out;
  std::vector<CVector> coefficients;
  out.value = evaluate(best_a, &out.best.weights, &coefficients);
  for (const CVector& c : coefficients)
    out.best.states.push_back(PureState::normalized(rho.shape(), support.vectors * c));
  return out;
}

}  // namespace randcorr
