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

#include "randcorr/opbasis.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "randcorr/random.hpp"

namespace randcorr {

namespace {

constexpr Complex kI{0.0, 1.0};

OperatorBasis mix(const OperatorBasis& base, const CMatrix& alpha) {
  const auto count = static_cast<Eigen::Index>(base.elements.size());
  require(alpha.rows() == count && alpha.cols() == count, "mixing matrix has the wrong size");
  require((alpha * alpha.adjoint() - CMatrix::Identity(count, count)).cwiseAbs().maxCoeff() <= 1e-10,
          "mixing matrix is not unitary");
  OperatorBasis out;
  out.dim = base.dim;
  out.kind = BasisKind::kMixed;
  out.mixing = alpha;
  for (Eigen::Index j = 0; j < count; ++j) {
    CMatrix s = CMatrix::Zero(base.dim, base.dim);
    for (Eigen::Index k = 0; k < count; ++k) s += alpha(j, k) * base.elements[static_cast<std::size_t>(k)];
    out.elements.push_back(std::move(s));
  }
  return out;
}

}  // namespace

CMatrix OperatorBasis::element(int mu) const {
  if (mu == 0) return CMatrix::Identity(dim, dim);
  return elements.at(static_cast<std::size_t>(mu - 1));
}

std::string OperatorBasis::name() const {
  switch (kind) {
    case BasisKind::kPauli: return "pauli";
    case BasisKind::kGellMann: return "gell-mann";
    case BasisKind::kWeylHeisenberg: return "weyl";
    case BasisKind::kMixed: return seed ? "mixed:" + std::to_string(*seed) : "mixed";
  }
  return "unknown";
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

OperatorBasis pauli_basis() {
  OperatorBasis b;
  b.dim = 2;
  b.kind = BasisKind::kPauli;
  b.elements = {pauli_x(), pauli_y(), pauli_z()};
  return b;
}

OperatorBasis gell_mann_basis(int d) {
  require(d >= 2, "Gell-Mann basis needs d >= 2");
  OperatorBasis b;
  b.dim = d;
  b.kind = BasisKind::kGellMann;
  const double off = std::sqrt(d / 2.0);
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      CMatrix g = CMatrix::Zero(d, d);
      g(m, n) = off;
      g(n, m) = off;
      b.elements.push_back(std::move(g));
    }
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      CMatrix g = CMatrix::Zero(d, d);
      g(m, n) = -kI * off;
      g(n, m) = kI * off;
      b.elements.push_back(std::move(g));
    }
  for (int l = 0; l <= d - 2; ++l) {
    const double scale = std::sqrt(static_cast<double>(d) / ((l + 1.0) * (l + 2.0)));
    CMatrix g = CMatrix::Zero(d, d);
    for (int j = 0; j <= l; ++j) g(j, j) = scale;
    g(l + 1, l + 1) = -(l + 1.0) * scale;
    b.elements.push_back(std::move(g));
  }
  return b;
}

OperatorBasis weyl_heisenberg_basis(int d) {
  require(d >= 2, "Weyl-Heisenberg basis needs d >= 2");
  CMatrix x = CMatrix::Zero(d, d);
  CMatrix z = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  OperatorBasis b;
  b.dim = d;
  b.kind = BasisKind::kWeylHeisenberg;
  CMatrix xm = CMatrix::Identity(d, d);
  for (int m = 0; m < d; ++m) {
    CMatrix w = xm;
    for (int n = 0; n < d; ++n) {
      if (m != 0 || n != 0) b.elements.push_back(w);
      w = w * z;
    }
    xm = xm * x;
  }
  return b;
}

OperatorBasis random_mixed_basis(int d, std::uint64_t seed) {
  const OperatorBasis base = gell_mann_basis(d);
  OperatorBasis out = mix(base, sample_haar_unitary(d * d - 1, seed));
  out.seed = seed;
  return out;
}

OperatorBasis mixed_basis(int d, const CMatrix& alpha) { return mix(gell_mann_basis(d), alpha); }

double validate_basis(const OperatorBasis& basis, double tol) {
  const int d = basis.dim;
  require(static_cast<int>(basis.elements.size()) == d * d - 1, "basis must have d^2-1 elements");
  double worst = 0.0;
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    const CMatrix& a = basis.elements[j];
    require(a.rows() == d && a.cols() == d, "basis element has the wrong size");
    worst = std::max(worst, std::abs(a.trace()));
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
      const Complex overlap = (a * basis.elements[k].adjoint()).trace();
      const double expected = j == k ? static_cast<double>(d) : 0.0;
      worst = std::max(worst, std::abs(overlap - expected));
    }
  }
  require(worst <= tol, "operator basis violates the trace conditions (deviation " +
                            std::to_string(worst) + ")");
  return worst;
}

OperatorBasis basis_from_name(std::string_view name, int d) {
  if (name == "pauli") {
    require(d == 2, "the Pauli basis is only defined for qubits");
    return pauli_basis();
  }
  if (name == "gell-mann") return gell_mann_basis(d);
  if (name == "weyl") return weyl_heisenberg_basis(d);
  constexpr std::string_view prefix = "mixed:";
  if (name.starts_with(prefix)) {
    const std::string_view digits = name.substr(prefix.size());
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    require(ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty(),
            "invalid mixed basis seed '" + std::string(digits) + "'");
    return random_mixed_basis(d, seed);
  }
  throw Error("unknown basis '" + std::string(name) + "'");
}

}  // namespace randcorr
