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

#include "randcorr/named_states.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "randcorr/opbasis.hpp"

namespace randcorr {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(),
          "invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string copy(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == copy.size() && !copy.empty(), "invalid " + std::string(what) + " '" + copy + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Qubit basis-state amplitude vector with bit 0 of the label being the last party.
CVector basis_vector(std::size_t dim, std::size_t index) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

CVector prepend_qubit(const CVector& zero_branch, const CVector& one_branch) {
  CVector v(2 * zero_branch.size());
  v << zero_branch, one_branch;
  return v;
}

}  // namespace

DensityMatrix to_density(const State& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(state);
}

const SystemShape& shape_of(const State& state) {
  return std::visit([](const auto& s) -> const SystemShape& { return s.shape(); }, state);
}

PureState ghz_state(int parties, int dim) {
  require(parties >= 1, "GHZ state needs at least one party");
  require(dim >= 2, "GHZ state needs local dimension >= 2");
  const SystemShape shape = SystemShape::uniform(parties, dim);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  for (int k = 0; k < dim; ++k) {
    std::size_t index = 0;
    for (int n = 0; n < parties; ++n) index = index * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k);
    v(static_cast<Eigen::Index>(index)) = 1.0;
  }
  return PureState::normalized(shape, std::move(v));
}

PureState dicke_state(int parties, int excitations) {
  require(parties >= 1 && parties <= 30, "Dicke state party count out of range");
  require(excitations >= 0 && excitations <= parties, "Dicke excitation count out of range");
  const SystemShape shape = SystemShape::uniform(parties, 2);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  for (std::size_t bits = 0; bits < shape.total_dim(); ++bits)
    if (std::popcount(bits) == excitations) v(static_cast<Eigen::Index>(bits)) = 1.0;
  return PureState::normalized(shape, std::move(v));
}

PureState w_state(int parties) { return dicke_state(parties, 1); }

PureState bell_state(BellKind kind) {
  CVector v = CVector::Zero(4);
  switch (kind) {
    case BellKind::kPhiPlus: v << 1, 0, 0, 1; break;
    case BellKind::kPhiMinus: v << 1, 0, 0, -1; break;
    case BellKind::kPsiPlus: v << 0, 1, 1, 0; break;
    case BellKind::kPsiMinus: v << 0, 1, -1, 0; break;
  }
  return PureState::normalized(SystemShape::uniform(2, 2), std::move(v));
}

PureState singlet() { return bell_state(BellKind::kPsiMinus); }

PureState double_singlet() {
  const std::vector<PureState> parts{singlet(), singlet()};
  return tensor_product(parts);
}

PureState product_state(const std::vector<int>& levels, int dim) {
  require(!levels.empty(), "product state needs at least one party");
  const SystemShape shape = SystemShape::uniform(static_cast<int>(levels.size()), dim);
  std::size_t index = 0;
  for (int level : levels) {
    require(level >= 0 && level < dim, "product state level out of range");
    index = index * static_cast<std::size_t>(dim) + static_cast<std::size_t>(level);
  }
  return PureState(shape, basis_vector(shape.total_dim(), index));
}

PureState five_qubit_counterexample() {
  CVector v = prepend_qubit(ghz_state(4).amplitudes(), dicke_state(4, 2).amplitudes());
  return PureState::normalized(SystemShape::uniform(5, 2), std::move(v));
}

PureState locc_psi() {
  const std::vector<PureState> minus{singlet(), singlet()};
  const std::vector<PureState> plus{bell_state(BellKind::kPsiPlus), bell_state(BellKind::kPsiPlus)};
  CVector v = prepend_qubit(tensor_product(minus).amplitudes(), tensor_product(plus).amplitudes());
  return PureState::normalized(SystemShape::uniform(5, 2), std::move(v));
}

PureState locc_phi() {
  const std::vector<PureState> parts{product_state({0}), singlet(), singlet()};
  return tensor_product(parts);
}

std::vector<std::pair<int, int>> lattice_edges(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "lattice needs positive extent");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int a = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(a, a + 1);
      if (r + 1 < rows) edges.emplace_back(a, a + cols);
    }
  return edges;
}

PureState cluster_state(int rows, int cols) {
  const int n = rows * cols;
  require(n >= 1 && n <= 20, "dense cluster states are limited to 20 qubits");
  const SystemShape shape = SystemShape::uniform(n, 2);
  const std::size_t dim = shape.total_dim();
  CVector v = CVector::Constant(static_cast<Eigen::Index>(dim), 1.0 / std::sqrt(static_cast<double>(dim)));
  for (const auto& [a, b] : lattice_edges(rows, cols)) {
    const std::size_t ma = shape.stride(a);
    const std::size_t mb = shape.stride(b);
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & ma) && (i & mb)) v(static_cast<Eigen::Index>(i)) *= -1.0;
  }
  CMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  for (int q = 0; q < n; ++q) v = apply_local(shape, v, q, h);
  return PureState::normalized(shape, std::move(v));
}

double cluster_stabilizer_residual(const PureState& psi, int rows, int cols) {
  const int n = rows * cols;
  require(psi.party_count() == n && psi.shape().uniform_dim() == 2, "state does not match the lattice");
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
  for (const auto& [a, b] : lattice_edges(rows, cols)) {
    neighbours[static_cast<std::size_t>(a)].push_back(b);
    neighbours[static_cast<std::size_t>(b)].push_back(a);
  }
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    CVector v = apply_local(psi.shape(), psi.amplitudes(), a, pauli_z());
    for (int b : neighbours[static_cast<std::size_t>(a)]) v = apply_local(psi.shape(), v, b, pauli_x());
    worst = std::max(worst, (v - psi.amplitudes()).norm());
  }
  return worst;
}

DensityMatrix w_family(double p) {
  require(p >= 0.0 && p <= 1.0, "w_family mixing parameter must lie in [0, 1]");
  const PureState w = w_state(3);
  CMatrix m = (1.0 - p) * w.amplitudes() * w.amplitudes().adjoint();
  for (int index : {4, 2, 1}) m(index, index) += p / 3.0;
  return DensityMatrix(SystemShape::uniform(3, 2), std::move(m));
}

State make_named_state(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto fields = split(args, ':');
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    const std::size_t count = args.empty() ? 0 : fields.size();
    require(count >= lo && count <= hi, "wrong number of parameters for state '" + std::string(name) + "'");
  };

  if (name == "ghz") {
    arity(1, 2);
    const int n = parse_int(fields[0], "party count");
    const int d = fields.size() > 1 ? parse_int(fields[1], "dimension") : 2;
    return ghz_state(n, d);
  }
  if (name == "dicke") {
    arity(2, 2);
    return dicke_state(parse_int(fields[0], "party count"), parse_int(fields[1], "excitation count"));
  }
  if (name == "w") {
    arity(1, 1);
    return w_state(parse_int(fields[0], "party count"));
  }
  if (name == "cluster") {
    arity(1, 1);
    const auto dims = split(fields[0], 'x');
    require(dims.size() == 2, "cluster size must be written RxC");
    return cluster_state(parse_int(dims[0], "row count"), parse_int(dims[1], "column count"));
  }
  if (name == "product") {
    arity(1, 2);
    std::vector<int> levels;
    for (auto part : split(fields[0], ',')) levels.push_back(parse_int(part, "level"));
    const int d = fields.size() > 1 ? parse_int(fields[1], "dimension") : 2;
    return product_state(levels, d);
  }
  if (name == "wfamily") {
    arity(1, 1);
    return w_family(parse_double(fields[0], "mixing parameter"));
  }
  if (name == "bell") {
    arity(1, 1);
    if (fields[0] == "phi+") return bell_state(BellKind::kPhiPlus);
    if (fields[0] == "phi-") return bell_state(BellKind::kPhiMinus);
    if (fields[0] == "psi+") return bell_state(BellKind::kPsiPlus);
    if (fields[0] == "psi-") return bell_state(BellKind::kPsiMinus);
    throw Error("unknown Bell state '" + std::string(fields[0]) + "'");
  }
  arity(0, 0);
  if (name == "singlet") return singlet();
  if (name == "double_singlet") return double_singlet();
  if (name == "five_qubit") return five_qubit_counterexample();
  if (name == "locc_psi") return locc_psi();
  if (name == "locc_phi") return locc_phi();
  throw Error("unknown state '" + std::string(spec) + "'");
}

}  // namespace randcorr
