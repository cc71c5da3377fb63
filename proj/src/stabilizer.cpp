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

#include "randcorr/stabilizer.hpp"

#include <bit>

#include "randcorr/named_states.hpp"
#include "randcorr/opbasis.hpp"

namespace randcorr {

namespace {

std::uint64_t qubit_mask(int qubits) {
  return qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << qubits) - 1;
}

// Rank over GF(2) of the 2N-bit rows (x | z).
int symplectic_rank(const std::vector<PauliRow>& rows) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> m;
  for (const auto& r : rows) m.emplace_back(r.x, r.z);
  int rank = 0;
  for (int col = 0; col < 128; ++col) {
    const bool in_x = col < 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    auto has = [&](const std::pair<std::uint64_t, std::uint64_t>& row) {
      return ((in_x ? row.first : row.second) & bit) != 0;
    };
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && !has(m[pivot])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && has(m[r])) {
        m[r].first ^= m[static_cast<std::size_t>(rank)].first;
        m[r].second ^= m[static_cast<std::size_t>(rank)].second;
      }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string PauliRow::to_string(int qubits) const {
  std::string s(negative ? "-" : "+");
  for (int q = 0; q < qubits; ++q) {
    const bool bx = (x >> q) & 1u;
    const bool bz = (z >> q) & 1u;
    s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  return s;
}

bool commute(const PauliRow& a, const PauliRow& b) {
  return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

StabilizerGroup::StabilizerGroup(int qubits, std::vector<PauliRow> generators)
    : qubits_(qubits), generators_(std::move(generators)) {
  require(qubits >= 1 && qubits <= kMaxQubits, "stabilizer groups support 1.." + std::to_string(kMaxQubits) + " qubits");
  require(static_cast<int>(generators_.size()) == qubits, "need exactly one generator per qubit");
  const std::uint64_t mask = qubit_mask(qubits);
  for (const auto& g : generators_) require(((g.x | g.z) & ~mask) == 0, "generator acts outside the register");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      require(commute(generators_[i], generators_[j]), "stabilizer generators do not commute");
  require(symplectic_rank(generators_) == qubits, "stabilizer generators are not independent");
}

StabilizerGroup StabilizerGroup::from_strings(std::span<const std::string> generators) {
  require(!generators.empty(), "no generators given");
  std::vector<PauliRow> rows;
  int qubits = -1;
  for (const auto& text : generators) {
    PauliRow row;
    std::string_view body(text);
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
      row.negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (qubits < 0) qubits = static_cast<int>(body.size());
    require(static_cast<int>(body.size()) == qubits, "generators have different lengths");
    require(qubits <= kMaxQubits, "too many qubits");
    for (int q = 0; q < qubits; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (body[static_cast<std::size_t>(q)]) {
        case 'I': break;
        case 'X': row.x |= bit; break;
        case 'Y': row.x |= bit; row.z |= bit; break;
        case 'Z': row.z |= bit; break;
        default: throw Error("invalid Pauli letter in '" + text + "'");
      }
    }
    rows.push_back(row);
  }
  return StabilizerGroup(qubits, std::move(rows));
}

StabilizerGroup StabilizerGroup::ghz(int qubits) {
  require(qubits >= 2 && qubits <= kMaxQubits, "GHZ stabilizer needs 2.." + std::to_string(kMaxQubits) + " qubits");
  std::vector<PauliRow> rows;
  rows.push_back({qubit_mask(qubits), 0, false});
  for (int q = 0; q + 1 < qubits; ++q) rows.push_back({0, (std::uint64_t{3} << q), false});
  return StabilizerGroup(qubits, std::move(rows));
}

StabilizerGroup StabilizerGroup::cluster(int rows, int cols) {
  const int n = rows * cols;
  require(n >= 1 && n <= kMaxQubits, "cluster lattice too large for the stabilizer path");
  std::vector<PauliRow> gens(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) gens[static_cast<std::size_t>(a)].z |= std::uint64_t{1} << a;
  for (const auto& [a, b] : lattice_edges(rows, cols)) {
    gens[static_cast<std::size_t>(a)].x |= std::uint64_t{1} << b;
    gens[static_cast<std::size_t>(b)].x |= std::uint64_t{1} << a;
  }
  return StabilizerGroup(n, std::move(gens));
}

StabilizerGroup StabilizerGroup::graph(int qubits, std::span<const std::pair<int, int>> edges) {
  require(qubits >= 1 && qubits <= kMaxQubits, "graph too large for the stabilizer path");
  std::vector<PauliRow> gens(static_cast<std::size_t>(qubits));
  for (int a = 0; a < qubits; ++a) gens[static_cast<std::size_t>(a)].x |= std::uint64_t{1} << a;
  for (const auto& [a, b] : edges) {
    require(a != b && a >= 0 && b >= 0 && a < qubits && b < qubits, "invalid graph edge");
    gens[static_cast<std::size_t>(a)].z ^= std::uint64_t{1} << b;
    gens[static_cast<std::size_t>(b)].z ^= std::uint64_t{1} << a;
  }
  return StabilizerGroup(qubits, std::move(gens));
}

void StabilizerGroup::apply_hadamard(int qubit) {
  require(qubit >= 0 && qubit < qubits_, "qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  for (auto& g : generators_) {
    const bool bx = g.x & bit;
    const bool bz = g.z & bit;
    if (bx && bz) g.negative = !g.negative;
    if (bx != bz) {
      g.x ^= bit;
      g.z ^= bit;
    }
  }
}

void StabilizerGroup::apply_phase(int qubit) {
  require(qubit >= 0 && qubit < qubits_, "qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  for (auto& g : generators_) {
    if (!(g.x & bit)) continue;
    if (g.z & bit) g.negative = !g.negative;
    g.z ^= bit;
  }
}

std::uint64_t stabilizer_length_of_correlations(const StabilizerGroup& group) {
  const int n = group.qubit_count();
  const std::uint64_t full = qubit_mask(n);
  const auto& gens = group.generators();
  // Gray-code walk: each step multiplies in one generator.
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::uint64_t count = 0;
  const std::uint64_t elements = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < elements; ++i) {
    const auto& g = gens[static_cast<std::size_t>(std::countr_zero(i))];
    x ^= g.x;
    z ^= g.z;
    if ((x | z) == full) ++count;
  }
  return count;
}

PureState stabilizer_state(const StabilizerGroup& group) {
  const int n = group.qubit_count();
  require(n <= 16, "dense stabilizer states are limited to 16 qubits");
  const SystemShape shape = SystemShape::uniform(n, 2);
  const auto project = [&](CVector v) {
    for (const auto& g : group.generators()) {
      CVector gv = v;
      for (int q = 0; q < n; ++q) {
        const bool bx = (g.x >> q) & 1u;
        const bool bz = (g.z >> q) & 1u;
        if (bx && bz) gv = apply_local(shape, gv, q, pauli_y());
        else if (bx) gv = apply_local(shape, gv, q, pauli_x());
        else if (bz) gv = apply_local(shape, gv, q, pauli_z());
      }
      if (g.negative) gv = -gv;
      v = 0.5 * (v + gv);
    }
    return v;
  };
  // Some seed vector has a non-zero overlap with the stabilized line; the
  // computational basis states cover it, and one of them has weight >= 2^-n.
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  for (Eigen::Index k = 0; k < dim; ++k) {
    CVector seed = CVector::Zero(dim);
    seed(k) = 1.0;
    CVector v = project(std::move(seed));
    if (v.norm() > 0.5 / std::sqrt(static_cast<double>(dim))) return PureState::normalized(shape, std::move(v));
  }
  throw Error("stabilizer projection vanished");
}

}  // namespace randcorr
