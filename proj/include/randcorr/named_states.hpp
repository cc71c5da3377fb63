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

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "randcorr/statekit.hpp"

namespace randcorr {

using State = std::variant<PureState, DensityMatrix>;

DensityMatrix to_density(const State& state);
const SystemShape& shape_of(const State& state);

enum class BellKind { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

/// (|0..0> + |1..1> + ... + |d-1..d-1>)/sqrt(d).
PureState ghz_state(int parties, int dim = 2);
/// Equal superposition of all N-bit strings with Hamming weight k.
PureState dicke_state(int parties, int excitations);
PureState w_state(int parties);
PureState bell_state(BellKind kind);
PureState singlet();
PureState double_singlet();
/// Computational basis product state |levels[0] levels[1] ...>.
PureState product_state(const std::vector<int>& levels, int dim = 2);

/// (|0>|GHZ_4> + |1>|D^2_4>)/sqrt(2).
PureState five_qubit_counterexample();
/// (|0>|psi-psi-> + |1>|psi+psi+>)/sqrt(2), reachable by LOCC to locc_phi().
PureState locc_psi();
/// |0>|psi-psi->.
PureState locc_phi();

/// 2D cluster state on a rows x cols lattice with nodes numbered row-major.
/// Stabilized by K_a = Z_a ⊗ X_{N(a)}: built as H^{⊗N} · Π_edges CZ · |+>^{⊗N}.
PureState cluster_state(int rows, int cols);
/// Nearest-neighbour edges of the rows x cols lattice, as node pairs.
std::vector<std::pair<int, int>> lattice_edges(int rows, int cols);
/// max_a || K_a|psi> - |psi> || for the rows x cols lattice.
double cluster_stabilizer_residual(const PureState& psi, int rows, int cols);

/// (1-p)|W><W| + p/3 (|100><100| + |010><010| + |001><001|).
DensityMatrix w_family(double p);

/// Parses the state mini-language: ghz:N[:d], dicke:N:k, w:N, cluster:RxC,
/// product:i,j,k[:d], wfamily:p, bell:phi+|phi-|psi+|psi-, singlet,
/// double_singlet, five_qubit, locc_psi, locc_phi.
State make_named_state(std::string_view spec);

}  // namespace randcorr
