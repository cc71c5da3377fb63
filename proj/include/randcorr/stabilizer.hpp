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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "randcorr/statekit.hpp"

namespace randcorr {

/// One Pauli string ±⊗(I|X|Y|Z) in symplectic form; bit q of x/z refers to
/// qubit (party) q. x=z=1 encodes Y.
struct PauliRow {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool negative = false;

  std::string to_string(int qubits) const;
};

/// Abelian group generated by N independent, commuting Pauli strings.
class StabilizerGroup {
 public:
  static constexpr int kMaxQubits = 30;

  StabilizerGroup(int qubits, std::vector<PauliRow> generators);
  /// Strings like "XXX", "+ZZI", "-IZZ", one per generator.
  static StabilizerGroup from_strings(std::span<const std::string> generators);
  /// <X..X, Z_0 Z_1, Z_1 Z_2, ...>.
  static StabilizerGroup ghz(int qubits);
  /// K_a = Z_a ⊗ X_{N(a)} on the rows x cols lattice (row-major nodes).
  static StabilizerGroup cluster(int rows, int cols);
  /// Graph state generators X_a ⊗ Z_{N(a)}.
  static StabilizerGroup graph(int qubits, std::span<const std::pair<int, int>> edges);

  int qubit_count() const { return qubits_; }
  const std::vector<PauliRow>& generators() const { return generators_; }

  /// Conjugates every generator by a Hadamard / phase gate on `qubit`.
  void apply_hadamard(int qubit);
  void apply_phase(int qubit);

 private:
  int qubits_;
  std::vector<PauliRow> generators_;
};

bool commute(const PauliRow& a, const PauliRow& b);

/// Number of group elements without an identity factor. Equals the length of
/// correlations of the stabilized state, since every Pauli expectation of a
/// stabilizer state is ±1 (group elements) or 0.
std::uint64_t stabilizer_length_of_correlations(const StabilizerGroup& group);

/// Dense state fixed by every generator (product of projectors (I+g)/2).
/// Limited to 16 qubits.
PureState stabilizer_state(const StabilizerGroup& group);

}  // namespace randcorr
