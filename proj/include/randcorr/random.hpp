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
#include <random>

#include "randcorr/statekit.hpp"

namespace randcorr {

using Rng = std::mt19937_64;

/// Independent generator for (master seed, stream index). Streams are how
/// parallel loops stay independent of thread scheduling.
Rng make_stream(std::uint64_t master_seed, std::uint64_t stream);

/// Uniform direction on the unit sphere.
Eigen::Vector3d sample_direction(Rng& rng);
Eigen::Vector3d sample_direction(std::uint64_t seed);

/// Haar-distributed d x d unitary (QR of a Ginibre matrix, phases of R's
/// diagonal divided out).
CMatrix sample_haar_unitary(int d, Rng& rng);
CMatrix sample_haar_unitary(int d, std::uint64_t seed);

/// Haar-random pure state on `shape`.
PureState random_pure_state(const SystemShape& shape, Rng& rng);
/// Product of independent Haar-random local pure states.
PureState random_product_state(const SystemShape& shape, Rng& rng);

}  // namespace randcorr
