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

#include "randcorr/random.hpp"

#include <vector>

namespace randcorr {

Rng make_stream(std::uint64_t master_seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Eigen::Vector3d sample_direction(Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v;
  do {
    v = {normal(rng), normal(rng), normal(rng)};
  } while (v.squaredNorm() < 1e-24);
  return v.normalized();
}

Eigen::Vector3d sample_direction(std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return sample_direction(rng);
}

CMatrix sample_haar_unitary(int d, Rng& rng) {
  require(d >= 1, "unitary dimension must be positive");
  std::normal_distribution<double> normal;
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= mag > 0.0 ? diag / mag : Complex(1.0);
  }
  return q;
}

CMatrix sample_haar_unitary(int d, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return sample_haar_unitary(d, rng);
}

PureState random_pure_state(const SystemShape& shape, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(shape.total_dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  return PureState::normalized(shape, std::move(v));
}

PureState random_product_state(const SystemShape& shape, Rng& rng) {
  std::vector<PureState> locals;
  for (int d : shape.dims()) locals.push_back(random_pure_state(SystemShape({d}), rng));
  return tensor_product(locals);
}

}  // namespace randcorr
