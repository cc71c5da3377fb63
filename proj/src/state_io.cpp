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

#include "randcorr/state_io.hpp"

#include <fstream>

namespace randcorr {

namespace {

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from(const nlohmann::json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json state_to_json(const State& state) {
  nlohmann::json doc;
  doc["dims"] = shape_of(state).dims();
  if (const auto* psi = std::get_if<PureState>(&state)) {
    doc["kind"] = "pure";
    auto& amps = doc["amplitudes"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < psi->amplitudes().size(); ++i) amps.push_back(complex_json(psi->amplitudes()(i)));
  } else {
    const CMatrix& m = std::get<DensityMatrix>(state).matrix();
    doc["kind"] = "mixed";
    auto& rows = doc["matrix"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
      rows.push_back(std::move(row));
    }
  }
  return doc;
}

State state_from_json(const nlohmann::json& doc) {
  require(doc.is_object(), "state document must be a JSON object");
  require(doc.contains("dims") && doc["dims"].is_array(), "state document needs a 'dims' array");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    require(d.is_number_integer(), "'dims' entries must be integers");
    dims.push_back(d.get<int>());
  }
  SystemShape shape(std::move(dims));
  require(doc.contains("kind") && doc["kind"].is_string(), "state document needs a 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  if (kind == "pure") {
    require(doc.contains("amplitudes") && doc["amplitudes"].is_array(), "pure state needs 'amplitudes'");
    const auto& amps = doc["amplitudes"];
    require(static_cast<Eigen::Index>(amps.size()) == dim, "amplitude count does not match 'dims'");
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_from(amps[static_cast<std::size_t>(i)]);
    return PureState(std::move(shape), std::move(v));
  }
  if (kind == "mixed") {
    require(doc.contains("matrix") && doc["matrix"].is_array(), "mixed state needs 'matrix'");
    const auto& rows = doc["matrix"];
    require(static_cast<Eigen::Index>(rows.size()) == dim, "matrix row count does not match 'dims'");
    CMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      require(row.is_array() && static_cast<Eigen::Index>(row.size()) == dim, "matrix rows must be square");
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = complex_from(row[static_cast<std::size_t>(j)]);
    }
    return DensityMatrix(std::move(shape), std::move(m));
  }
  throw Error("unknown state kind '" + kind + "'");
}

State load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cannot parse state file " + path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

void save_state_file(const std::filesystem::path& path, const State& state) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write state file " + path.string());
  out << state_to_json(state).dump(2) << '\n';
}

}  // namespace randcorr
