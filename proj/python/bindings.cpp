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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "randcorr/app/commands.hpp"
#include "randcorr/convexroof.hpp"
#include "randcorr/correlations.hpp"
#include "randcorr/named_states.hpp"
#include "randcorr/random_correlations.hpp"
#include "randcorr/stabilizer.hpp"
#include "randcorr/state_io.hpp"

namespace py = pybind11;
using namespace randcorr;

namespace {

Shots to_shots(std::optional<std::uint64_t> shots) {
  return shots ? Shots::finite(*shots) : Shots::infinite();
}

std::vector<OperatorBasis> bases_for(const SystemShape& shape, const std::string& name) {
  std::vector<OperatorBasis> out;
  for (int d : shape.dims()) out.push_back(basis_from_name(name, d));
  return out;
}

py::array_t<Complex> tensor_array(const CorrelationTensor& t) {
  std::vector<py::ssize_t> extents(t.extents.begin(), t.extents.end());
  py::array_t<Complex> out(extents);
  std::copy(t.coefficients.begin(), t.coefficients.end(), out.mutable_data());
  return out;
}

// State arguments arrive as either wrapped class.
State as_state(const py::handle& obj) {
  if (py::isinstance<PureState>(obj)) return obj.cast<PureState>();
  if (py::isinstance<DensityMatrix>(obj)) return obj.cast<DensityMatrix>();
  throw py::type_error("expected a PureState or DensityMatrix");
}

py::dict verdict_dict(const EntanglementVerdict& v) {
  py::dict d;
  d["entangled"] = v.entangled;
  d["margin"] = v.margin;
  d["length"] = v.length;
  d["threshold"] = v.threshold;
  return d;
}

py::dict witness_dict(const WitnessReport& r) {
  py::dict d;
  d["parties"] = r.parties;
  d["shots"] = r.shots.label();
  d["confidence"] = r.confidence;
  d["probability"] = r.probability;
  d["standard_error"] = r.standard_error;
  d["delta"] = r.delta;
  d["bound"] = r.bound;
  d["trials"] = r.trials;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Length of correlations, random correlations and convex-roof tools";
  py::register_exception<Error>(m, "RandcorrError", PyExc_ValueError);

  py::class_<PureState>(m, "PureState")
      .def(py::init([](std::vector<int> dims, const CVector& amps) { return PureState(SystemShape(dims), amps); }),
           py::arg("dims"), py::arg("amplitudes"))
      .def_static("normalized",
                  [](std::vector<int> dims, const CVector& amps) { return PureState::normalized(SystemShape(dims), amps); })
      .def_property_readonly("dims", [](const PureState& s) { return s.shape().dims(); })
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def("__repr__", [](const PureState& s) { return "<PureState parties=" + std::to_string(s.party_count()) + ">"; });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](std::vector<int> dims, const CMatrix& rho) { return DensityMatrix(SystemShape(dims), rho); }),
           py::arg("dims"), py::arg("matrix"))
      .def_static("from_pure", &DensityMatrix::from_pure)
      .def_property_readonly("dims", [](const DensityMatrix& s) { return s.shape().dims(); })
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def("__repr__",
           [](const DensityMatrix& s) { return "<DensityMatrix parties=" + std::to_string(s.party_count()) + ">"; });

  py::class_<OperatorBasis>(m, "OperatorBasis")
      .def_readonly("dim", &OperatorBasis::dim)
      .def_readonly("elements", &OperatorBasis::elements)
      .def_property_readonly("name", &OperatorBasis::name)
      .def("element", &OperatorBasis::element);

  // States.
  m.def("ghz_state", &ghz_state, py::arg("parties"), py::arg("dim") = 2);
  m.def("dicke_state", &dicke_state);
  m.def("w_state", &w_state);
  m.def("singlet", &singlet);
  m.def("double_singlet", &double_singlet);
  m.def("product_state", &product_state, py::arg("levels"), py::arg("dim") = 2);
  m.def("cluster_state", &cluster_state);
  m.def("five_qubit_counterexample", &five_qubit_counterexample);
  m.def("locc_psi", &locc_psi);
  m.def("locc_phi", &locc_phi);
  m.def("w_family", &w_family);
  m.def("make_named_state", &make_named_state);
  m.def("load_state_file", &load_state_file);
  m.def("save_state_file",
        [](const std::filesystem::path& path, const py::object& state) { save_state_file(path, as_state(state)); });
  m.def("tensor_product", [](const std::vector<PureState>& states) { return tensor_product(states); });
  m.def("partial_trace", &partial_trace);
  m.def("purity", &purity);
  m.def("schmidt_spectrum",
        [](const PureState& psi, std::vector<int> part) { return schmidt_spectrum(psi, part).probabilities; });
  m.def("majorizes", [](std::vector<double> p, std::vector<double> q) {
    return majorizes(SchmidtSpectrum{std::move(p)}, SchmidtSpectrum{std::move(q)});
  });

  // Bases.
  m.def("pauli_basis", &pauli_basis);
  m.def("gell_mann_basis", &gell_mann_basis);
  m.def("weyl_heisenberg_basis", &weyl_heisenberg_basis);
  m.def("random_mixed_basis", &random_mixed_basis);
  m.def("basis_from_name", &basis_from_name);
  m.def("validate_basis", [](const OperatorBasis& b) { return validate_basis(b); });

  // Correlations.
  m.def(
      "length_of_correlations",
      [](const py::object& obj, const std::string& basis) {
        const State state = as_state(obj);
        const auto bases = bases_for(shape_of(state), basis);
        if (const auto* psi = std::get_if<PureState>(&state)) return length_of_correlations(*psi, bases);
        return length_of_correlations(std::get<DensityMatrix>(state), bases);
      },
      py::arg("state"), py::arg("basis") = "gell-mann");
  m.def(
      "correlation_tensor",
      [](const py::object& obj, const std::string& basis, bool full_block) {
        const State state = as_state(obj);
        const auto bases = bases_for(shape_of(state), basis);
        if (const auto* psi = std::get_if<PureState>(&state)) return tensor_array(correlation_tensor(*psi, bases, full_block));
        return tensor_array(correlation_tensor(std::get<DensityMatrix>(state), bases, full_block));
      },
      py::arg("state"), py::arg("basis") = "gell-mann", py::arg("full_block") = false);
  m.def("correlation_function", [](const py::object& obj, const std::vector<Eigen::Vector3d>& dirs) {
        const State state = as_state(obj);
    return correlation_function(to_density(state), dirs);
  });
  m.def("sector_lengths", [](const py::object& obj) {
    const State state = as_state(obj); return sector_lengths(to_density(state)).values; });
  m.def("length_from_purities", [](const py::object& obj) {
    const State state = as_state(obj); return length_from_purities(to_density(state)); });
  m.def("two_copy_length", &two_copy_length);
  m.def("is_entangled_pure", [](const py::object& obj) {
    const State state = as_state(obj);
    if (const auto* psi = std::get_if<PureState>(&state)) return verdict_dict(is_entangled_pure(*psi));
    return verdict_dict(is_entangled_pure(std::get<DensityMatrix>(state)));
  });
  m.def("s_operator_spectrum_check", [](int d) {
    const auto r = s_operator_spectrum_check(d);
    py::dict out;
    out["eigenvalues"] = r.eigenvalues;
    out["count_plus"] = r.count_plus;
    out["count_minus"] = r.count_minus;
    out["passed"] = r.passed;
    return out;
  });
  m.def("swap_operator", &swap_operator);
  m.def("werner_twirl", &werner_twirl);

  // Stabilizer path.
  m.def("stabilizer_length_of_correlations", [](const std::vector<std::string>& generators) {
    return stabilizer_length_of_correlations(StabilizerGroup::from_strings(generators));
  });
  m.def("cluster_stabilizer_length", [](int rows, int cols) {
    return stabilizer_length_of_correlations(StabilizerGroup::cluster(rows, cols));
  });
  m.def("ghz_stabilizer_length",
        [](int n) { return stabilizer_length_of_correlations(StabilizerGroup::ghz(n)); });

  // Random correlations.
  m.def("exact_random_correlations", &exact_random_correlations);
  m.def(
      "mc_random_correlations",
      [](const py::object& obj, std::size_t samples, const CMatrix& op, std::uint64_t seed) {
        const State state = as_state(obj);
        const auto r = mc_random_correlations(to_density(state), samples, op, seed);
        return py::make_tuple(r.estimate, r.standard_error);
      },
      py::arg("state"), py::arg("samples"), py::arg("initial_operator"), py::arg("seed"));
  m.def(
      "calibrate_delta",
      [](int parties, std::optional<std::uint64_t> shots, double confidence, std::size_t trials, std::uint64_t seed) {
        const auto c = calibrate_delta(parties, to_shots(shots), confidence, trials, seed);
        py::dict out;
        out["delta"] = c.delta;
        out["quantile"] = c.quantile;
        out["bound"] = c.bound;
        out["trials"] = c.trials;
        return out;
      },
      py::arg("parties"), py::arg("shots") = py::none(), py::arg("confidence") = kDefaultConfidence,
      py::arg("trials") = 1'000'000, py::arg("seed") = 1);
  m.def(
      "detection_probability",
      [](const PureState& psi, std::optional<std::uint64_t> shots, std::size_t trials, std::uint64_t seed,
         double confidence, std::size_t calibration_trials) {
        WitnessConfig config;
        config.parties = psi.party_count();
        config.shots = to_shots(shots);
        config.confidence = confidence;
        config.calibration_trials = calibration_trials;
        return witness_dict(detection_probability(psi, config, trials, seed));
      },
      py::arg("state"), py::arg("shots") = py::none(), py::arg("trials") = 100'000, py::arg("seed") = 1,
      py::arg("confidence") = kDefaultConfidence, py::arg("calibration_trials") = 1'000'000);

  // Convex roof.
  m.def("convex_roof_rank2", [](const DensityMatrix& rho) {
    const auto r = convex_roof_rank2(rho);
    py::dict out;
    out["value"] = r.value;
    out["closed_form"] = r.closed_form;
    out["length"] = r.length;
    out["purity"] = r.purity;
    out["w_min"] = r.w_min;
    out["entangled"] = r.entangled;
    return out;
  });
  m.def("witness_rank_m", [](const DensityMatrix& rho) {
    const auto w = witness_rank_m(rho);
    py::dict out;
    out["rank"] = w.rank;
    out["length"] = w.length;
    out["purity"] = w.purity;
    out["w_min"] = w.w_min;
    out["value"] = w.value;
    out["variant_over_m"] = w.variant_over_m;
    out["entangled"] = w.entangled;
    return out;
  });
  m.def(
      "convex_roof_oracle",
      [](const DensityMatrix& rho, int restarts, std::uint64_t seed) {
        OracleOptions options;
        options.restarts = restarts;
        options.seed = seed;
        return convex_roof_oracle(rho, options).value;
      },
      py::arg("rho"), py::arg("restarts") = 32, py::arg("seed") = 0);

  // Command layer: params as a JSON string, artifacts back as {suffix: text}.
  m.def("_run_command", [](const std::string& command, const std::string& params_json) {
    const auto result = app::run_command(command, nlohmann::json::parse(params_json));
    py::dict artifacts;
    for (const auto& a : result.artifacts) artifacts[py::str(a.suffix)] = a.content;
    return py::make_tuple(artifacts, result.exit_code());
  });
  m.attr("__version__") = std::string(app::version());
}
