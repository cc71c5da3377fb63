# Copyright 2026 The randcorr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import randcorr as rc


def test_ghz_lengths():
    assert rc.length_of_correlations(rc.ghz_state(3)) == pytest.approx(4.0, abs=1e-12)
    assert rc.length_of_correlations(rc.ghz_state(4), "pauli") == pytest.approx(9.0, abs=1e-12)
    assert rc.two_copy_length(rc.ghz_state(5)) == pytest.approx(16.0, abs=1e-9)
    assert rc.ghz_stabilizer_length(4) == 9
    assert rc.cluster_stabilizer_length(2, 2) == 5


def test_named_state_variant():
    pure = rc.make_named_state("ghz:3")
    mixed = rc.make_named_state("wfamily:0.5")
    assert isinstance(pure, rc.PureState)
    assert isinstance(mixed, rc.DensityMatrix)
    assert rc.purity(rc.DensityMatrix.from_pure(pure)) == pytest.approx(1.0)


def test_tensor_and_sectors():
    t = rc.correlation_tensor(rc.singlet(), "pauli")
    assert t.shape == (4, 4)
    assert np.allclose(np.diag(t).real, [1, -1, -1, -1])
    assert rc.sector_lengths(rc.ghz_state(3)) == pytest.approx([1, 0, 3, 4], abs=1e-12)


def test_state_construction_and_errors():
    amps = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    psi = rc.PureState([2, 2], amps)
    assert rc.is_entangled_pure(psi)["entangled"]
    with pytest.raises(rc.RandcorrError):
        rc.PureState([2, 2], np.ones(4, dtype=complex))
    with pytest.raises(ValueError):
        rc.make_named_state("nonsense")


def test_bases():
    for name in ("gell-mann", "weyl", "mixed:3"):
        b = rc.basis_from_name(name, 3)
        assert len(b.elements) == 8
        assert rc.validate_basis(b) < 1e-10
    psi = rc.make_named_state("ghz:2:3")
    values = [rc.length_of_correlations(psi, name) for name in ("gell-mann", "weyl", "mixed:11")]
    assert max(values) - min(values) < 1e-9


def test_random_correlations():
    est, se = rc.mc_random_correlations(rc.singlet(), 20000, rc.pauli_basis().elements[2], 5)
    assert abs(est - 1 / 3) <= 3 * se
    assert rc.exact_random_correlations(rc.ghz_state(6)) == pytest.approx(33 / 729)
    report = rc.detection_probability(rc.ghz_state(3), shots=1000, trials=5000, calibration_trials=50000)
    assert 0.0 <= report["probability"] <= 1.0


def test_convex_roof():
    product = rc.product_state([0, 0, 0]).amplitudes
    ghz = rc.ghz_state(3).amplitudes
    rho = 0.5 * np.outer(product, product.conj()) + 0.5 * np.outer(ghz, ghz.conj())
    r = rc.convex_roof_rank2(rc.DensityMatrix([2, 2, 2], rho))
    assert r["value"] == pytest.approx(1.75, abs=1e-8)
    w = rc.witness_rank_m(rc.w_family(0.5))
    assert w["rank"] == 3 and w["value"] > 1


def test_run_command():
    artifacts, code = rc.run_command("counterexamples")
    assert code == 0
    report = json.loads(artifacts[".json"])
    assert report["pass"]
    artifacts, code = rc.run_command("length", state="ghz:4")
    assert json.loads(artifacts[".json"])["C"] == pytest.approx(9.0)
