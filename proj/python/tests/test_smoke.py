# Copyright 2026 The wtlattice Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import math

import numpy as np
import pytest

import wtlattice as wt

CONFIG = """
seed = 11
trials = 200
sigma_s = 2
snr_b = 100
gain_b = 1.474
snr_e = 4
c_e = 0.575
"""


def test_gaussian_integer_flatness_matches_direct_sum():
    theta = sum(math.exp(-math.pi * k * k) for k in range(-30, 31))
    z = wt.Lattice.gaussian_integers(1)
    r = wt.flatness_factor(z, 1 / math.sqrt(math.pi))
    assert r["epsilon"] == pytest.approx(theta**2 - 1, abs=1e-10)
    assert r["route"] == "dual"


def test_lattice_roundtrip_and_dual_volume():
    g = np.array([[1.0, 0.3 + 0.8j]])
    lat = wt.Lattice.from_complex_generator(g)
    assert lat.volume * lat.dual().volume == pytest.approx(1.0)
    y = np.array([0.4 + 0.7j])
    x = lat.closest_point(y)
    assert lat.contains(x)


def test_hermitian_covariance_accepted():
    z = wt.Lattice.gaussian_integers(2)
    cov = np.array([[1.0, 0.2j], [-0.2j, 0.5]])
    assert wt.flatness_factor(z, cov)["epsilon"] > 0
    with pytest.raises(wt.WtlError):
        wt.flatness_factor(z, np.array([[1.0, 2.0], [2.0, 1.0]], dtype=complex))


def test_sampler_draws_lattice_points():
    z = wt.Lattice.gaussian_integers(1)
    draws = wt.sample_discrete_gaussian(z, np.zeros(1, complex), 1.0, 2000, 7)
    assert draws.shape == (2000, 1)
    assert np.allclose(draws, np.round(draws.real) + 1j * np.round(draws.imag))
    assert np.mean(np.abs(draws) ** 2) == pytest.approx(1.0, rel=0.1)


def test_noiseless_coding_roundtrip():
    pair = wt.sample_nested_pair(5, 2, 2, 8, 6, 3)
    assert pair.num_messages == 25
    enc = wt.WiretapEncoder(pair, 2.0)
    h = np.array([[1.0, 0.3j], [0.2, 0.9]])
    dec = wt.WiretapDecoder(pair, wt.mmse_gdfe(h, 1e9))
    for m in range(pair.num_messages):
        assert dec.decode(h @ enc.encode(m, m)) == m


def test_security_formulas():
    assert wt.achievable_rate(10, 2, 2) == pytest.approx(6.0)
    assert wt.achievable_rate(10, 2, 2, math.sqrt(2)) == pytest.approx(4.6137, abs=5e-5)
    assert wt.leakage_bound(1e-4, 1.0, 2, 100) == pytest.approx(0.1657, abs=5e-5)
    c = wt.check_secrecy(wt.Lattice.gaussian_integers(2), np.eye(1), 1.0, 1.0, 2)
    assert c["gamma"] == pytest.approx(2.0)
    assert c["pass_vnr"] and c["pass_volume"]


def test_run_experiment_is_deterministic():
    s1, t1 = wt.run_experiment(CONFIG)
    s2, t2 = wt.run_experiment(CONFIG.replace("seed = 11", "seed = 11\nworkers = 2"))
    assert t1 == t2
    assert s1["config_hash"] == wt.config_hash(CONFIG)
    assert t1.splitlines()[0] == "config_hash,seed,trial,m,m_hat,err,power"
    assert len(t1.splitlines()) == 201


def test_errors_carry_codes():
    with pytest.raises(wt.WtlError) as info:
        wt.config_hash("p = 5\n")
    assert "Config" in str(info.value)
    z4 = wt.Lattice.gaussian_integers(4)
    with pytest.raises(wt.TruncationError) as info:
        wt.flatness_factor(z4, 0.05, 1e-12, "dual")
    assert len(info.value.args) == 3
