import csv
import io
import json
import math

import numpy as np
import pytest

import qhe


def test_isotropic_lmg_matches_closed_form():
    n, lam = 8, 2.0
    j = n / 2
    m = np.arange(-j, j + 1)
    expected = np.sort(-m - lam / n * (j * (j + 1) - m**2))
    got = qhe.spectrum(qhe.ModelParams("lmg", n, gamma=1.0, lam=lam))
    assert np.max(np.abs(np.array(got) - expected)) < 1e-10


def test_hamiltonian_is_symmetric_and_parity_conserving():
    p = qhe.ModelParams("dicke", 3, gamma=0.4, lam=1.3, boson_cutoff=6)
    h = qhe.hamiltonian(p)
    assert h.shape == (28, 28)
    assert np.array_equal(h, h.T)
    pi = qhe.parity(p)
    assert np.max(np.abs(h @ pi - pi @ h)) < 1e-10


def test_eigensolver_agrees_with_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(40, 40))
    a = (a + a.T) / 2
    values, vectors = qhe.eigh(a)
    assert np.allclose(values, np.linalg.eigvalsh(a), atol=1e-10)
    assert np.allclose(a @ vectors, vectors * np.array(values), atol=1e-9)


def test_thermal_state():
    s = qhe.thermal_state([0.0, 1.0], 1.0)
    z = 1 + math.exp(-1)
    assert s.log_z == pytest.approx(math.log(z))
    assert s.entropy == pytest.approx(math.log(z) + math.exp(-1) / z)
    with pytest.raises(qhe.ParameterError):
        qhe.thermal_state([0.0, 1.0], -1.0)


def test_lmg_cycle_reaches_carnot():
    baths = qhe.Baths(15.0, 30.0)
    r = qhe.run_cycle(qhe.ModelParams("lmg", 20), 0.5, 2.0, baths)
    assert r.status == "engine"
    assert 0.45 < r.efficiency <= baths.carnot + 1e-9
    assert r.work == pytest.approx(r.q_ab + r.q_bc + r.q_cd + r.q_da, abs=1e-12)


def test_sweep_and_cutoff():
    baths = qhe.Baths(15.0, 30.0)
    grid = [0.5, 1.0, 1.5, 2.0]
    results = qhe.efficiency_sweep(qhe.ModelParams("dicke", 2, boson_cutoff=16), 0.5, grid, baths, workers=2)
    assert len(results) == 4
    assert results[0].work == pytest.approx(0.0, abs=1e-14)
    cutoff, result = qhe.converge_cutoff(qhe.ModelParams("dicke", 4), 0.5, 2.0, baths)
    assert cutoff >= 8
    assert result.q_ab > 0 and result.q_cd < 0


def test_meanfield_and_toy():
    mf = qhe.meanfield_energy("lmg", 2.0)
    assert mf["energy_per_particle"] == pytest.approx(-0.625)
    assert mf["phase"] == "ferromagnetic"
    assert qhe.second_derivative_jump("dicke") == pytest.approx(2.0)
    assert list(qhe.toy_levels(0.0)) == [0.0, 1.0, 5.0, 12.0]
    assert qhe.toy_cycle(0.0, 0.0, qhe.Baths.from_temperatures(2.0, 0.05)).work == 0.0


def test_run_preset_csv_and_json_agree():
    text = qhe.run_preset("meanfield", "ope")
    rows = list(csv.DictReader(io.StringIO(text)))
    records = json.loads(qhe.run_preset("meanfield", "ope", fmt="json"))
    assert len(rows) == len(records) == 201
    assert float(rows[200]["u_per_n"]) == pytest.approx(records[200]["u_per_n"])
    assert "fig3a" in qhe.preset_names()


def test_config_errors_surface():
    with pytest.raises(qhe.ConfigError):
        qhe.run("sweep", '{"schema_version": 1, "bogus": 1}')
