import math

import pytest

cdgrav = pytest.importorskip("cdgrav")


def test_quadrature():
    nodes, weights = cdgrav.gauss_rule(2)
    assert nodes[0] == pytest.approx(-1.0 / math.sqrt(3.0))
    assert sum(weights) == pytest.approx(1.0)
    nodes, weights = cdgrav.lobatto_rule(3, 0.0, 1.0)
    assert nodes == pytest.approx([0.0, 0.5, 1.0])
    assert weights[0] == pytest.approx(1.0 / 6.0)


def test_catalog():
    ids = [pid for pid, _ in cdgrav.list_problems()]
    assert "ex2_isothermal_1d" in ids
    assert len(ids) == 13


def test_well_balanced_run():
    out = cdgrav.run(
        "ex2_isothermal_1d", **{"mesh.nx": 20, "time.t_final": 0.05}
    )
    assert out["steps"] > 0
    assert max(out["wb_l1_primal"]) <= 1e-12
    assert max(out["wb_l1_dual"]) <= 1e-12


def test_convergence_small():
    out = cdgrav.convergence(
        "ex1_accuracy_1d", [8, 16], **{"time.t_final": 0.02}
    )
    assert out["order"][0][0] == pytest.approx(3.0, abs=0.4)


def test_config_error():
    with pytest.raises(cdgrav.ConfigError):
        cdgrav.run("ex2_isothermal_1d", **{"bogus.key": 1})
