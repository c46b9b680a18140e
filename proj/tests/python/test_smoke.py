import math

import numpy as np
import pytest

import ndyn


def test_catalog_lists_methods():
    names = {e["name"] for e in ndyn.catalog()}
    assert {"newton", "king", "chebyshev-halley", "os5"} <= names


def test_chebyshev_halley_normal_form():
    f = ndyn.normal_form("chebyshev-halley", {"alpha": 0})
    assert (f["n"], f["k"], f["sign"]) == (3, 1, 1)
    assert abs(f["a"][0] - 2) < 1e-12


def test_king_region():
    s = ndyn.stability("king")
    z1 = s["z1"]
    assert z1["kind"] == "circle"
    assert abs(z1["center"] - (-226 / 55)) < 1e-9
    assert abs(z1["radius"] - 16 / 55) < 1e-9
    assert abs(z1["superattracting_parameter"] + 4) < 1e-9
    assert s["zm1"]["kind"] == "not-applicable"


def test_fixed_points_of_traub_form():
    num, den = [0, 0, 0, 2, 1], [1, 2]
    pts = [p["point"] for p in ndyn.fixed_points(num, den)]
    finite = sorted(p.real for p in pts if not (isinstance(p, float) and math.isinf(p)))
    expected = sorted([0.0, 1.0, (-3 + 5 ** 0.5) / 2, (-3 - 5 ** 0.5) / 2])
    assert np.allclose(finite, expected, atol=1e-9)
    assert any(isinstance(p, float) and math.isinf(p) for p in pts)


def test_moebius_sum_and_pole():
    assert abs(ndyn.moebius_sum([6, -5, 1], "+") + 5) < 1e-12
    with pytest.raises(ndyn.NdynError):
        ndyn.moebius_sum([1, 1], "-")


def test_dynamical_plane_of_s5_has_cycle_basin():
    outcome, iterations, rgb = ndyn.dynamical_plane(
        "os5", {"a": 0}, res=(64, 64), mode="attractor", attractors=[[1, -1]]
    )
    assert outcome.shape == (64, 64) and rgb.shape == (64, 64, 3)
    assert (outcome == 2).any()
    assert ((outcome == 3) == (iterations == 150)).all()


def test_cli_round_trip():
    code, out, err = ndyn.run_cli(["build", "--method", "king"])
    assert code == 0, err
    assert '"n": 4' in out
    code, _, err = ndyn.run_cli(["build", "--method", "missing"])
    assert code == 1 and "missing" in err
