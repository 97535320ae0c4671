import json
import math
import os
import subprocess

import pytest

import hertzwave as hw


def test_kernel():
    assert hw.s_n(3, 2, 2) == pytest.approx(12)
    assert hw.s_n(2, 3, 1) == pytest.approx(4)
    assert hw.g_star(2) == pytest.approx(1 / 3)


def test_classify_solitary():
    C1, E, wave = hw.solitary_from_asymptote(2.0, 0.1)
    assert wave["kind"] == "SolitaryWave"
    assert wave["g1"] == pytest.approx(0.8, rel=1e-13)
    assert hw.classify(2.0, C1, E)["kind"] == "SolitaryWave"


def test_profile_matches_closed_form():
    C1, E, _ = hw.periodic_from_roots(3.0, math.sqrt(1 - 0.81), 0.9)
    p = hw.profile(3.0, C1, E, samples=64)
    assert p["wavelength"] == pytest.approx(math.pi, rel=1e-10)
    for xi, g in zip(p["xi"], p["g"]):
        assert abs(g - hw.closed_form_value("Periodic_k3_C10", 0.9, xi)) < 1e-9


def test_conserved_periodic_momentum():
    C1, E, _ = hw.periodic_from_roots(3.0, math.sqrt(1 - 0.81), 0.9)
    assert hw.conserved(3.0, C1, E)["momentum"] == pytest.approx(3 * math.pi / math.sqrt(2), rel=1e-10)


def test_no_wave_raises():
    with pytest.raises(ValueError):
        hw.profile(2.0, 0.0, -1.0)


def test_jet_identity():
    assert hw.jet_sweep(4, 2.5, jets=200) < 1e-12


@pytest.mark.skipif("HERTZWAVE_CLI" not in os.environ, reason="command-line tool not located")
def test_cli_classify():
    out = subprocess.run(
        [os.environ["HERTZWAVE_CLI"], "classify", "--k", "2", "--g0", "0.1"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    doc = json.loads(out)
    assert doc["schema"] == "hertzwave/1"
    assert doc["wave"]["kind"] == "SolitaryWave"
