import numpy as np
import pytest

from wedgebench import scatfunc
from wedgebench.errors import PoleError, ResolutionError

SAMPLES = np.linspace(-5.0, 5.0, 100)


def test_ising_constant():
    assert scatfunc.ising()(0.7) == pytest.approx(-1.0)


def test_free_constant():
    S = scatfunc.free()
    for th in (0.0, 1.3, -2.0 + 0.5j):
        assert S(th) == pytest.approx(1.0)


def test_sinh_gordon_real_line_unitarity():
    S = scatfunc.sinh_gordon(0.4)
    vals = S(np.array([1.3, -0.2, 4.0], dtype=complex))
    assert np.abs(np.abs(vals) - 1.0).max() < 1e-12


@pytest.mark.parametrize("B", [0.2, 0.4, 0.9])
def test_sinh_gordon_bootstrap(B):
    res = scatfunc.bootstrap_residuals(scatfunc.sinh_gordon(B), SAMPLES)
    assert max(res.values()) < 1e-12


def test_constant_models_bootstrap():
    for model in (scatfunc.free(), scatfunc.ising()):
        res = scatfunc.bootstrap_residuals(model, SAMPLES)
        assert max(res.values()) == 0.0


def test_product_closed_under_axioms():
    prod = scatfunc.ising() * scatfunc.sinh_gordon(0.4)
    res = scatfunc.bootstrap_residuals(prod, SAMPLES)
    assert max(res.values()) < 1e-12


def test_broken_model_negative_control():
    bad = scatfunc.broken(scatfunc.sinh_gordon(0.4))
    res = scatfunc.bootstrap_residuals(bad, SAMPLES)
    assert res["unitarity"] > 1e-3
    assert res["crossing"] > 1e-3


def test_sinh_gordon_parameter_range():
    with pytest.raises(ValueError):
        scatfunc.sinh_gordon(0.0)
    with pytest.raises(ValueError):
        scatfunc.sinh_gordon(2.0)


def test_pole_proximity_error():
    S = scatfunc.cdd_factor(np.pi / 3)
    with pytest.raises(PoleError) as err:
        S(1j * np.pi / 3 + 1e-12)
    assert err.value.location == pytest.approx(1j * np.pi / 3)


class TestPoleScan:
    def test_free_no_poles(self):
        assert scatfunc.pole_scan(scatfunc.free()) == []

    def test_sinh_gordon_strip_pole_free(self):
        # the strip zeros at i pi B/2 and i pi (1 - B/2) must not be
        # mistaken for poles (winding +1, not -1)
        assert scatfunc.pole_scan(scatfunc.sinh_gordon(0.4)) == []

    def test_cdd_pole_rediscovered(self):
        found = scatfunc.pole_scan(scatfunc.cdd_factor(np.pi / 3))
        assert len(found) == 2  # i pi/3 and i 2pi/3
        target = 1j * np.pi / 3
        cell = 8.0 / 64 + np.pi / 64
        assert min(abs(p - target) for p in found) < cell

    def test_stability_under_refinement(self):
        coarse = scatfunc.pole_scan(scatfunc.cdd_factor(0.8), cells=64)
        fine = scatfunc.pole_scan(scatfunc.cdd_factor(0.8), cells=128)
        assert len(coarse) == len(fine) == 2
        for p in fine:
            assert min(abs(p - q) for q in coarse) < (8.0 / 64 + np.pi / 64)

    def test_resolution_guard(self):
        with pytest.raises(ResolutionError):
            scatfunc.pole_scan(scatfunc.free(), cells=32)
