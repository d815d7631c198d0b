import numpy as np
import pytest
from numpy.testing import assert_allclose

from wedgebench import unitarization as unit
from wedgebench.errors import DomainError

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def random_hermitian(rng, n):
    h = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (h + h.conj().T)


class TestRecursion:
    def test_s2_for_pauli_x(self):
        s2 = unit.unitarize_step([1j * SIGMA_X])
        assert_allclose(s2, -0.5 * np.eye(2), atol=1e-15)

    def test_s3_hermitian_part_vanishes(self):
        coeffs = [1j * SIGMA_X, unit.unitarize_step([1j * SIGMA_X])]
        s3 = unit.unitarize_step(coeffs)
        assert_allclose(s3, 0.0, atol=1e-15)

    def test_free_part_reproduces_exp_coefficient(self):
        coeffs = [1j * SIGMA_X, unit.unitarize_step([1j * SIGMA_X])]
        taylor3 = np.linalg.matrix_power(1j * SIGMA_X, 3) / 6.0
        s3 = unit.unitarize_step(coeffs, free_part=taylor3)
        assert_allclose(s3, taylor3, atol=1e-15)

    def test_invariant_enforced_by_construction(self, rng):
        h = random_hermitian(rng, 4)
        series = unit.build_series(1j * h, 5)
        assert series.order == 5
        with pytest.raises(DomainError):
            unit.PerturbativeS((h,))  # S_1 not anti-Hermitian
        bad = list(series.coefficients)
        bad[2] = bad[2] + np.eye(4)
        with pytest.raises(DomainError):
            unit.PerturbativeS(tuple(bad))

    def test_hermitian_free_part_rejected(self):
        with pytest.raises(DomainError):
            unit.unitarize_step([1j * SIGMA_X], free_part=SIGMA_X)


class TestUnitarityResidual:
    def test_truncation_at_order_one(self):
        series = unit.PerturbativeS((1j * SIGMA_X,))
        resid = unit.unitarity_residual(series)
        assert resid[0] < 1e-15  # order 1 exact
        assert resid[1] == pytest.approx(np.linalg.norm(SIGMA_X @ SIGMA_X))

    @pytest.mark.parametrize("dim", [2, 3, 8])
    def test_orders_through_k_vanish(self, rng, dim):
        h = random_hermitian(rng, dim)
        series = unit.build_series(1j * h, 4)
        resid = unit.unitarity_residual(series)
        assert max(resid[:4]) < 1e-12

    def test_zero_free_parts_hide_odd_orders(self, rng):
        # with all free parts zero the series is a function of H alone and
        # the order-5 defect cancels; order 6 shows the truncation
        h = random_hermitian(rng, 3)
        resid = unit.unitarity_residual(unit.build_series(1j * h, 4))
        assert resid[4] < 1e-12
        assert resid[5] > 1e-8

    def test_generic_free_parts_show_order_k_plus_one(self, rng):
        h = random_hermitian(rng, 3)
        frees = [
            0.5 * (a - a.conj().T)
            for a in (
                rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
                for _ in range(3)
            )
        ]
        series = unit.build_series(1j * h, 4, frees)
        resid = unit.unitarity_residual(series)
        assert max(resid[:4]) < 1e-12
        assert resid[4] > 1e-8

    def test_exp_series_unitary_through_truncation(self, rng):
        h = random_hermitian(rng, 3)
        taylor = unit.exp_taylor_coefficients(h, 6)
        frees = [0.5 * (t - t.conj().T) for t in taylor[1:]]
        series = unit.build_series(taylor[0], 6, frees)
        resid = unit.unitarity_residual(series)
        assert max(resid[:6]) < 1e-12
        for built, exact in zip(series.coefficients, taylor):
            assert np.linalg.norm(built - exact) < 1e-14

    def test_lambda_scaling(self, rng):
        h = random_hermitian(rng, 2)
        series = unit.build_series(1j * h, 2)
        r1 = unit.unitarity_residual(series, 1.0)
        r2 = unit.unitarity_residual(series, 0.5)
        assert r2[2] == pytest.approx(r1[2] * 0.5 ** 3)


class TestClusterFactorization:
    def test_reference_at_zero_separation(self):
        phase = unit.ConnectedPhase(width=1.0)
        ref = unit.cluster_factorization_demo(phase, [0.0])[0]
        assert ref > 0.0

    def test_monotone_decay(self):
        phase = unit.ConnectedPhase(width=1.0)
        seps = [0.0, 2.0, 4.0, 8.0, 16.0]
        vals = unit.cluster_factorization_demo(phase, seps)
        assert all(vals[i + 1] < vals[i] for i in range(len(vals) - 1))

    def test_small_at_ten_widths(self):
        phase = unit.ConnectedPhase(width=1.0)
        ref, far = unit.cluster_factorization_demo(phase, [0.0, 10.0])
        assert far < 1e-6 * ref

    def test_superpolynomial_decay(self):
        # successive ratios themselves shrink: faster than any inverse power
        phase = unit.ConnectedPhase(width=1.0)
        vals = unit.cluster_factorization_demo(phase, [2.0, 4.0, 6.0, 8.0])
        ratios = [vals[i + 1] / vals[i] for i in range(3)]
        assert ratios[1] < ratios[0] and ratios[2] < ratios[1]
