import numpy as np
import pytest

from wedgebench import dpi
from wedgebench.errors import DomainError
from wedgebench.numerics import gauss_legendre

SYS = dpi.TwoParticleSystem()  # m = mu = 1, lambda = 0.5


def system(lam):
    return dpi.TwoParticleSystem(m=1.0, lam=lam, mu=1.0)


class TestPhaseShift:
    def test_free_coupling_exactly_zero(self):
        free = system(0.0)
        for p in (0.2, 0.5, 1.0):
            assert dpi.phase_shift(free, 0, p) == 0.0

    def test_born_limit(self):
        weak = system(0.01)
        d_k = dpi.phase_shift(weak, 0, 0.5)
        d_b = dpi.born_phase_shift(weak, 0.5)
        assert abs((d_k - d_b) / d_b) < 1e-2

    def test_born_antisymmetry_in_coupling(self):
        d_plus = dpi.phase_shift(system(0.01), 0, 0.5)
        d_minus = dpi.phase_shift(system(-0.01), 0, 0.5)
        assert abs(d_plus + d_minus) < 2e-2 * abs(d_plus)

    def test_separable_closed_form(self):
        # K(p0,p0) = lam g^2 / (1 - lam I) with I the PV integral of
        # p^2 g^2 / (E0 - E): independent quadrature of the resolvent trace
        p_on, lam = 0.5, 0.5
        sys = system(lam)
        x, w = gauss_legendre(400)
        p = 0.5 * (x + 1.0) * sys.p_max
        wq = 0.5 * w * sys.p_max
        e0 = float(sys.energy(p_on))
        g2 = sys.form_factor(p) ** 2
        num = p * p * g2 * (e0 + sys.energy(p)) / (4.0 * (p_on ** 2 - p ** 2))
        log_pv = np.log((sys.p_max + p_on) / (sys.p_max - p_on)) / (2.0 * p_on)
        g2_on = sys.form_factor(p_on) ** 2
        sub = p_on ** 2 * g2_on * (2 * e0) / 4.0 * (log_pv - np.sum(wq / (p_on ** 2 - p ** 2)))
        integral = float(np.sum(wq * num) + sub)
        k_closed = lam * g2_on / (1.0 - lam * integral)
        delta_closed = np.arctan(-np.pi * sys.rho(p_on) * k_closed)
        assert abs(dpi.phase_shift(sys, 0, p_on) - delta_closed) < 1e-10

    def test_continuity_in_p(self):
        deltas = [dpi.phase_shift(SYS, 0, p) for p in np.linspace(0.4, 0.6, 9)]
        steps = np.abs(np.diff(deltas))
        assert steps.max() < 0.05

    def test_higher_partial_waves_decouple(self):
        assert dpi.phase_shift(SYS, 2, 0.5) == 0.0
        assert dpi.phase_shift(SYS, "odd", 0.5) == 0.0

    def test_even_channel_born_consistency(self):
        weak = system(1e-4)
        delta = dpi.phase_shift(weak, "even", 0.5)
        rho_1d = np.sqrt(0.25 + 1.0) / (2.0 * 0.5)
        born = -np.pi * rho_1d * 2.0 * 1e-4 * weak.form_factor(0.5) ** 2
        assert abs((delta - born) / born) < 1e-2

    def test_edge_guards(self):
        with pytest.raises(DomainError):
            dpi.phase_shift(SYS, 0, 8.0)
        with pytest.raises(DomainError):
            dpi.phase_shift(SYS, 0, -0.5)
        with pytest.raises(DomainError):
            dpi.phase_shift(SYS, -1, 0.5)


class TestEvolutionOracle:
    def test_matches_kmatrix(self):
        d_evo = dpi.evolution_phase_shift(SYS, 0.5)
        d_k = dpi.phase_shift(SYS, 0, 0.5)
        assert abs(d_evo - d_k) < 1e-3

    def test_function_of_m(self):
        assert dpi.function_of_m_equivalence(SYS, 0.7) < 1e-3

    def test_free_equivalence_trivial(self):
        assert dpi.function_of_m_equivalence(system(0.0), 0.7) < 1e-12

    def test_discrepancy_does_not_grow_with_time(self):
        d40 = dpi.function_of_m_equivalence(SYS, 0.7, evolution_time=40.0)
        d80 = dpi.function_of_m_equivalence(SYS, 0.7, evolution_time=80.0)
        assert d80 <= d40 + 1e-12

    def test_sweep(self):
        worst = max(
            dpi.function_of_m_equivalence(SYS, float(p))
            for p in np.linspace(0.4, 1.2, 10)
        )
        assert worst < 1e-3


class TestClusterLimit:
    def test_zero_coupling(self):
        assert dpi.cluster_limit(SYS, [0.0]) == [0.0]

    def test_linear_vanishing(self):
        decay = dpi.cluster_limit(SYS, [0.1, 0.05, 0.025])
        for i in range(2):
            assert abs(decay[i] / decay[i + 1] - 2.0) < 0.2


class TestBTGenerators:
    def test_free_case_machine_small(self):
        gen = dpi.BTGenerators(system(0.0), 512, 512)
        res = dpi.bt_commutator_residual(gen)
        assert res["r1"] < 1e-8
        assert res["r2"] < 1e-8

    def test_interacting_residuals(self):
        gen = dpi.BTGenerators(SYS, 256, 256)
        res = dpi.bt_commutator_residual(gen)
        assert res["r1"] < 1e-6
        assert res["r2"] < 1e-6

    def test_grid_doubling_improves(self):
        res = dpi.bt_commutator_residual(dpi.BTGenerators(SYS, 256, 256))
        res2 = dpi.bt_commutator_residual(dpi.BTGenerators(SYS, 512, 512))
        assert res["r1"] / res2["r1"] >= 4.0
        assert res["r2"] / res2["r2"] >= 4.0

    def test_boundary_touching_rejected(self):
        gen = dpi.BTGenerators(SYS, 128, 128)
        psi = gen.gaussian_test_function(sigma_P=20.0)
        with pytest.raises(DomainError):
            dpi.bt_commutator_residual(gen, psi)


class TestSystemValidation:
    def test_parameters(self):
        with pytest.raises(DomainError):
            dpi.TwoParticleSystem(m=-1.0)
        with pytest.raises(DomainError):
            dpi.TwoParticleSystem(mu=0.0)
        with pytest.raises(DomainError):
            dpi.TwoParticleSystem(grid_n=4)
