import numpy as np
import pytest

from wedgebench import crossing, scatfunc
from wedgebench.errors import DomainError, OrderingError, PoleError
from wedgebench.numerics import AnalyticSampler

ISING = scatfunc.ising()
SAMPLES = np.linspace(-4.0, 4.0, 50)


@pytest.fixture
def modular():
    return crossing.ModularData()


@pytest.fixture
def gauss_pair():
    return (
        AnalyticSampler.gaussian(0.0, 1.0),
        AnalyticSampler.gaussian(0.3, 0.8, 0.7),
    )


class TestWatson:
    def test_ising_energy_passes(self):
        F = crossing.ising_energy_form_factor()
        res = crossing.watson_check(F, ISING, SAMPLES)
        assert res["exchange"] < 1e-12
        assert res["periodicity"] < 1e-12

    def test_ising_energy_value(self):
        F = crossing.ising_energy_form_factor()
        assert F(0.5, -0.5) == pytest.approx(-1j * np.sinh(0.5))
        # S * F(-theta) reproduces F(theta) pointwise
        assert ISING(1.0) * F(-0.5, 0.5) == pytest.approx(F(0.5, -0.5))

    def test_free_field_constant_passes(self):
        const = crossing.FormFactorFunction("const", 2, lambda t: 2.5)
        res = crossing.watson_check(const, scatfunc.free(), SAMPLES)
        assert res["exchange"] == 0.0
        assert res["periodicity"] == 0.0

    def test_linear_negative_control(self):
        # F(th) = th with S = -1 is odd, so the exchange identity holds
        # identically; the 2 pi i periodicity is what fails
        bad = crossing.FormFactorFunction("bad", 2, lambda t: t[0] - t[1])
        res = crossing.watson_check(bad, ISING, SAMPLES)
        assert res["exchange"] < 1e-12
        assert res["periodicity"] > 1.0

    def test_needs_two_particles(self):
        with pytest.raises(DomainError):
            crossing.watson_check(crossing.free_field_form_factor(), ISING, SAMPLES)

    def test_watson_failure_implies_crossing_failure(self):
        # the linear control fails Watson (periodicity) and also fails the
        # crossing continuation against its naive direct form
        bad = crossing.FormFactorFunction(
            "bad", 2, lambda t: t[0] - t[1], lambda out, inn: inn[0] - out[0]
        )
        assert crossing.watson_check(bad, ISING, SAMPLES)["periodicity"] > 1.0
        assert crossing.crossing_check(bad, 1, [(1.3, 0.0)]) > 1.0


class TestCrossingContinuation:
    def test_ising_energy_k1(self):
        F = crossing.ising_energy_form_factor()
        pairs = [(t + 1.3, t) for t in np.linspace(-2.0, 2.0, 50)]
        assert crossing.crossing_check(F, 1, pairs) < 1e-12

    def test_continuation_equals_direct_closed_form(self):
        F = crossing.ising_energy_form_factor()
        th1, th2 = 1.4, 0.2
        continued = F(th1, th2 + 1j * np.pi)
        assert continued == pytest.approx(-np.cosh(0.5 * (th1 - th2)))
        assert F.crossed((th2,), (th1,)) == pytest.approx(continued)

    def test_ordering_precondition(self):
        F = crossing.ising_energy_form_factor()
        with pytest.raises(OrderingError):
            crossing.crossing_check(F, 1, [(0.0, 1.0)])

    def test_free_field_edge(self):
        F = crossing.free_field_form_factor()
        assert crossing.crossing_check(F, 0, [(0.7,)]) == 0.0


class TestModularData:
    def test_boost_unitary_on_grid(self, modular):
        psi = AnalyticSampler.gaussian(0.2, 1.1)
        t = modular.grid().astype(complex)
        before = np.trapezoid(np.abs(psi(t)) ** 2, modular.grid())
        shifted = modular.boost(psi, 0.13)
        after = np.trapezoid(np.abs(shifted(t)) ** 2, modular.grid())
        assert abs(after - before) < 1e-10 * before

    def test_group_law(self, modular):
        psi = AnalyticSampler.gaussian(0.2, 1.1)
        t = np.linspace(-3.0, 3.0, 17).astype(complex)
        one = modular.boost(modular.boost(psi, 0.3), 0.45)
        two = modular.boost(psi, 0.75)
        assert np.abs(one(t) - two(t)).max() < 1e-12
        p_one = modular.modular_power(modular.modular_power(psi, 0.2), 0.3)
        p_two = modular.modular_power(psi, 0.5)
        assert np.abs(p_one(t) - p_two(t)).max() < 1e-12

    def test_conjugation_involutive(self, modular):
        psi = AnalyticSampler.gaussian(0.2, 1.1, 1.0 + 0.5j)
        t = np.linspace(-3.0, 3.0, 17).astype(complex)
        twice = modular.conjugation(modular.conjugation(psi))
        assert np.abs(twice(t) - psi(t)).max() < 1e-15

    def test_tomita_consistency(self, modular):
        # S_W = J Delta^{1/2} agrees with conjugation composed with the
        # strip continuation evaluated in the other order
        psi = AnalyticSampler.gaussian(0.2, 1.1)
        t = np.linspace(-3.0, 3.0, 17).astype(complex)
        via_modular = modular.tomita(psi)(t)
        direct = np.conj(psi(np.conj(t) + 1j * np.pi))
        assert np.abs(via_modular - direct).max() < 1e-8


class TestFreeKMS:
    def test_zero_wave_functions(self, modular):
        zero = AnalyticSampler(lambda z: np.zeros_like(z))
        assert crossing.kms_check_free(zero, zero, modular) == 0.0

    def test_gaussian_pair(self, modular, gauss_pair):
        f, g = gauss_pair
        assert crossing.kms_check_free(f, g, modular) < 1e-6

    def test_half_power_negative_control(self, modular, gauss_pair):
        f, g = gauss_pair
        assert crossing.kms_check_free(f, g, modular, delta_power=0.5) > 1e-2

    def test_boost_invariance(self, modular, gauss_pair):
        f, g = gauss_pair
        base = crossing.kms_check_free(f, g, modular)
        fb = AnalyticSampler.gaussian(0.8, 1.0)
        gb = AnalyticSampler.gaussian(1.1, 0.8, 0.7)
        assert abs(base - crossing.kms_check_free(fb, gb, modular)) < 1e-8

    def test_stable_under_quadrature_refinement(self, gauss_pair):
        f, g = gauss_pair
        for n in (1024, 2048, 4096):
            m = crossing.ModularData(quad_points=n)
            assert crossing.kms_check_free(f, g, m) < 1e-6

    def test_complex_amplitude_pair(self, modular):
        f = AnalyticSampler.gaussian(0.1, 1.2, 0.4 + 0.9j)
        g = AnalyticSampler.gaussian(-0.2, 0.9, 1.1 - 0.3j)
        assert crossing.kms_check_free(f, g, modular) < 1e-6
        assert crossing.wedge_duality_vacuum_check(f, g, modular) < 1e-6


class TestWedgeDuality:
    def test_zero_function(self, modular, gauss_pair):
        zero = AnalyticSampler(lambda z: np.zeros_like(z))
        assert crossing.wedge_duality_vacuum_check(gauss_pair[0], zero, modular) == 0.0

    def test_gaussian_pair(self, modular, gauss_pair):
        f, g = gauss_pair
        assert crossing.wedge_duality_vacuum_check(f, g, modular) < 1e-6

    def test_hard_cutoff_negative_control(self, modular, gauss_pair):
        f, g = gauss_pair
        broken = crossing.hard_cutoff(g, 1.0)
        assert crossing.wedge_duality_vacuum_check(f, broken, modular) > 1e-3


class TestUnruh:
    def test_periodicity(self):
        taus = np.linspace(0.5, 3.0, 20)
        assert crossing.unruh_kms_check(1.0, taus) < 1e-12

    def test_single_tau(self):
        assert crossing.unruh_kms_check(1.0, np.array([0.7])) < 1e-12

    def test_detuned_beta(self):
        taus = np.linspace(0.5, 3.0, 20)
        assert crossing.unruh_kms_check(1.0, taus, beta_scale=0.9) > 1e-2

    def test_scaling_invariance(self):
        r1 = crossing.unruh_kms_check(1.0, np.array([0.7]))
        r2 = crossing.unruh_kms_check(2.0, np.array([0.35]))
        assert abs(r1 - r2) < 1e-12

    def test_pole_guard(self):
        with pytest.raises(PoleError):
            crossing.unruh_kms_check(1.0, np.array([1e-9]))

    def test_acceleration_domain(self):
        with pytest.raises(DomainError):
            crossing.unruh_kms_check(-1.0, np.array([0.7]))
