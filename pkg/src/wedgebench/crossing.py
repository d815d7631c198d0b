"""Modular wedge data for the free one-particle rapidity space, with
Watson/crossing identity checks, the free cyclic KMS identity, Unruh thermal
periodicity and the vacuum form of wedge duality.

Conventions (pinned by the Gaussian KMS check, see below): a one-particle
wave function is a strip-analytic function ``psi(theta)`` on
``0 <= Im theta <= pi``; the smeared field splits into a creation part read
on the lower boundary and an annihilation part read on the upper boundary,

    phi(f) = int f(th) a*(th) dth + int f(th + i pi) a(th) dth,

so ``<0| phi(f) phi(g) |0> = int f(th + i pi) g(th) dth``.  The modular group
acts by rapidity translation: ``Delta^{i tau}`` shifts ``theta -> theta - 2
pi tau`` and the analytic power ``Delta^{tau}`` shifts ``theta -> theta + 2
pi i tau``; ``J`` conjugates the wave function.  With these choices the
cyclic KMS identity holds exactly and the group law and J/S_W consistency
checks below come out at machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, OrderingError, PoleError
from .numerics import AnalyticSampler, gauss_legendre
from .scatfunc import ScatteringFunction

__all__ = [
    "ModularData",
    "FormFactorFunction",
    "ising_energy_form_factor",
    "free_field_form_factor",
    "hard_cutoff",
    "watson_check",
    "crossing_check",
    "kms_check_free",
    "unruh_kms_check",
    "wedge_duality_vacuum_check",
]


def _continuation(psi: Callable, shift: complex) -> Callable:
    return lambda z, _p=psi, _s=shift: _p(z + _s)


def _conjugate_function(psi: Callable) -> Callable:
    """Analytic continuation of ``theta -> conj(psi(theta))`` off the real
    line: ``z -> conj(psi(conj(z)))``."""
    return lambda z, _p=psi: np.conj(_p(np.conj(z)))


@dataclass(frozen=True)
class ModularData:
    """Modular objects of the right wedge on one-particle rapidity space."""

    quad_points: int = 2048
    window: float = 12.0

    def boost(self, psi: Callable, tau: float) -> Callable:
        """Unitary ``Delta^{i tau}``: rapidity shift ``theta - 2 pi tau``."""
        return _continuation(psi, -2.0 * np.pi * tau)

    def modular_power(self, psi: Callable, tau: float) -> Callable:
        """Positive power ``Delta^{tau}``: imaginary shift
        ``theta + 2 pi i tau`` on strip-analytic wave functions."""
        return _continuation(psi, 2.0j * np.pi * tau)

    def conjugation(self, psi: Callable) -> Callable:
        """Antiunitary ``J``: complex conjugation of the wave function."""
        return _conjugate_function(psi)

    def tomita(self, psi: Callable) -> Callable:
        """``S_W = J Delta^{1/2}``."""
        return self.conjugation(self.modular_power(psi, 0.5))

    def grid(self) -> np.ndarray:
        return np.linspace(-self.window, self.window, self.quad_points)

    def inner(self, phi: Callable, psi: Callable) -> complex:
        """``<phi, psi> = int conj(phi(th)) psi(th) dth`` on the real line."""
        t = self.grid().astype(complex)
        return complex(np.trapezoid(np.conj(phi(t)) * psi(t), self.grid()))


def two_point(f: Callable, g: Callable, n: int = 2048, window: float = 12.0) -> complex:
    """``<0| phi(f) phi(g) |0> = int f(th + i pi) g(th) dth`` by trapezoid."""
    t = np.linspace(-window, window, n)
    return complex(np.trapezoid(f(t + 1j * np.pi) * g(t.astype(complex)), t))


def _gauss_nodes(n: float, window: float):
    x, w = gauss_legendre(int(n))
    return x * window, w * window


def kms_check_free(
    f: AnalyticSampler,
    g: AnalyticSampler,
    modular: ModularData | None = None,
    delta_power: float = 1.0,
) -> float:
    """Residual of the cyclic KMS identity for the free wedge algebra,
    ``<0| phi(f) phi(g) |0> = <0| phi(g) Delta phi(f) |0>``.

    The right side realises ``Delta`` as ``Delta^{1/2}`` on each half of the
    sandwich (imaginary shift ``i pi`` per half), i.e.
    ``<Delta^{1/2} phi(g)* 0, Delta^{1/2} phi(f) 0>``, and is evaluated with
    an independent Gauss-Legendre quadrature.  ``delta_power`` scales the
    modular weight; 1 is the KMS value and anything else (the
    ``Delta^{1/2}`` negative control uses 0.5) must fail.
    """
    m = modular or ModularData()
    lhs = two_point(f, g, m.quad_points, m.window)
    # wave function of phi(g)* 0 is the conjugate of g read on the upper edge
    w_g = _conjugate_function(_continuation(g, 1j * np.pi))
    half = 0.5 * delta_power
    left = m.modular_power(w_g, half)
    right = m.modular_power(f, half)
    t, wq = _gauss_nodes(0.75 * m.quad_points, m.window * 1.15)
    rhs = complex(np.sum(wq * np.conj(left(t.astype(complex))) * right(t.astype(complex))))
    return abs(lhs - rhs)


def wedge_duality_vacuum_check(
    f: AnalyticSampler | Callable,
    g: AnalyticSampler | Callable,
    modular: ModularData | None = None,
) -> float:
    """Vacuum matrix element of ``[phi(f), J phi(g) J]``.

    Both orderings reduce to boundary integrals related by shifting the
    contour across the strip; for strip-analytic wave functions with decay
    the commutator vanishes, which is wedge duality in its vacuum form.  The
    two integrals are evaluated on different quadratures so the residual
    measures the identity, not a shared discretisation.
    """
    m = modular or ModularData()
    t = m.grid()
    i1 = complex(
        np.trapezoid(f(t + 1j * np.pi) * np.conj(g(t.astype(complex))), t)
    )
    tq, wq = _gauss_nodes(0.75 * m.quad_points, m.window * 1.15)
    i2 = complex(
        np.sum(wq * np.conj(g(tq + 1j * np.pi)) * f(tq.astype(complex)))
    )
    return abs(i1 - i2)


def hard_cutoff(psi: Callable, cut: float) -> Callable:
    """Restrict boundary values to ``|Re z| <= cut`` (destroys strip
    analyticity; negative control for the duality check)."""

    def fn(z, _p=psi, _c=cut):
        z = np.asarray(z, dtype=complex)
        return np.where(np.abs(z.real) <= _c, _p(z), 0.0)

    return fn


def unruh_kms_check(
    acceleration: float,
    tau_samples,
    beta_scale: float = 1.0,
    eps_factor: float = 1e-8,
) -> float:
    """Thermal periodicity of the uniformly accelerated two-point function.

    The worldline correlator is ``W(z) = 1/sinh^2(a z / 2)`` evaluated at
    ``z = tau - i eps``; the KMS statement ``W(-tau) = W(tau - i beta)`` with
    ``beta = 2 pi / a`` compares the reflection of the sample point against
    the ``i beta``-translated one, and ``sinh(x - i pi) = -sinh x`` makes it
    exact.  ``beta_scale != 1`` detunes the period (negative control).
    """
    if acceleration <= 0.0:
        raise DomainError("acceleration must be positive")
    a = float(acceleration)
    eps = eps_factor / a
    beta = 2.0 * np.pi / a * beta_scale
    tau = np.asarray(tau_samples, dtype=float)
    z = tau - 1j * eps
    if np.any(np.abs(np.sinh(a * z / 2.0)) < 10.0 * eps):
        raise PoleError("tau sample within eps of a sinh zero", location=0.0)
    w = lambda zz: 1.0 / np.sinh(a * zz / 2.0) ** 2
    return float(np.abs(w(-z) - w(z - 1j * beta)).max())


# ---------------------------------------------------------------------------
# form factors: Watson and crossing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormFactorFunction:
    """Closed-form vacuum form factor of ``n`` rapidities, together with the
    directly-coded partially crossed matrix element used as the independent
    side of the crossing check."""

    label: str
    n: int
    fn: Callable  # fn(theta_tuple) -> complex, theta_i complex
    crossed_fn: Callable | None = None  # crossed_fn(out_tuple, in_tuple)

    def __call__(self, *thetas) -> complex:
        if len(thetas) != self.n:
            raise DomainError(f"{self.label} takes {self.n} rapidities")
        return complex(self.fn(tuple(complex(t) for t in thetas)))

    def crossed(self, out_thetas, in_thetas) -> complex:
        if self.crossed_fn is None:
            raise DomainError(f"{self.label} has no direct crossed evaluation")
        return complex(self.crossed_fn(tuple(out_thetas), tuple(in_thetas)))


def ising_energy_form_factor() -> FormFactorFunction:
    """Two-particle form factor ``F(th1, th2) = -i sinh((th1 - th2)/2)`` of
    the thermal operator in the ``S = -1`` model.

    The crossed (1 -> 1) matrix element is coded directly as
    ``-cosh((th_in - th_out)/2)``; the crossing check compares the ``+ i pi``
    continuation of ``F`` against it through these two separate code paths.
    """
    fn = lambda th: -1j * np.sinh(0.5 * (th[0] - th[1]))
    crossed = lambda out, inn: -np.cosh(0.5 * (inn[0] - out[0]))
    return FormFactorFunction("ising-energy", 2, fn, crossed)


def free_field_form_factor(value: complex = 1.0) -> FormFactorFunction:
    """One-particle form factor of the free field, ``<0|phi|th> = const``."""
    return FormFactorFunction(
        "free-field-linear",
        1,
        lambda th, _v=value: _v,
        lambda out, inn, _v=value: _v,
    )


def watson_check(
    F: FormFactorFunction, S: ScatteringFunction, theta_samples
) -> dict:
    """Watson exchange and ``2 pi i`` periodicity residuals for an ``n = 2``
    form factor in the relative rapidity.

    Returns ``{'exchange': sup |F(th) - S(th) F(-th)|,
    'periodicity': sup |F(th + 2 pi i) - F(-th)|}``.
    """
    if F.n != 2:
        raise DomainError("watson_check needs a two-particle form factor")
    th = np.asarray(theta_samples, dtype=float)
    exchange = 0.0
    periodicity = 0.0
    for t in th:
        ft = F(0.5 * t, -0.5 * t)
        fmt = F(-0.5 * t, 0.5 * t)
        s = complex(S(complex(t)))
        exchange = max(exchange, abs(ft - s * fmt))
        fshift = F(0.5 * t + 2j * np.pi, -0.5 * t)
        periodicity = max(periodicity, abs(fshift - fmt))
    return {"exchange": exchange, "periodicity": periodicity}


def crossing_check(F: FormFactorFunction, k: int, samples) -> float:
    """Residual of the standard crossing continuation for ``k`` kept incoming
    particles.

    Each sample is a descending rapidity tuple ``th_1 > .. > th_n``; the last
    ``n - k`` entries are continued by ``+ i pi`` and compared against the
    directly evaluated ``k -> n-k`` matrix element (outgoing bra entries in
    natural order).  Crossing a rapidity that is not the smallest would move
    an outgoing rapidity above an incoming one, for which the standard form
    fails; such inputs raise `OrderingError` before any residual is reported.
    """
    n = F.n
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    worst = 0.0
    for sample in samples:
        ths = tuple(float(t) for t in np.atleast_1d(sample))
        if len(ths) != n:
            raise DomainError(f"sample of length {len(ths)} for n={n}")
        if any(ths[i] <= ths[i + 1] for i in range(n - 1)):
            raise OrderingError(
                "crossing_check needs strictly descending rapidities; "
                "the crossed (outgoing) rapidities must be the smaller ones"
            )
        kept = ths[:k]
        continued = F(*(kept + tuple(t + 1j * np.pi for t in ths[k:])))
        direct = F.crossed(ths[k:], kept)
        worst = max(worst, abs(continued - direct))
    return worst
