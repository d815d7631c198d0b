"""Partial-charge fluctuation and localization-entropy scaling from the
chiral current two-point function.

The smeared charge ``Q = int f(u) j(u) du`` against the kernel
``<j(u) j(u')> = c / (u - u' + i eps)^2`` has vacuum fluctuation

    ||Q Omega||^2 = c int_0^infty p |fhat(p)|^2 dp,

the momentum-space form used as the primary evaluation here.  The constant
is pinned by the position-space double quadrature

    (c/2) iint (f(u) - f(v))^2 / (u - v)^2 du dv,

which equals the momentum form identically (Plancherel for the half-order
seminorm); the two code paths cross-check each other to better than a
percent across the test matrix.  For the smooth plateau profiles shipped
here the fluctuation grows like ``ln(R / dR)`` as the edge sharpens, which
is the scaling law under test; hard cutoffs make the integral log-divergent
at large momentum, which the resolution guard reports instead of hiding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResolutionError

__all__ = [
    "SmearingProfile",
    "CurrentModel",
    "charge_fluctuation",
    "charge_fluctuation_position_space",
    "fit_log_law",
    "entropy_scaling_fit",
]

MIN_RAMP_POINTS = 16


def _smooth_step(t: np.ndarray) -> np.ndarray:
    """C-infinity transition: 0 for t <= 0, 1 for t >= 1."""
    t = np.clip(t, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        a = np.where(t > 0.0, np.exp(-1.0 / np.where(t > 0.0, t, 1.0)), 0.0)
        b = np.where(t < 1.0, np.exp(-1.0 / np.where(t < 1.0, 1.0 - t, 1.0)), 0.0)
    return a / (a + b)


@dataclass(frozen=True)
class SmearingProfile:
    """Symmetric plateau: 1 on ``[-R, R]``, 0 outside ``[-R-dR, R+dR]``,
    smooth (C-infinity) ramp in between."""

    R: float
    dR: float

    def __post_init__(self):
        if not 0.0 < self.dR < self.R:
            raise DomainError("need 0 < dR < R")

    @property
    def support(self) -> float:
        return self.R + self.dR

    def __call__(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return _smooth_step((self.R + self.dR - np.abs(u)) / self.dR)


@dataclass(frozen=True)
class CurrentModel:
    """Chiral current two-point kernel ``c / (u - u' + i eps)^power`` with
    ``power = 2`` (physical) or 4 (negative-control)."""

    c: float = 1.0
    components: int = 1
    power: int = 2

    def __post_init__(self):
        if self.c <= 0.0:
            raise DomainError("normalisation c must be positive")
        if self.power not in (2, 4):
            raise DomainError("kernel power must be 2 or 4")


def _profile_fft(profile: SmearingProfile, pts_per_ramp: int, pad: float):
    du = profile.dR / pts_per_ramp
    half = pad * profile.support
    n = int(2 ** np.ceil(np.log2(2.0 * half / du)))
    u = (np.arange(n) - n // 2) * du
    fhat = np.fft.rfft(profile(u)) * du
    p = 2.0 * np.pi * np.fft.rfftfreq(n, du)
    return p, np.abs(fhat) ** 2


def charge_fluctuation(
    profile: SmearingProfile,
    model: CurrentModel = CurrentModel(),
    pts_per_ramp: int = 20,
    pad: float = 16.0,
) -> float:
    """``||Q Omega||^2`` in momentum space:
    ``c int_0^inf p^(power-1) |fhat(p)|^2 dp``.

    The profile is sampled with ``pts_per_ramp`` points across the ramp (at
    least 16; fewer is a resolution error) on a window padded to ``pad``
    times the support so the oscillation ``sin(p R)`` is resolved on the
    momentum grid.
    """
    if pts_per_ramp < MIN_RAMP_POINTS:
        raise ResolutionError(
            f"ramp must carry at least {MIN_RAMP_POINTS} sample points"
        )
    p, fhat2 = _profile_fft(profile, pts_per_ramp, pad)
    integrand = p ** (model.power - 1) * fhat2
    return float(model.c * model.components * np.trapezoid(integrand, p))


def charge_fluctuation_position_space(
    profile: SmearingProfile,
    model: CurrentModel = CurrentModel(),
    n_ramp: int = 4000,
) -> float:
    """Position-space oracle ``(c/2) iint (f(u)-f(v))^2/(u-v)^2 du dv``.

    The double integral is decomposed exactly over plateau (A), ramps (B)
    and exterior (C): AA and CC vanish, the A-C and inner A/C integrals are
    analytic, and only the small B x B block needs a two-dimensional
    quadrature.  Only the ``power = 2`` kernel has this closed structure.
    """
    if model.power != 2:
        raise DomainError("position-space oracle implemented for the 1/u^2 kernel")
    R, dR = profile.R, profile.dR
    sup = profile.support
    ur = np.linspace(R, sup, n_ramp + 2)[1:-1]
    du = ur[1] - ur[0]
    fr = profile(ur)
    # u in A, v outside the support: inner integral 1/(sup-u) + 1/(sup+u)
    ac = 4.0 * np.log((sup + R) / (sup - R))
    # u in a ramp, v in the plateau: inner integral 1/(u-R) - 1/(u+R)
    ab = 4.0 * np.trapezoid((fr - 1.0) ** 2 * (1.0 / (ur - R) - 1.0 / (ur + R)), ur)
    # u in a ramp, v outside
    bc = 4.0 * np.trapezoid(fr ** 2 * (1.0 / (sup - ur) + 1.0 / (sup + ur)), ur)
    diff = fr[:, None] - fr[None, :]
    sep = ur[:, None] - ur[None, :]
    np.fill_diagonal(sep, 1.0)
    cell = diff * diff / (sep * sep)
    np.fill_diagonal(cell, 0.0)
    bb_same = 2.0 * cell.sum() * du * du
    opp = ur[:, None] + ur[None, :]
    bb_opp = 2.0 * np.sum(diff * diff / (opp * opp)) * du * du
    return float(0.5 * model.c * model.components * (ac + ab + bc + bb_same + bb_opp))


def _linear_fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Least squares ``y = a x + b``; returns (a, b, r2).  Constant input
    fits exactly with slope 0."""
    design = np.vstack([x, np.ones_like(x)]).T
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return 0.0, float(y.mean()), 1.0
    ss_res = float(np.sum((y - design @ coef) ** 2))
    return float(coef[0]), float(coef[1]), 1.0 - ss_res / ss_tot


def fit_log_law(kappas, values, r2_threshold: float = 0.999) -> dict:
    """Fit fluctuation values against ``ln kappa`` (``kappa = R/dR``) and
    against the power-law alternative ``ln F`` linear in ``ln kappa``."""
    kappas = np.asarray(kappas, dtype=float)
    values = np.asarray(values, dtype=float)
    slope, intercept, r2 = _linear_fit(np.log(kappas), values)
    exponent, _, r2_power = _linear_fit(np.log(kappas), np.log(values))
    return {
        "slope": slope,
        "intercept": intercept,
        "r2": r2,
        "r2_power_law": r2_power,
        "power_law_exponent": exponent,
        "verdict": "LOG_LAW" if r2 > r2_threshold else "NOT_LOG_LAW",
    }


def entropy_scaling_fit(
    R: float,
    dR_list,
    model: CurrentModel = CurrentModel(),
    r2_threshold: float = 0.999,
) -> dict:
    """Least-squares fit of the fluctuation against ``ln(R/dR)``.

    Returns slope, ``r2``, the fitted points and a verdict: LOG_LAW when the
    log fit explains the data (``r2 > 0.999``), otherwise NOT_LOG_LAW with
    the power-law exponent for comparison.  ``dR_list`` must span at least
    two decades.
    """
    dRs = np.asarray(sorted(dR_list, reverse=True), dtype=float)
    if dRs.max() / dRs.min() < 99.0:
        raise DomainError("dR_list must span at least two decades")
    vals = np.array([charge_fluctuation(SmearingProfile(R, d), model) for d in dRs])
    out = fit_log_law(R / dRs, vals, r2_threshold)
    out["points"] = [
        {"dR": float(d), "fluctuation": float(v)} for d, v in zip(dRs, vals)
    ]
    return out
