"""Shared numerical primitives: sampled functions, principal-value quadrature
and Fourier support splitting.

Everything here operates on uniformly sampled functions of one real variable.
Principal values are handled by singularity subtraction (subtract the value at
the singular point, integrate the smooth remainder, add the analytic log
term); grid-point exclusion converges too slowly to be useful at the
tolerances the causality checks demand.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, SizeError

__all__ = [
    "GridFunction",
    "AnalyticSampler",
    "pv_integral",
    "pv_integral_batch",
    "fourier_support_split",
    "simpson_weights",
    "gauss_legendre",
]


@lru_cache(maxsize=32)
def gauss_legendre(n: int) -> tuple:
    """Cached Gauss-Legendre nodes and weights on ``[-1, 1]`` (the solver
    behind ``leggauss`` is expensive for large orders)."""
    x, w = np.polynomial.legendre.leggauss(int(n))
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def simpson_weights(n: int, h: float) -> np.ndarray:
    """Composite Simpson quadrature weights on a uniform grid.

    Odd ``n`` is the classic rule; even ``n`` closes the last three
    intervals with the 3/8 rule so the composite stays exact for cubics.
    """
    if n < 3:
        raise SizeError("Simpson weights need n >= 3")
    if n % 2 == 1:
        w = np.full(n, 2.0)
        w[1::2] = 4.0
        w[0] = w[-1] = 1.0
        return w * h / 3.0
    if n == 4:
        return np.array([1.0, 3.0, 3.0, 1.0]) * 3.0 * h / 8.0
    w = np.zeros(n)
    w[: n - 3] += simpson_weights(n - 3, h)
    w[n - 4:] += np.array([1.0, 3.0, 3.0, 1.0]) * 3.0 * h / 8.0
    return w


@dataclass(frozen=True)
class GridFunction:
    """A complex-valued function sampled on a uniform grid.

    Parameters
    ----------
    samples :
        Complex (or real) values at ``n`` uniformly spaced abscissae.
    x_min, x_max :
        First and last abscissa; ``x_max > x_min`` and ``n >= 2``.
    meta :
        Free-form result metadata (trust windows, warnings).  Not part of
        value equality.
    """

    samples: np.ndarray
    x_min: float
    x_max: float
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        if samples.ndim != 1 or samples.size < 2:
            raise SizeError("GridFunction needs a 1-d array with n >= 2 samples")
        if not self.x_max > self.x_min:
            raise DomainError("GridFunction needs x_max > x_min")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n)

    @classmethod
    def from_callable(cls, fn, x_min, x_max, n, **meta) -> "GridFunction":
        x = np.linspace(x_min, x_max, n)
        return cls(np.asarray(fn(x), dtype=complex), float(x_min), float(x_max), dict(meta))

    def with_samples(self, samples, **meta) -> "GridFunction":
        merged = dict(self.meta)
        merged.update(meta)
        return GridFunction(samples, self.x_min, self.x_max, merged)

    def value_at(self, x0: float) -> complex:
        """Value at ``x0`` by local cubic (4-point Lagrange) interpolation.

        ``x0`` within half a grid step of a node returns the node value.
        """
        h = self.h
        t = (x0 - self.x_min) / h
        i = int(round(t))
        if i < 0 or i >= self.n:
            raise DomainError(f"x0={x0} outside grid [{self.x_min}, {self.x_max}]")
        if abs(t - i) < 1e-9:
            return complex(self.samples[i])
        lo = min(max(int(np.floor(t)) - 1, 0), self.n - 4)
        xs = self.x[lo:lo + 4]
        ys = self.samples[lo:lo + 4]
        val = 0.0 + 0.0j
        for j in range(4):
            w = 1.0
            for k in range(4):
                if k != j:
                    w *= (x0 - xs[k]) / (xs[j] - xs[k])
            val += w * ys[j]
        return val

    # -- CSV interchange: `x,re` (real) or `x,re,im` (complex), header required --

    def to_csv(self, path_or_buf) -> None:
        is_complex = bool(np.any(self.samples.imag != 0.0))
        close = False
        if isinstance(path_or_buf, (str, bytes)):
            fh = open(path_or_buf, "w", newline="")
            close = True
        else:
            fh = path_or_buf
        try:
            w = csv.writer(fh)
            if is_complex:
                w.writerow(["x", "re", "im"])
                for x, s in zip(self.x, self.samples):
                    w.writerow([repr(float(x)), repr(float(s.real)), repr(float(s.imag))])
            else:
                w.writerow(["x", "re"])
                for x, s in zip(self.x, self.samples):
                    w.writerow([repr(float(x)), repr(float(s.real))])
        finally:
            if close:
                fh.close()

    @classmethod
    def from_csv(cls, path_or_buf) -> "GridFunction":
        close = False
        if isinstance(path_or_buf, (str, bytes)):
            fh = open(path_or_buf, "r", newline="")
            close = True
        else:
            fh = path_or_buf
        try:
            rows = list(csv.reader(fh))
        finally:
            if close:
                fh.close()
        if not rows:
            raise SizeError("empty CSV")
        header = [c.strip().lower() for c in rows[0]]
        if header not in (["x", "re"], ["x", "re", "im"]):
            raise DomainError(f"CSV header must be 'x,re' or 'x,re,im', got {rows[0]!r}")
        data = np.array([[float(c) for c in row] for row in rows[1:] if row], dtype=float)
        if data.shape[0] < 2:
            raise SizeError("CSV needs at least two rows of samples")
        x = data[:, 0]
        hs = np.diff(x)
        if hs.min() <= 0 or abs(hs.max() - hs.min()) > 1e-9 * max(abs(hs.max()), 1.0):
            raise DomainError("CSV abscissae must be uniform and increasing")
        samples = data[:, 1] + (1j * data[:, 2] if data.shape[1] == 3 else 0.0)
        return cls(samples, float(x[0]), float(x[-1]))

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


@dataclass(frozen=True)
class AnalyticSampler:
    """Closed-form evaluator of one complex variable with a declared
    analyticity strip ``im_min <= Im z <= im_max``.

    Evaluation inside the declared strip must never signal a domain error;
    this is the carrier for strip-analytic wave functions and scattering
    functions.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    im_min: float = -np.inf
    im_max: float = np.inf
    label: str = ""

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        im = z.imag
        tol = 1e-12
        if np.any(im < self.im_min - tol) or np.any(im > self.im_max + tol):
            raise DomainError(
                f"evaluation off the declared strip [{self.im_min}, {self.im_max}]"
            )
        return self.fn(z)

    @classmethod
    def gaussian(cls, center=0.0, width=1.0, amplitude=1.0, label="gaussian"):
        """Entire Gaussian ``A exp(-(z-c)^2 / (2 w^2))``; any strip is valid."""
        c, w, a = complex(center), float(width), complex(amplitude)
        return cls(lambda z: a * np.exp(-((z - c) ** 2) / (2.0 * w * w)), label=label)


def pv_integral(f: GridFunction, omega: float) -> float:
    """Principal value of ``\\int f(x) / (omega - x) dx`` over the grid.

    The singularity is subtracted: the smooth remainder
    ``(f(x) - f(omega)) / (omega - x)`` is integrated with Simpson's rule and
    the analytic log term ``f(omega) * ln((omega - x_min)/(x_max - omega))``
    is added back.  ``omega`` may sit between grid points; ``f(omega)`` is then
    interpolated locally.

    Returns the real part for real-valued ``f``; complex samples give the
    complex PV integral and the caller takes what it needs.
    """
    x = f.x
    if not (f.x_min < omega < f.x_max):
        raise DomainError(f"omega={omega} must lie strictly inside the grid")
    h = f.h
    t = (omega - f.x_min) / h
    i = int(round(t))
    on_node = abs(t - i) < 1e-9 and 0 <= i < f.n
    f_om = complex(f.samples[i]) if on_node else f.value_at(omega)

    g = np.empty(f.n, dtype=complex)
    denom = omega - x
    if on_node:
        mask = np.ones(f.n, dtype=bool)
        mask[i] = False
        g[mask] = (f.samples[mask] - f_om) / denom[mask]
        # removable point: limit is -f'(omega)
        if 0 < i < f.n - 1:
            g[i] = -(f.samples[i + 1] - f.samples[i - 1]) / (2.0 * h)
        else:
            g[i] = 0.0
    else:
        g[:] = (f.samples - f_om) / denom
    log_term = np.log(abs((omega - f.x_min) / (f.x_max - omega)))
    val = np.dot(simpson_weights(f.n, h), g) + f_om * log_term
    if np.all(f.samples.imag == 0.0):
        return float(val.real)
    return val


def pv_integral_batch(f: GridFunction, indices: np.ndarray) -> np.ndarray:
    """`pv_integral` evaluated at many grid nodes at once.

    Identical quadrature to the scalar entry point (same Simpson weights,
    same removable-point treatment), blocked so the dense
    ``(targets, samples)`` kernel stays cache friendly.
    """
    x = f.x
    h = f.h
    n = f.n
    idx = np.asarray(indices, dtype=int)
    if np.any(idx <= 0) or np.any(idx >= n - 1):
        raise DomainError("batch targets must be interior grid nodes")
    w = simpson_weights(n, h)
    fs = f.samples
    deriv = (fs[idx + 1] - fs[idx - 1]) / (2.0 * h)
    out = np.empty(idx.size, dtype=complex)
    log_term = np.log(np.abs((x[idx] - f.x_min) / (f.x_max - x[idx])))
    for start in range(0, idx.size, 256):
        blk = idx[start:start + 256]
        denom = x[blk, None] - x[None, :]
        rows = np.arange(blk.size)
        denom[rows, blk] = 1.0
        g = (fs[None, :] - fs[blk, None]) / denom
        g[rows, blk] = -deriv[start:start + 256]
        out[start:start + 256] = g @ w
    out += fs[idx] * log_term
    if np.all(fs.imag == 0.0):
        return out.real
    return out


def fourier_support_split(f: GridFunction) -> tuple[float, float]:
    """Squared norms of the positive- and negative-time halves of the DFT.

    The spectrum is transported to the time domain with the ``e^{+i omega t}``
    transform convention, so a boundary value of a function analytic in the
    upper half plane concentrates at ``t > 0``.  Time samples are placed on
    the half-integer grid ``t_j = (j + 1/2) dt``: the support boundary then
    falls exactly at ``t = 0`` and the spectral weight of the ``t = 0`` bin is
    split evenly between the two halves by construction (a real even input
    yields exactly equal halves).

    Returns
    -------
    (positive_time_norm, negative_time_norm) :
        Their sum equals the discrete Parseval norm ``sum |f_k|^2`` exactly.
    """
    n = f.n
    if n < 4:
        raise SizeError("fourier_support_split needs n >= 4")
    k = np.arange(n)
    # half-bin phase shift realises t_j = (j + 1/2) dt
    shifted = f.samples * np.exp(-1j * np.pi * k / n)
    spec = np.abs(np.fft.fft(shifted)) ** 2 / n
    n_pos = n // 2
    positive = float(spec[:n_pos].sum())
    negative = float(spec[n_pos:].sum())
    return positive, negative
