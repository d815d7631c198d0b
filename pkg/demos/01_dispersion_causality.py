"""Causality and the dispersion relation, end to end.

A boundary value of a function analytic in the upper half frequency plane
has a transform supported at positive times, and its real and imaginary
parts are Hilbert transforms of each other.  Both statements are checked on
the Lorentzian pair Re a = -w/(w^2+1), Im a = 1/(w^2+1), then broken on
purpose by conjugating the amplitude and by adding a constant.
"""

import numpy as np

from wedgebench import GridFunction, causality_residual, dispersion_residual, kk_real_from_imag

w = np.linspace(-50.0, 50.0, 4096)
amplitude = GridFunction(1.0 / (-w - 1j), -50.0, 50.0)

print("== time-support test (Titchmarsh signature)")
for label, samples in [("causal", amplitude.samples), ("conjugated", np.conj(amplitude.samples))]:
    rep = causality_residual(amplitude.with_samples(samples))
    print(f"  {label:11s}: negative-time fraction {rep.negative_fraction:.2e} -> {rep.verdict}")

print("\n== Kramers-Kronig reconstruction of Re a from Im a")
kk = kk_real_from_imag(GridFunction(amplitude.samples.imag, -50.0, 50.0))
lo, hi = kk.meta["interior"]
err = np.abs(kk.samples.real[lo:hi] + w[lo:hi] / (w[lo:hi] ** 2 + 1)).max()
print(f"  max defect on the trusted interior window: {err:.2e}")

print("\n== a constant offset is invisible to Im a: one subtraction repairs it")
shifted = amplitude.with_samples(amplitude.samples + 1.0)
print(f"  unsubtracted residual : {dispersion_residual(shifted, 0):.3f}")
print(f"  once-subtracted at 0  : {dispersion_residual(shifted, 1, 0.0):.2e}")
