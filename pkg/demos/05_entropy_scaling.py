"""Localization entropy scaling from the partial-charge fluctuation.

Smearing a conserved chiral charge over a plateau of half-width R with a
smooth edge of width dR gives a vacuum fluctuation that diverges
logarithmically as the edge sharpens: fluctuation ~ ln(R/dR).  A quartic
kernel (negative control) grows like a power instead, and the fit says so.
"""

import numpy as np

from wedgebench import localization as loc

R = 1.0
dRs = np.geomspace(1e-2, 1e-4, 9)

fit = loc.entropy_scaling_fit(R, dRs)
print("   R/dR      fluctuation")
for row in fit["points"]:
    print(f"  {R/row['dR']:8.0f}   {row['fluctuation']:.4f}")
print(f"\nlog-law fit: slope {fit['slope']:.4f}, r^2 = {fit['r2']:.7f} -> {fit['verdict']}")

print("\n== momentum-space vs position-space evaluation (internal oracle)")
for kappa in (100.0, 300.0):
    prof = loc.SmearingProfile(R, R / kappa)
    vm = loc.charge_fluctuation(prof)
    vp = loc.charge_fluctuation_position_space(prof)
    print(f"  R/dR = {kappa:5.0f}: momentum {vm:.4f}, position {vp:.4f}, rel {abs(vm-vp)/vp:.2%}")

control = loc.entropy_scaling_fit(R, dRs, loc.CurrentModel(power=4), r2_threshold=0.99)
print(
    f"\nquartic-kernel control: log r^2 = {control['r2']:.3f} -> {control['verdict']}, "
    f"power-law exponent {control['power_law_exponent']:.2f} (r^2 = {control['r2_power_law']:.6f})"
)
