"""The Zamolodchikov-Faddeev algebra as a rewriting system.

Words in Z and Z* are normal ordered by the exchange rules; ordered
n-particle states absorb an extra creator at the slot its rapidity dictates,
at the price of a grazing-shot product of S-factors; vacuum contractions of
annihilators against creators factorize into combinatorial products of
two-particle amplitudes.
"""

from wedgebench import scatfunc, zf

print("== the exchange rule, symbolically")
expr = zf.normal_order([zf.annihilator("t"), zf.creator("u")])
print(f"  Z(t) Z*(u)  =  {expr}")

shg = scatfunc.sinh_gordon(0.4)
print("\n== grazing shot: inserting a creator into an ordered state")
state = zf.ParticleState((2.0, 1.0))
for theta in (3.0, 1.5, 0.3):
    factor, new = zf.apply_creator(shg, theta, state)
    print(
        f"  Z*({theta}) on {state.rapidities} -> state {new.rapidities}, "
        f"factor through {factor.slot} rapidities = {factor.value:.6f}"
    )

print("\n== annihilator contact terms (symbolic sum over slots)")
print(" ", zf.apply_annihilator(shg, 0.4, zf.ParticleState((2.0, 1.0, -0.3))))

print("\n== S-matrix pairings <out|in> for the Ising model, out = in = (2, 1)")
pairings = zf.smatrix_element(
    scatfunc.ising(), zf.ParticleState((2.0, 1.0), "out"), zf.ParticleState((2.0, 1.0), "in")
)
for perm, coeff in sorted(pairings.items()):
    kind = "parallel" if perm == (0, 1) else "crossed"
    print(f"  pairing {perm} ({kind}): weight {coeff:.0f}")
