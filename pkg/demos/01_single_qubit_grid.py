"""Tour of the single-qubit grid.

A granularity-L qubit stores its Born weight as m/L and its phase as a
fraction n/L of a full turn.  This walk-through quantises a few continuum
states, shows the exact round trip, and coarsens a state step by step down
to the classical limit L = 1.
"""

import math

from qgrain import (
    DiscretisedQubit,
    coarsen,
    complementarity_conflict,
    niven_admissible,
    phi_of,
    quantise,
    theta_of,
)

print("== quantising continuum angles onto the L = 16 grid ==")
for theta, phi in [(math.pi / 3, math.pi / 4), (0.7, 2.0), (math.pi / 2, math.pi)]:
    q = quantise(theta, phi, 16)
    print(
        f"theta={theta:.4f} phi={phi:.4f}  ->  (m={q.m:2d}, n={q.n:2d}, L={q.L})"
        f"  ->  theta={theta_of(q):.4f} phi={phi_of(q):.4f}"
    )

print()
print("== grid states survive the angle round trip exactly ==")
q = DiscretisedQubit(m=12, n=2, L=16)
assert quantise(theta_of(q), phi_of(q), 16) == q
print(f"{q} -> angles -> {quantise(theta_of(q), phi_of(q), 16)}")

print()
print("== state reduction: coarsening the grid one power of two at a time ==")
q = DiscretisedQubit(m=11, n=5, L=64)
print(f"start   (m={q.m}, n={q.n}, L={q.L})  weight={q.born_weight}")
for L_new in (32, 16, 8, 4, 2, 1):
    q = coarsen(q, L_new)
    print(f"L={L_new:3d} ->  (m={q.m}, n={q.n})  weight={q.born_weight}")
print("the L = 1 endpoint is a measurement eigenstate")

print()
print("== rational cosines whose angle is also rational in pi ==")
for c in ("0", "1/2", "-1/2", "1", "-1", "1/3", "3/5"):
    print(f"cos = {c:>4}: {'admissible' if niven_admissible(c) else 'not admissible'}")

print()
print("== complementarity as a number-theoretic obstruction ==")
for m, L in [(4, 8), (3, 8), (3, 4)]:
    verdict = "conflict" if complementarity_conflict(DiscretisedQubit(m, 0, L)) else "compatible"
    print(f"wave-like (m={m}, L={L}): cos(phi) = {2 * m - L}/{L} -> {verdict}")
