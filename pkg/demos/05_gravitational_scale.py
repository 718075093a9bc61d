"""From mass and separation to a granularity scale.

Equating the tick count of grid reduction, (L - 1) t_P, with the
Diosi-Penrose collapse time hbar / E_G gives L = ceil(E_P / E_G).  For an
electron-mass qubit split over 5 nm the self-energy is minuscule, the
collapse time absurdly long, and L astronomically large; entangling more
qubits raises the effective mass and shrinks L as its eleventh power.
"""

from decimal import Decimal

from qgrain import Scenario, reduction_after, scenario_report, sn_radius

M = Decimal("1e-30")
b = Decimal("5e-9")

print("== a single electron-mass qubit over 5 nm ==")
print(f"Schroedinger-Newton radius R = {float(sn_radius(M)):.3e} m  (b/R is tiny)")
rep = scenario_report(Scenario(M=M, b=b))
print(f"E_G     = {float(rep.E_G.log10()):+.2f}  (log10 J)")
print(f"tau_DP  = {float(rep.tau_DP.log10()):+.2f}  (log10 s)")
print(f"log10 L = {rep.log10_L:.2f}   log2 L = {rep.log2_L:.2f}")
print(f"n_max   = {rep.n_max}")

print()
print("== entangled composites: effective mass k*M ==")
print(f"{'k':>9} {'log10 E_G':>10} {'log10 tau':>10} {'log10 L':>9} {'n_max':>6}")
for k in (1, 64, 640, 10**6):
    r = scenario_report(Scenario(M=M, b=b, qubit_multiplier=k))
    print(
        f"{k:>9} {float(r.E_G.log10()):>10.2f} "
        f"{float(r.tau_DP.log10()):>10.2f} {r.log10_L:>9.2f} {r.n_max:>6}"
    )

print()
print("== reduction is glacial: one grid unit per Planck tick ==")
L0 = rep.L
gigayear = Decimal("3.156e16")
left = reduction_after(L0, gigayear)
print(f"after 1 billion years L drops by about 10^{len(str(L0 - left)) - 1},")
print(f"a negligible slice of the initial 10^{len(str(L0)) - 1}")
