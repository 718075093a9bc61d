"""How many qubits fit in L bits apiece?

An N-qubit state in nested normalised form has 2 + 4 + ... + 2^N =
2^(N+1) - 2 real degrees of freedom, while N strings of L bits hold L*N
bits.  Once the former outgrows the latter there is not even one bit per
degree of freedom, and n_max(L) is the last N before that happens.
"""

from qgrain import capacity_deficient, dof_count, n_max

print("== bookkeeping at L = 16 ==")
print(f"{'N':>3} {'dof':>12} {'bits':>8}  enough?")
for N in range(1, 9):
    dof = dof_count(N)
    bits = 16 * N
    print(f"{N:>3} {dof:>12} {bits:>8}  {'no' if capacity_deficient(N, 16) else 'yes'}")
print(f"n_max(16) = {n_max(16)}")

print()
print("== the bound grows like log2 L plus a slowly growing correction ==")
print(f"{'L':>10} {'n_max':>7} {'log2 L':>8}")
for k in (4, 10, 20, 40, 100, 200, 640):
    L = 1 << k
    print(f"2**{k:<7} {n_max(L):>7} {k:>8}")

print()
print("== classical limit ==")
print(f"n_max(1) = {n_max(1)}  (a single classical bit budget carries no qubit)")
print(f"n_max(2) = {n_max(2)}")
