"""Complex units and Pauli matrices as O(L) permutation/negation kernels.

The quaternion triple (i, j, k) and the Pauli triple act on length-L strings
as signed permutations, so a single gather realises the full matrix action.
This script prints the dense forms at L = 4, checks the multiplication
table, and times the kernels on a megabit string.
"""

import time

import numpy as np

from qgrain import (
    BitString,
    apply,
    compose,
    make_i,
    make_ilittle,
    make_j,
    make_k,
    make_pauli_x,
    make_pauli_y,
    make_pauli_z,
    negation_op,
    self_similar_split,
    verify_quaternion,
    verify_spin_identities,
)

print("== dense forms at L = 4 ==")
for name, op in [("i", make_i(4)), ("j", make_j(4)), ("k", make_k(4))]:
    print(f"{name} =")
    print(op.to_dense())

print()
print("== quaternion table ==")
i, j, k = make_i(4), make_j(4), make_k(4)
print("i*i == j*j == k*k == -1:", compose(i, i) == compose(j, j) == compose(k, k) == negation_op(4))
print("i*j == k:", compose(i, j) == k)
print("scalar unit times sigma_z gives i:", compose(make_ilittle(4), make_pauli_z(4)) == i)

print()
print("== identity checks across granularities ==")
for L in (8, 16, 64, 256):
    print(
        f"L={L:4d}: quaternion {verify_quaternion(L)}, "
        f"spin {verify_spin_identities(L)}, split {self_similar_split(L)}"
    )

print()
print("== a gather is all it takes: timings at L = 2^20 ==")
L = 1 << 20
s = BitString(np.where(np.arange(L) % 3 == 0, 1, -1).astype(np.int8))
for name, factory in [("sigma_x", make_pauli_x), ("sigma_y", make_pauli_y), ("j", make_j)]:
    op = factory(L)
    times = []
    for _ in range(5):
        t0 = time.perf_counter()
        apply(op, s)
        times.append(time.perf_counter() - t0)
    print(f"{name:8s}: {min(times) * 1e3:6.2f} ms")
