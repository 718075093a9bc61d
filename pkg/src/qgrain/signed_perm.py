"""Complex units, quaternions and Pauli operators as signed permutations.

On length-L bit strings these operators are L x L matrices with one +-1 entry
per row, so they are stored as (map, signs) pairs and applied in O(L):

    out[i] = signs[i] * s[map[i]]

The sign is applied after gathering; the block-matrix forms fix this
convention uniquely and ``to_dense`` reproduces them exactly.  The generators
are built from half- and quarter-size blocks, hence the divisibility
requirements: 2|L for j, sigma_x, sigma_z and 4|L for i, k, i_little,
sigma_y.
"""

from __future__ import annotations

import numpy as np

from .bitstring import BitString, concat, cyc, equivalent_mod_xi, iota, negate


class SignedPermutation:
    """A bijection on 0..L-1 together with a per-index sign."""

    __slots__ = ("_map", "_signs")

    def __init__(self, index_map: np.ndarray, signs: np.ndarray):
        index_map = np.asarray(index_map, dtype=np.int64).copy()
        signs = np.asarray(signs, dtype=np.int8).copy()
        if index_map.shape != signs.shape or index_map.ndim != 1:
            raise ValueError("map and signs must be 1-D of equal length")
        if not np.array_equal(np.sort(index_map), np.arange(index_map.size)):
            raise ValueError("map must be a bijection on 0..L-1")
        if not np.all((signs == 1) | (signs == -1)):
            raise ValueError("signs must be +1 or -1")
        index_map.flags.writeable = False
        signs.flags.writeable = False
        self._map = index_map
        self._signs = signs

    @property
    def index_map(self) -> np.ndarray:
        return self._map

    @property
    def signs(self) -> np.ndarray:
        return self._signs

    def __len__(self) -> int:
        return self._map.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return np.array_equal(self._map, other._map) and np.array_equal(
            self._signs, other._signs
        )

    def __hash__(self) -> int:
        return hash((self._map.tobytes(), self._signs.tobytes()))

    def __repr__(self) -> str:
        return f"SignedPermutation(map={self._map.tolist()}, signs={self._signs.tolist()})"

    def to_dense(self) -> np.ndarray:
        """Dense L x L matrix with M[i, map[i]] = signs[i]; test oracle only."""
        L = len(self)
        dense = np.zeros((L, L), dtype=np.int8)
        dense[np.arange(L), self._map] = self._signs
        return dense


def apply(a: SignedPermutation, s: BitString) -> BitString:
    """Operator action, equal to the dense matrix-vector product."""
    if len(a) != len(s):
        raise ValueError(f"operator length {len(a)} != string length {len(s)}")
    return BitString(a.signs * s.values[a.index_map])


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Operator product: apply(compose(a, b), s) == apply(a, apply(b, s))."""
    if len(a) != len(b):
        raise ValueError(f"operator lengths differ: {len(a)} != {len(b)}")
    return SignedPermutation(b.index_map[a.index_map], a.signs * b.signs[a.index_map])


def _require_divisible(L: int, d: int) -> None:
    if L < d or L % d:
        raise ValueError(f"operator needs {d} | L, got L={L}")


def identity_op(L: int) -> SignedPermutation:
    return SignedPermutation(np.arange(L), np.ones(L, dtype=np.int8))


def negation_op(L: int) -> SignedPermutation:
    """-1_L: identity map, all signs flipped."""
    return SignedPermutation(np.arange(L), -np.ones(L, dtype=np.int8))


def _j_parts(L: int) -> tuple[np.ndarray, np.ndarray]:
    # [[0, 1], [-1, 0]] on half-size blocks
    h = L // 2
    index_map = np.concatenate([np.arange(h) + h, np.arange(h)])
    signs = np.concatenate([np.ones(h, np.int8), -np.ones(h, np.int8)])
    return index_map, signs


def make_j(L: int) -> SignedPermutation:
    """j: swap halves, negating the second; j^2 = -1."""
    _require_divisible(L, 2)
    return SignedPermutation(*_j_parts(L))


def make_i(L: int) -> SignedPermutation:
    """i: block-diagonal (j_half, -j_half)."""
    _require_divisible(L, 4)
    jp, js = _j_parts(L // 2)
    return SignedPermutation(
        np.concatenate([jp, jp + L // 2]), np.concatenate([js, -js])
    )


def make_k(L: int) -> SignedPermutation:
    """k: off-diagonal (j_half | j_half); k = i * j."""
    _require_divisible(L, 4)
    jp, js = _j_parts(L // 2)
    return SignedPermutation(
        np.concatenate([jp + L // 2, jp]), np.concatenate([js, js])
    )


def make_ilittle(L: int) -> SignedPermutation:
    """Scalar complex unit: block-diagonal (j_half, j_half); commutes with sigma_z."""
    _require_divisible(L, 4)
    jp, js = _j_parts(L // 2)
    return SignedPermutation(
        np.concatenate([jp, jp + L // 2]), np.concatenate([js, js])
    )


def make_pauli_x(L: int) -> SignedPermutation:
    """sigma_x: swap halves."""
    _require_divisible(L, 2)
    h = L // 2
    return SignedPermutation(
        np.concatenate([np.arange(h) + h, np.arange(h)]), np.ones(L, np.int8)
    )


def make_pauli_y(L: int) -> SignedPermutation:
    """sigma_y: off-diagonal (-j_half | j_half)."""
    _require_divisible(L, 4)
    jp, js = _j_parts(L // 2)
    return SignedPermutation(
        np.concatenate([jp + L // 2, jp]), np.concatenate([-js, js])
    )


def make_pauli_z(L: int) -> SignedPermutation:
    """sigma_z: diagonal (+1 on the first half, -1 on the second)."""
    _require_divisible(L, 2)
    h = L // 2
    return SignedPermutation(
        np.arange(L),
        np.concatenate([np.ones(h, np.int8), -np.ones(h, np.int8)]),
    )


def verify_quaternion(L: int) -> bool:
    """i^2 = j^2 = k^2 = -1 and i*j = k, as exact operator equalities."""
    _require_divisible(L, 4)
    i, j, k = make_i(L), make_j(L), make_k(L)
    minus_one = negation_op(L)
    return (
        compose(i, i) == minus_one
        and compose(j, j) == minus_one
        and compose(k, k) == minus_one
        and compose(i, j) == k
    )


def verify_spin_identities(L: int) -> bool:
    """Cyclic shifts of block strings against Pauli actions on the equator string.

    The sigma_z and sigma_x identities hold bit-exactly in the canonical
    frame.  The sigma_y identity holds up to the global relabelling freedom
    (the two sides share one +1 multiset but differ pointwise), so it is
    compared as such.
    """
    _require_divisible(L, 4)
    equator = iota(L, L // 2)
    z_ok = cyc(iota(L, L), L // 2) == apply(make_pauli_z(L), equator)
    x_ok = cyc(equator, L // 2) == apply(make_pauli_x(L), equator)
    y_ok = equivalent_mod_xi(
        [cyc(equator, 3 * L // 4)], [apply(make_pauli_y(L), equator)]
    )
    return z_ok and x_ok and y_ok


def self_similar_split(L: int) -> bool:
    """Half-size self-similarity of the equator codeword.

    The shift-by-L/2 image of the equator string equals sigma_x applied to
    the concatenation of a half-size block image with its negation.  The
    identity holds bit-exactly in the canonical frame.
    """
    _require_divisible(L, 8)
    h = L // 2
    lhs = cyc(iota(L, h), h)
    inner = apply(make_pauli_z(h), iota(h, L // 4))
    rhs = apply(make_pauli_x(L), concat(inner, negate(inner)))
    return lhs == rhs
