"""Nested N-qubit states as N correlated length-L bit strings.

An N-qubit state in normalised product form is a depth-N binary tree of
(theta, phi) pairs: node k (heap indexing, children 2k and 2k+1) carries the
conditional qubit of its branch.  Encoding maps the tree onto N strings of L
bits each: string d concatenates, in node order, one codeword per depth-d
node, where a node's segment length equals the +1 count (m) or -1 count of
its parent segment.  Zero-length segments are absent branches; length-1
segments are classical bits (m in {0, 1}, n = 0).

Capacity counting: the N strings hold L*N bits while the state has
2^(N+1) - 2 real degrees of freedom, which bounds the usable qubit number
``n_max(L)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .bitstring import BitString, NotCodewordError
from .qubit import TWO_PI

_MASK64 = (1 << 64) - 1
_MAX_DENSE_DEPTH = 24


def dof_count(N: int) -> int:
    """Real degrees of freedom of an N-qubit state: 2 + 4 + ... + 2^N = 2^(N+1) - 2."""
    if N < 1:
        raise ValueError(f"qubit count must be >= 1, got {N}")
    return (1 << (N + 1)) - 2


def capacity_deficient(N: int, L: int) -> bool:
    """True iff N length-L strings cannot give each degree of freedom one bit."""
    if L < 1:
        raise ValueError(f"granularity L must be >= 1, got {L}")
    return dof_count(N) > L * N


def n_max(L: int) -> int:
    """Largest N >= 1 with 2^(N+1) - 2 <= L*N, or 0 if none.

    The feasible set is the interval 1..n_max, so an incremental scan is
    exact; arbitrarily large L is fine (everything is big-int arithmetic).
    """
    if L < 1:
        raise ValueError(f"granularity L must be >= 1, got {L}")
    N = 0
    while not capacity_deficient(N + 1, L):
        N += 1
    return N


@dataclass(frozen=True)
class AngleTree:
    """Depth-N tree of continuum (theta, phi) pairs, heap-indexed from 1.

    Arrays have size 2^depth with slot 0 unused; node k has children 2k and
    2k + 1, so the depth-d nodes are indices 2^(d-1) .. 2^d - 1.
    """

    depth: int
    thetas: np.ndarray
    phis: np.ndarray

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")
        size = 1 << self.depth
        if self.thetas.shape != (size,) or self.phis.shape != (size,):
            raise ValueError(f"angle arrays must have shape ({size},)")

    @classmethod
    def from_nodes(cls, depth: int, pairs: Sequence[tuple[float, float]]) -> "AngleTree":
        """Build from (theta, phi) pairs listed for nodes 1 .. 2^depth - 1."""
        size = 1 << depth
        if len(pairs) != size - 1:
            raise ValueError(f"need {size - 1} nodes for depth {depth}")
        thetas = np.zeros(size)
        phis = np.zeros(size)
        for k, (theta, phi) in enumerate(pairs, start=1):
            thetas[k] = theta
            phis[k] = phi
        return cls(depth, thetas, phis)


def random_angle_tree(depth: int, rng: np.random.Generator) -> AngleTree:
    """Random tree with cos^2(theta/2) uniform on [0, 1] and phi uniform on [0, 2pi)."""
    size = 1 << depth
    draws = rng.random((size - 1, 2))
    thetas = np.zeros(size)
    phis = np.zeros(size)
    thetas[1:] = 2.0 * np.arccos(np.sqrt(draws[:, 0]))
    phis[1:] = TWO_PI * draws[:, 1]
    return AngleTree(depth, thetas, phis)


@dataclass(frozen=True, eq=False)
class NestedState:
    """Quantised tree: per node k the integers (m_k, n_k) at segment length l_k.

    l_1 = L, l_2k = m_k and l_2k+1 = l_k - m_k.  Heap layout as in AngleTree.
    Degenerate nodes (m in {0, l}) carry n = 0 since their phase never
    reaches the strings.
    """

    depth: int
    L: int
    m: np.ndarray
    n: np.ndarray
    lengths: np.ndarray

    def __post_init__(self):
        size = 1 << self.depth
        for name, arr in (("m", self.m), ("n", self.n), ("lengths", self.lengths)):
            if arr.shape != (size,):
                raise ValueError(f"{name} must have shape ({size},)")
        if self.lengths[1] != self.L:
            raise ValueError("root segment length must equal L")

    def __eq__(self, other) -> bool:
        if not isinstance(other, NestedState):
            return NotImplemented
        return (
            self.depth == other.depth
            and self.L == other.L
            and np.array_equal(self.m, other.m)
            and np.array_equal(self.n, other.n)
            and np.array_equal(self.lengths, other.lengths)
        )

    @property
    def degenerate_mask(self) -> np.ndarray:
        """Boolean heap array marking nodes with m in {0, l} (l > 0)."""
        return (self.lengths > 0) & ((self.m == 0) | (self.m == self.lengths))

    def level_slice(self, d: int) -> slice:
        return slice(1 << (d - 1), 1 << d)


def _quantise_level(
    lengths: np.ndarray, thetas: np.ndarray, phis: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    # Vector form of qubit.quantise with the same half-down tie rule.
    weight = np.cos(thetas / 2.0) ** 2
    m = np.ceil(lengths * weight - 0.5).astype(np.int64)
    m = np.clip(m, 0, lengths)
    safe = np.maximum(lengths, 1)
    frac = np.mod(phis, TWO_PI) / TWO_PI
    n = np.mod(np.ceil(lengths * frac - 0.5).astype(np.int64), safe)
    n[(lengths == 0) | (m == 0) | (m == lengths)] = 0
    return m, n


def _level_codeword(lengths: np.ndarray, m: np.ndarray, n: np.ndarray) -> np.ndarray:
    # Concatenated per-segment codewords cyc(iota(l, m), l//2 + n); O(total).
    total = int(lengths.sum())
    starts = np.concatenate(([0], np.cumsum(lengths)))[:-1]
    local = np.arange(total, dtype=np.int64) - np.repeat(starts, lengths)
    len_r = np.repeat(lengths, lengths)
    offset = (len_r // 2 + np.repeat(n, lengths)) % len_r
    plus = ((local + offset) % len_r) < np.repeat(m, lengths)
    return np.where(plus, 1, -1).astype(np.int8)


def _decode_level(values: np.ndarray, lengths: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Per-segment inversion of _level_codeword; raises on non-codewords.
    starts = np.concatenate(([0], np.cumsum(lengths)))[:-1]
    ends = starts + lengths
    plus = values == 1
    plus_cum = np.concatenate(([0], np.cumsum(plus)))
    m = (plus_cum[ends] - plus_cum[starts]).astype(np.int64)

    local = np.arange(values.size, dtype=np.int64) - np.repeat(starts, lengths)
    len_r = np.repeat(lengths, lengths)
    prev = np.repeat(starts, lengths) + (local - 1) % len_r
    is_start = plus & ~plus[prev]
    start_cum = np.concatenate(([0], np.cumsum(is_start)))
    counts = start_cum[ends] - start_cum[starts]
    if not np.array_equal(counts, ((m > 0) & (m < lengths)).astype(counts.dtype)):
        raise NotCodewordError("segment is not a cyclic shift of a contiguous +1 block")

    n = np.zeros_like(m)
    idx = np.flatnonzero(is_start)
    seg = np.searchsorted(starts, idx, side="right") - 1
    seg_len = lengths[seg]
    offset = (-(idx - starts[seg])) % seg_len
    n[seg] = (offset - seg_len // 2) % seg_len
    return m, n


def encode_nested(tree: AngleTree, L: int) -> tuple[list[BitString], NestedState]:
    """Quantise a depth-N tree at granularity L and emit its N strings."""
    if L < 2 or L % 2:
        raise ValueError(f"encoding requires even granularity >= 2, got L={L}")
    N = tree.depth
    size = 1 << N
    m = np.zeros(size, dtype=np.int64)
    n = np.zeros(size, dtype=np.int64)
    lengths = np.zeros(size, dtype=np.int64)
    lengths[1] = L
    strings = []
    for d in range(1, N + 1):
        lo, hi = 1 << (d - 1), 1 << d
        level_len = lengths[lo:hi]
        md, nd = _quantise_level(level_len, tree.thetas[lo:hi], tree.phis[lo:hi])
        m[lo:hi] = md
        n[lo:hi] = nd
        if d < N:
            lengths[2 * lo : 2 * hi : 2] = md
            lengths[2 * lo + 1 : 2 * hi : 2] = level_len - md
        strings.append(BitString(_level_codeword(level_len, md, nd)))
    return strings, NestedState(N, L, m, n, lengths)


def decode_nested(strings: Sequence[BitString]) -> NestedState:
    """Invert ``encode_nested``: recover every (m_k, n_k, l_k) by conditional counting."""
    if not strings:
        raise ValueError("need at least one string")
    N = len(strings)
    L = len(strings[0])
    if any(len(s) != L for s in strings):
        raise ValueError("all strings must share one length")
    size = 1 << N
    m = np.zeros(size, dtype=np.int64)
    n = np.zeros(size, dtype=np.int64)
    lengths = np.zeros(size, dtype=np.int64)
    lengths[1] = L
    for d in range(1, N + 1):
        lo, hi = 1 << (d - 1), 1 << d
        level_len = lengths[lo:hi]
        md, nd = _decode_level(strings[d - 1].values, level_len)
        m[lo:hi] = md
        n[lo:hi] = nd
        if d < N:
            lengths[2 * lo : 2 * hi : 2] = md
            lengths[2 * lo + 1 : 2 * hi : 2] = level_len - md
    return NestedState(N, L, m, n, lengths)


def amplitudes(state: NestedState) -> np.ndarray:
    """Dense 2^N state vector of the quantised tree.

    Along the path to a basis index, a + branch multiplies by
    sqrt(m_k / l_k) and a - branch by sqrt(1 - m_k / l_k) * e^(2 pi i n_k / l_k);
    absent branches (l_k = 0) contribute amplitude zero.
    """
    if state.depth > _MAX_DENSE_DEPTH:
        raise ValueError(f"dense amplitudes limited to depth {_MAX_DENSE_DEPTH}")
    vec = np.ones(1, dtype=np.complex128)
    for d in range(1, state.depth + 1):
        sl = state.level_slice(d)
        lengths = state.lengths[sl]
        live = lengths > 0
        safe = np.maximum(lengths, 1)
        weight = np.where(live, state.m[sl] / safe, 0.0)
        cos_half = np.sqrt(weight)
        sin_half = np.sqrt(np.where(live, 1.0 - weight, 0.0))
        phase = np.exp(2j * np.pi * np.where(live, state.n[sl] / safe, 0.0))
        nxt = np.empty(2 * vec.size, dtype=np.complex128)
        nxt[0::2] = vec * cos_half
        nxt[1::2] = vec * sin_half * phase
        vec = nxt
    return vec


def amplitudes_of_tree(tree: AngleTree) -> np.ndarray:
    """Dense 2^N state vector of the continuum tree (the exact reference)."""
    if tree.depth > _MAX_DENSE_DEPTH:
        raise ValueError(f"dense amplitudes limited to depth {_MAX_DENSE_DEPTH}")
    vec = np.ones(1, dtype=np.complex128)
    for d in range(1, tree.depth + 1):
        lo, hi = 1 << (d - 1), 1 << d
        half = tree.thetas[lo:hi] / 2.0
        phase = np.exp(1j * tree.phis[lo:hi])
        nxt = np.empty(2 * vec.size, dtype=np.complex128)
        nxt[0::2] = vec * np.cos(half)
        nxt[1::2] = vec * np.sin(half) * phase
        vec = nxt
    return vec


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """Squared overlap |<a|b>|^2."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"state vectors differ in shape: {a.shape} vs {b.shape}")
    return float(abs(np.vdot(a, b)) ** 2)


class SaturationRow(NamedTuple):
    N: int
    median_fidelity: float
    p10_fidelity: float
    min_segment_len: int


def saturation_experiment(
    L: int,
    n_min: int,
    n_max_arg: int,
    samples: int,
    seed: int,
) -> list[SaturationRow]:
    """Fidelity of random trees after encode/decode, swept over qubit number.

    For each N, draws ``samples`` random trees (sub-seed = seed XOR sample
    index, one fresh generator per draw, so the output is independent of
    evaluation order), quantises at granularity L, decodes the strings back
    and compares the reconstructed state against the exact tree state.  Rows
    report the median and 10th-percentile fidelity plus the smallest segment
    length encountered.
    """
    if L < 2 or L % 2:
        raise ValueError(f"granularity must be even and >= 2, got L={L}")
    if not 1 <= n_min <= n_max_arg <= _MAX_DENSE_DEPTH:
        raise ValueError(
            f"need 1 <= n_min <= n_max <= {_MAX_DENSE_DEPTH}, got {n_min}..{n_max_arg}"
        )
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rows = []
    for N in range(n_min, n_max_arg + 1):
        fids = np.empty(samples)
        min_seg = L
        for i in range(samples):
            rng = np.random.default_rng((seed ^ i) & _MASK64)
            tree = random_angle_tree(N, rng)
            strings, _ = encode_nested(tree, L)
            state = decode_nested(strings)
            fids[i] = fidelity(amplitudes_of_tree(tree), amplitudes(state))
            deepest = state.lengths[state.level_slice(N)]
            min_seg = min(min_seg, int(deepest.min()))
        rows.append(
            SaturationRow(
                N,
                float(np.median(fids)),
                float(np.percentile(fids, 10)),
                min_seg,
            )
        )
    return rows
