from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qgrain.bitstring import (
    BitString,
    NotCodewordError,
    apply_permutation,
    born_frequency,
    concat,
    cyc,
    decode,
    encode,
    equivalent_mod_xi,
    from_text,
    iota,
    mean_std,
    mean_var_exact,
    negate,
    to_text,
    to_wire,
)
from qgrain.qubit import DiscretisedQubit


def bits(*vals):
    return BitString(list(vals))


def test_iota_examples():
    assert iota(4, 4) == bits(1, 1, 1, 1)
    assert iota(4, 0) == bits(-1, -1, -1, -1)
    assert iota(8, 3) == bits(1, 1, 1, -1, -1, -1, -1, -1)
    with pytest.raises(ValueError):
        iota(4, 5)
    with pytest.raises(ValueError):
        iota(4, -1)


def test_cyc_examples():
    assert cyc(bits(1, -1, -1, -1), 1) == bits(-1, -1, -1, 1)
    s = bits(1, -1, 1, 1, -1)
    assert cyc(s, 0) == s
    assert cyc(s, len(s)) == s
    assert cyc(bits(1, 1, -1, -1), 2) == bits(-1, -1, 1, 1)


@given(st.integers(1, 64), st.integers(-100, 100), st.integers(-100, 100), st.data())
def test_cyc_composes_additively(L, j, k, data):
    v = data.draw(st.lists(st.sampled_from([1, -1]), min_size=L, max_size=L))
    s = BitString(v)
    assert cyc(cyc(s, j), k) == cyc(s, j + k)


def test_encode_examples():
    assert encode(DiscretisedQubit(4, 0, 4)) == bits(1, 1, 1, 1)
    assert encode(DiscretisedQubit(2, 0, 4)) == bits(-1, -1, 1, 1)
    assert encode(DiscretisedQubit(2, 1, 4)) == bits(-1, 1, 1, -1)


def test_encode_rejects_odd_length():
    with pytest.raises(ValueError):
        encode(DiscretisedQubit(1, 0, 3))


def test_decode_examples():
    decoded = decode(bits(-1, -1, 1, 1))
    assert decoded.qubit == DiscretisedQubit(2, 0, 4) and not decoded.degenerate
    decoded = decode(bits(1, 1, 1, 1))
    assert decoded.qubit == DiscretisedQubit(4, 0, 4) and decoded.degenerate
    decoded = decode(bits(-1, -1, -1, -1))
    assert decoded.qubit == DiscretisedQubit(0, 0, 4) and decoded.degenerate
    with pytest.raises(NotCodewordError):
        decode(bits(1, -1, 1, -1))


def test_round_trip_exhaustive_small():
    for L in (2, 4, 6, 8, 10):
        for m in range(1, L):
            for n in range(L):
                q = DiscretisedQubit(m, n, L)
                decoded = decode(encode(q))
                assert decoded.qubit == q and not decoded.degenerate


@given(st.integers(1, 1 << 13), st.data())
def test_round_trip_random_large(half_L, data):
    L = 2 * half_L  # even, up to 2**14
    m = data.draw(st.integers(1, L - 1))
    n = data.draw(st.integers(0, L - 1))
    q = DiscretisedQubit(m, n, L)
    assert decode(encode(q)).qubit == q


def test_born_frequency_examples():
    assert born_frequency(bits(1, 1, -1, -1)) == Fraction(1, 2)
    assert born_frequency(encode(DiscretisedQubit(3, 5, 8))) == Fraction(3, 8)
    assert born_frequency(bits(-1, -1, -1, -1)) == 0


@given(st.integers(2, 256), st.data())
def test_born_frequency_permutation_invariant(L, data):
    m = data.draw(st.integers(0, L))
    s = iota(L, m)
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    assert born_frequency(apply_permutation(s, rng.permutation(L))) == Fraction(m, L)


def test_apply_permutation_requires_bijection():
    with pytest.raises(ValueError):
        apply_permutation(bits(1, -1), np.array([0, 0]))


def test_mean_std_examples():
    assert mean_std(bits(1, 1, -1, -1)) == (0.0, 1.0)
    assert mean_std(bits(1, 1, 1, 1)) == (1.0, 0.0)
    mu, sigma = mean_std(encode(DiscretisedQubit(12, 0, 16)))
    assert mu == pytest.approx(0.5, abs=0)
    assert sigma == pytest.approx(math.sqrt(3) / 2, abs=1e-15)


@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=200))
def test_mean_var_identity_exact(vals):
    mu, var = mean_var_exact(BitString(vals))
    assert mu * mu + var == 1


def test_equivalent_mod_xi_examples():
    assert equivalent_mod_xi([bits(1, -1, 1, -1)], [bits(1, 1, -1, -1)])
    fam1 = [bits(1, -1), bits(1, -1)]
    fam2 = [bits(-1, 1), bits(1, -1)]
    assert not equivalent_mod_xi(fam1, fam2)
    assert equivalent_mod_xi(fam1, fam1)


def test_equivalent_mod_xi_validation():
    with pytest.raises(ValueError):
        equivalent_mod_xi([bits(1, -1)], [bits(1, -1), bits(1, -1)])
    with pytest.raises(ValueError):
        equivalent_mod_xi([bits(1, -1)], [bits(1, -1, 1)])


@given(st.integers(1, 5), st.integers(2, 32), st.integers(0, 2**32 - 1))
def test_equivalent_mod_xi_equivalence_relation(N, L, seed):
    rng = np.random.default_rng(seed)
    base = [BitString(rng.choice([1, -1], size=L).astype(np.int8)) for _ in range(N)]
    p1, p2 = rng.permutation(L), rng.permutation(L)
    fam_b = [apply_permutation(s, p1) for s in base]
    fam_c = [apply_permutation(fam_b[i], p2) for i in range(N)]
    assert equivalent_mod_xi(base, base)  # reflexive
    assert equivalent_mod_xi(base, fam_b) and equivalent_mod_xi(fam_b, base)  # symmetric
    assert equivalent_mod_xi(base, fam_c)  # transitive through fam_b


def test_negate_and_concat():
    assert negate(bits(1, -1)) == bits(-1, 1)
    assert concat(bits(1), bits(-1, -1)) == bits(1, -1, -1)


def test_text_serialisation_round_trip():
    s = encode(DiscretisedQubit(2, 0, 4))
    assert to_text(s) == "--++"
    assert from_text("--++") == s
    assert to_wire(s) == "4:--++"
    assert from_text("4:--++") == s
    with pytest.raises(ValueError):
        from_text("3:--++")
    with pytest.raises(ValueError):
        from_text("+!-")
    with pytest.raises(ValueError):
        from_text("")


def test_bitstring_validation_and_immutability():
    with pytest.raises(ValueError):
        BitString([1, 0, -1])
    with pytest.raises(ValueError):
        BitString([])
    s = bits(1, -1)
    with pytest.raises(ValueError):
        s.values[0] = -1
