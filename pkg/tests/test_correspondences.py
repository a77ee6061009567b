import itertools

import pytest
from hypothesis import given, strategies as st

from domino_qsym.core import (BiTableau, DomainError, Domino, DominoTableau, SignedPermutation,
                              YoungTableau, domino_shapes, enumerate_semistandard_domino,
                              enumerate_signed_permutations, enumerate_standard_bitableaux,
                              enumerate_standard_domino, two_quotient)
from domino_qsym.correspondences import (bi_rs, littlewood, littlewood_inverse, phi3, phi3_table,
                                         rs_insert)
from domino_qsym.descents import des_a, des_r, des_r_bitableau, des_sdt, des_syt, sdes, sdes_bitableau


def Y(*rows):
    return YoungTableau(tuple(tuple(r) for r in rows))


def longest_increasing(word):
    best = 0
    for r in range(1, len(word) + 1):
        if any(list(c) == sorted(c) for c in itertools.combinations(word, r)):
            best = r
    return best


# -- Robinson-Schensted ----------------------------------------------------------

def test_rs_examples():
    p, q = rs_insert((5, 2, 4, 1, 3))
    assert p == Y((1, 3), (2, 4), (5,))
    assert q == Y((1, 3), (2, 5), (4,))
    assert des_syt(q) == {1, 3} and des_syt(p) == {1, 3, 4}
    p, q = rs_insert((1, 2, 3, 4))
    assert p == q == Y((1, 2, 3, 4))
    p, q = rs_insert((4, 3, 2, 1))
    assert p == q == Y((1,), (2,), (3,), (4,))
    with pytest.raises(DomainError):
        rs_insert((1, 1))


def test_rs_descent_preservation_exhaustive():
    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            p, q = rs_insert(w)
            assert des_syt(q) == des_a(w)
            inv = [0] * n
            for i, v in enumerate(w, 1):
                inv[v - 1] = i
            assert des_syt(p) == des_a(inv)


@given(st.permutations(range(1, 8)))
def test_rs_first_row_is_longest_increasing(w):
    p, q = rs_insert(w)
    assert p.shape == q.shape
    assert len(p.rows[0]) == longest_increasing(w)
    assert p.is_standard() and q.is_standard()


def test_bi_rs_known_pair(bv_perm, rsb_pair):
    assert bi_rs(bv_perm) == rsb_pair


def test_bi_rs_edge_cases():
    p, q = bi_rs(SignedPermutation((1, 2, 3)))
    assert p == q == BiTableau(Y(), Y((1, 2, 3)))
    p, q = bi_rs(SignedPermutation((-1, -2, -3)))
    # negative subsequence read by absolute values: 1,2,3 inserted at positions 1,2,3
    assert p == q == BiTableau(Y((1, 2, 3)), Y())
    p, q = bi_rs(SignedPermutation((-3, -2, -1)))
    assert p == q == BiTableau(Y((1,), (2,), (3,)), Y())


def test_bi_rs_preserves_signed_statistics():
    for n in range(1, 6):
        for pi in enumerate_signed_permutations(n):
            p, q = bi_rs(pi)
            assert p.shape == q.shape
            assert sdes_bitableau(q) == sdes(pi)
            assert des_r_bitableau(q) == des_r(pi)
            assert sdes_bitableau(p) == sdes(pi.inverse())
            assert des_r_bitableau(p) == des_r(pi.inverse())


# -- sign-coloring map ---------------------------------------------------------

def test_littlewood_known_image(bv_q):
    b = littlewood(bv_q)
    assert b.t1 == Y((1, 2, 8), (7, 9))
    assert b.t2 == Y((3, 5), (4,), (6,))
    assert littlewood_inverse(b) == bv_q


def test_littlewood_extremes():
    n = 4
    flat = DominoTableau(tuple(Domino(1, 2 * i - 1, "H", i) for i in range(1, n + 1)))
    column = DominoTableau(tuple(Domino(2 * i - 1, 1, "V", i) for i in range(1, n + 1)))
    assert littlewood(flat) == BiTableau(Y(), Y(range(1, n + 1)))
    assert littlewood(column) == BiTableau(Y(*[(i,) for i in range(1, n + 1)]), Y())
    assert littlewood_inverse(BiTableau(Y(), Y(range(1, n + 1)))) == flat
    assert littlewood_inverse(BiTableau(Y(*[(i,) for i in range(1, n + 1)]), Y())) == column


def test_littlewood_semistandard_example(dts_v):
    b = littlewood(dts_v)
    b.validate()
    assert b.shape == two_quotient(dts_v.shape)
    assert b.weight() == dts_v.weight()
    assert littlewood_inverse(b) == dts_v


def test_littlewood_round_trip_standard():
    for n in range(5):
        for shape in domino_shapes(n):
            images = set()
            for t in enumerate_standard_domino(shape):
                b = littlewood(t)
                assert b.shape == two_quotient(shape)
                assert littlewood_inverse(b) == t
                images.add(b)
            minus, plus = two_quotient(shape)
            assert images == set(enumerate_standard_bitableaux(minus, plus))


def test_littlewood_semistandard_small():
    for shape in [(2, 2), (3, 1), (2, 1, 1), (4, 2), (3, 3)]:
        for t in enumerate_semistandard_domino(shape, 3):
            b = littlewood(t)
            b.validate()
            assert b.weight() == t.weight()
            assert littlewood_inverse(b) == t


def test_littlewood_inverse_rejects_invalid():
    with pytest.raises(DomainError):
        littlewood_inverse(BiTableau(Y((2, 1)), Y()))


# -- descent matching ----------------------------------------------------------

def test_phi3_small_shapes():
    [(b, t, des)] = phi3_table((2,))
    assert b == BiTableau(Y(), Y((1,))) and des == frozenset()
    [(b, t, des)] = phi3_table((1, 1))
    assert b == BiTableau(Y((1,)), Y()) and des == {0}
    table = phi3_table((2, 2))
    assert len(table) == 2
    assert sorted(sorted(d) for _, _, d in table) == [[0], [1]]


def test_phi3_is_a_descent_preserving_bijection():
    for n in range(1, 6):
        for shape in domino_shapes(n):
            table = phi3_table(shape)
            bis = [b for b, _, _ in table]
            doms = [t for _, t, _ in table]
            assert len(set(bis)) == len(bis) and len(set(doms)) == len(doms)
            for b, t, d in table:
                assert des_r_bitableau(b) == des_sdt(t) == d
                assert phi3(b) == t
