from hypothesis import given, strategies as st

from domino_qsym.arc import arc_descents_by_rule, enumerate_signed_arc
from domino_qsym.core import (BiTableau, Domino, DominoTableau, SignedPermutation, YoungTableau,
                              enumerate_signed_permutations, parse_signed_permutation)
from domino_qsym.descents import (SignedDescentSet, des_a, des_b, des_r, des_r_bitableau, des_sdt,
                                  des_syt, neg_count, sdes, sdes_bitableau, wdes)

P = parse_signed_permutation


def test_des_b_examples(bv_perm):
    assert des_b(P("1,2,3")) == set()
    assert des_b(bv_perm) == {0, 2, 3, 5, 8}
    assert des_b(P("5,2,4,1,3")) == des_a((5, 2, 4, 1, 3)) == {1, 3}


def test_des_r_examples(bv_perm):
    assert des_r(P("1,2,3")) == set()
    assert des_r(bv_perm) == {0, 2, 3, 5, 6, 8}
    assert des_r(P("-1,-2")) == {0}


def test_sdes_examples(bv_perm):
    ident = sdes(P("1,2,3,4,5,6,7,8,9"))
    assert ident.s == (9,) and ident.eps == "+"
    sd = sdes(bv_perm)
    assert sd.s == tuple(range(1, 10)) and sd.eps == "-++-+--+-"
    inv = sdes(bv_perm.inverse())
    assert inv.s == tuple(range(1, 10)) and inv.eps == "+--++--+-"
    assert sd.to_json() == {"S": list(range(1, 10)), "eps": "-++-+--+-"}


def test_wdes_examples(bv_perm):
    assert wdes(sdes(P("1,2,3"))) == set()
    assert wdes(sdes(bv_perm)) == {2, 3, 5, 6, 8}
    # -1 then -2: position 1 is not marked (|-1| < |-2|), so S = {2} and wdes is empty
    assert sdes(P("-1,-2")).s == (2,)
    assert wdes(sdes(P("-1,-2"))) == set()


def test_extended_signs_are_blockwise():
    sd = SignedDescentSet(5, (2, 5), "-+")
    assert sd.extended == "--+++"


def test_neg_count(bv_perm):
    assert neg_count(P("1,2")) == 0
    assert neg_count(bv_perm) == 5
    assert neg_count(P("-1,-2,-3")) == 3


def test_wdes_relation_exhaustive():
    for n in range(1, 7):
        for pi in enumerate_signed_permutations(n):
            sd = sdes(pi)
            zero = {0} if sd.extended[0] == "-" else set()
            assert des_r(pi) == wdes(sd) | zero, pi


def test_positive_permutations_use_type_a_descents():
    from itertools import permutations
    for w in permutations(range(1, 6)):
        pi = SignedPermutation(w)
        assert des_b(pi) == des_r(pi) == des_a(w)


def test_arc_descent_rule():
    for n in range(1, 7):
        for pi in enumerate_signed_arc(n):
            assert des_b(pi) == arc_descents_by_rule(pi)


signed_perms = st.integers(1, 9).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)), st.lists(st.booleans(), min_size=n, max_size=n))
).map(lambda ps: SignedPermutation(tuple(-v if neg else v for v, neg in zip(*ps))))


@given(signed_perms)
def test_des_b_matches_definition(pi):
    w = (0,) + pi.window
    assert des_b(pi) == {i for i in range(pi.n) if w[i] > w[i + 1]}
    assert all(0 <= i < pi.n for i in des_r(pi))
    assert pi.n in sdes(pi).s


def test_young_descents():
    t = YoungTableau(((1, 3, 4, 8, 9, 14), (2, 6, 7, 10), (5, 12), (11,), (13,)))
    u = YoungTableau(((1, 3, 4, 7, 8, 9), (2, 6, 12, 14), (5, 13), (10,), (11,)))
    assert des_syt(t) == des_syt(u) == {1, 4, 9, 10, 12}
    assert des_syt(YoungTableau(((1, 2, 3),))) == set()
    assert des_syt(YoungTableau(((1, 3), (2, 5), (4,)))) == {1, 3}


def test_domino_descents(bv_q, bv_p, dts_t, dts_u):
    assert des_sdt(DominoTableau((Domino(1, 1, "H", 1), Domino(1, 3, "H", 2)))) == set()
    assert des_sdt(dts_t) == des_sdt(dts_u) == {0, 3, 5, 6}
    assert des_sdt(bv_q) == {0, 2, 3, 5, 8}
    assert des_sdt(bv_p) == {1, 4, 5, 8}


def test_bitableau_descents(bit_t, rsb_pair):
    single = BiTableau(YoungTableau(()), YoungTableau(((1, 2, 3),)))
    assert sdes_bitableau(single).s == (3,) and sdes_bitableau(single).eps == "+"
    assert des_r_bitableau(single) == set()
    sd = sdes_bitableau(bit_t)
    assert (sd.s, sd.eps) == ((2, 3, 4, 6, 8, 9), "+-+-++")
    assert des_r_bitableau(bit_t) == {2, 4, 8}
    p, q = rsb_pair
    sq = sdes_bitableau(q)
    assert (sq.s, sq.eps) == (tuple(range(1, 10)), "-++-+--+-")
    sp = sdes_bitableau(p)
    assert (sp.s, sp.eps) == (tuple(range(1, 10)), "+--++--+-")
    assert des_r_bitableau(q) == {0, 2, 3, 5, 6, 8}
    assert des_r_bitableau(p) == {1, 2, 4, 5, 6, 8}
