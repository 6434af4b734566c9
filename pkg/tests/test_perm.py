from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algraph.perm import GroupTooLarge, Permutation, PermError, PermGroup, closure, orbits_of


def perms(n):
    return st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))


def test_cycle_notation_roundtrip():
    p = Permutation.from_cycles("(0 1 2)(3 4)", 6)
    assert p.image == (1, 2, 0, 4, 3, 5)
    assert str(p) == "(0 1 2)(3 4)"
    assert p.order() == 6
    assert p.cycle_count() == 3
    assert str(Permutation.identity(3)) == "()"
    assert Permutation.from_cycles("()", 3).is_identity()


@pytest.mark.parametrize("bad", ["(0 1", "(0 0)", "(0 1)(1 2)", "(0 9)", "0 1"])
def test_cycle_notation_errors(bad):
    with pytest.raises(PermError):
        Permutation.from_cycles(bad, 4)


def test_product_applies_left_factor_first():
    a = Permutation.from_cycles("(0 1)", 3)
    b = Permutation.from_cycles("(1 2)", 3)
    assert (0 ** (a * b)) == 2  # 0 -> 1 under a, 1 -> 2 under b
    assert (a * b)(0) == b(a(0))


@settings(max_examples=50, deadline=None)
@given(perms(6), perms(6), perms(6))
def test_group_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p * ~p).is_identity()
    assert ~(p * q) == ~q * ~p


def test_symmetric_orders():
    for n in range(1, 8):
        assert PermGroup.symmetric(n).order() == [1, 1, 2, 6, 24, 120, 720, 5040][n]


def test_membership_and_stabilizers():
    s5 = PermGroup.symmetric(5)
    a5 = PermGroup([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)], 5)
    assert a5.order() == 60
    odd = Permutation.from_cycles("(0 1)", 5)
    assert odd in s5 and odd not in a5
    assert s5.stabilizer(0).order() == 24
    assert s5.pointwise_stabilizer([0, 1]).order() == 6
    assert a5.is_primitive()


def test_blocks_and_orbitals():
    # D4 on the square 0-1-2-3 has blocks {0,2}, {1,3}
    d4 = PermGroup([(1, 2, 3, 0), (0, 3, 2, 1)], 4)
    assert d4.order() == 8
    assert d4.blocks() == [[0, 2], [1, 3]]
    assert d4.rank() == 3
    assert d4.is_generously_transitive()
    c5 = PermGroup([(1, 2, 3, 4, 0)], 5)
    assert c5.is_regular_action() and c5.is_semiregular()
    assert not c5.is_generously_transitive()


def test_enumeration_bound():
    with pytest.raises(GroupTooLarge):
        list(PermGroup.symmetric(8).elements(bound=1000))


def test_bsgs_order_matches_closure_random():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 7)
        gens = [tuple(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        g = PermGroup(gens, n)
        elems = set(closure(gens, bound=10**4))
        assert g.order() == len(elems)
        assert set(g._raw_elements()) == elems
        for p in permutations(range(n)):
            if rng.random() < 0.05:
                assert g.contains(p) == (p in elems)


def test_orbits_of_union_find():
    assert orbits_of([(1, 0, 2, 4, 3)], 5) == [[0, 1], [2], [3, 4]]
