from __future__ import annotations

import pytest

from algraph.groups import FiniteGroup, GroupError, Subgroup


def test_constructors_and_orders():
    assert FiniteGroup.cyclic(6).order == 6
    assert FiniteGroup.abelian([2, 2, 3]).order == 12
    assert FiniteGroup.symmetric(4).order == 24
    assert FiniteGroup.dihedral(5).order == 10
    assert FiniteGroup.cyclic(6).is_abelian
    assert not FiniteGroup.symmetric(3).is_abelian


def test_from_permutations_identity_first():
    G = FiniteGroup.from_permutations([(1, 2, 0)])
    assert G.identity == 0 and G.labels[0] == (0, 1, 2)
    assert sorted(G.element_order(x) for x in range(3)) == [1, 3, 3]


def test_table_validation():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])  # not a latin square
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1, 2], [1, 2, 0]])  # not square
    # a latin square whose operation is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        FiniteGroup(bad)


def test_subgroups_and_cosets():
    S3 = FiniteGroup.symmetric(3)
    t = next(x for x in range(6) if S3.element_order(x) == 2)
    H = S3.subgroup([0, t])
    assert H.index() == 3
    right, left = H.right_cosets(), H.left_cosets()
    assert len(right) == len(left) == 3
    assert all(len(c) == 2 for c in right)
    assert set().union(*right) == set(range(6))
    assert right != left  # H is not normal
    assert H.core() == frozenset({0})
    rot = S3.subgroup(S3.generated([x for x in range(6) if S3.element_order(x) == 3]))
    assert rot.core() == rot.elements
    t2 = next(x for x in range(6) if S3.element_order(x) == 2 and x != t)
    assert H.is_conjugate_to(S3.subgroup([0, t2]))
    with pytest.raises(GroupError):
        Subgroup(S3, frozenset({0, t, t2}))


def test_regular_permutations_are_right_translations():
    G = FiniteGroup.dihedral(4)
    for g, p in enumerate(G.regular_permutations()):
        assert all(p[x] == G.mul(x, g) for x in range(G.order))
