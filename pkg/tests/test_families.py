from __future__ import annotations

from math import comb

import pytest

from algraph import families as F
from algraph.graph import GraphError, diameter, girth


@pytest.mark.parametrize(
    "name,params",
    [
        ("complete", (5,)),
        ("empty", (3,)),
        ("cycle", (7,)),
        ("path", (4,)),
        ("complete_bipartite", (2, 3)),
        ("hypercube", (4,)),
        ("johnson", (6, 3, 1)),
        ("kneser", (7, 2)),
        ("odd", (3,)),
        ("petersen", ()),
        ("paley", (13,)),
        ("hamming", (3, 3)),
        ("heawood", ()),
        ("coxeter", ()),
        ("tutte_coxeter", ()),
        ("folkman", ()),
        ("shrikhande", ()),
        ("asymmetric6", ()),
    ],
)
def test_family_order_predicts_build(name, params):
    assert F.family_order(name, *params) == F.build(name, *params).n


def test_build_errors():
    with pytest.raises(GraphError):
        F.build("paley", 7)
    with pytest.raises(GraphError):
        F.build("paley", 15)
    with pytest.raises(GraphError):
        F.build("nonesuch")
    with pytest.raises(GraphError):
        F.build("cycle")
    with pytest.raises(GraphError):
        F.johnson(3, 4, 1)


def test_johnson_valency_and_labels():
    g = F.johnson(7, 3, 1)
    assert g.n == comb(7, 3)
    assert g.regularity() == F.johnson_degree(7, 3, 1) == 3 * 6
    assert F.colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_fano_labelling():
    assert F.FANO_LINES[0] == (0, 1, 2)
    h = F.heawood()
    for i, line in enumerate(F.FANO_LINES):
        assert h.neighbors[7 + i] == line
    # any two points lie on exactly one line
    for a in range(7):
        for b in range(a + 1, 7):
            assert sum(1 for line in F.FANO_LINES if a in line and b in line) == 1


def test_heptad_orbits():
    o1, o2 = F.heptads()
    assert len(F.all_heptads()) == 30
    assert len(o1) == len(o2) == 15
    assert F.H0 in o1
    assert len(F.triads()) == 7 * 15


def test_hoffman_singleton_layout():
    g = F.hoffman_singleton()
    assert g.n == 50 and g.regularity() == 7
    assert girth(g) == 5 and diameter(g) == 2
    # triples 0..34 see four disjoint triples and three heptads
    assert all(sum(1 for w in g.neighbors[v] if w >= 35) == 3 for v in range(35))
    # heptad vertices only meet triples
    assert all(max(g.neighbors[v]) < 35 for v in range(35, 50))


def test_other_layouts():
    assert F.tutte_coxeter().neighbors[15] == (0, 9, 14)  # syntheme {01,23,45}
    assert len(F.synthemes()) == 15
    assert F.coxeter_antiflag().n == 28 and F.coxeter_antiflag().regularity() == 3
    assert F.shrikhande().regularity() == 6
    assert F.folkman().degrees == (4,) * 20
    assert F.hypercube(3).neighbors[0] == (1, 2, 4)
    assert F.circulant(8, [1, 3]).regularity() == 4
