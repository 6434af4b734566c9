"""Acceptance suite: thirteen numbered criteria.

Each ``test_criterion_NN_*`` function belongs to criterion NN; a criterion
passes when all of its functions pass.  Under pytest the per-criterion
verdicts are printed in the terminal summary (see conftest.py).  Running
this file directly prints the same lines:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import sys
import time
import traceback
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from algraph import families as F  # noqa: E402
from algraph.aut import (  # noqa: E402
    are_isomorphic,
    automorphism_group,
    automorphism_order,
    distance_transitive,
    is_s_arc_regular,
    is_s_arc_transitive,
    is_vertex_transitive,
    max_s_arc_transitivity,
    transitivity,
)
from algraph.designs import (  # noqa: E402
    affine_lines_f3,
    affine_planes_f2,
    contraction,
    fano_plane,
    gq22_from_k6,
    is_t_design,
    levi_graph,
    pg2,
    steiner_counts,
    w_quadrangle,
)
from algraph.graph import complement, diameter, girth, is_connected, line_graph  # noqa: E402
from algraph.groupgraphs import cayley_graph  # noqa: E402
from algraph.groups import FiniteGroup  # noqa: E402
from algraph.homcore import (  # noqa: E402
    chromatic_number,
    core,
    core_vertices,
    edge_connectivity,
    hamiltonian_cycle,
    hamiltonian_path,
    independence_number,
    is_core,
    is_matching,
    max_independent_sets,
    max_matching,
    max_matching_with_edge,
    vertex_connectivity,
)
from algraph.perm import Permutation, PermGroup, closure, orbits_on  # noqa: E402
from algraph.spectral import (  # noqa: E402
    char_poly,
    feit_higman_admissible,
    generalized_polygon,
    intersection_array,
    is_moore,
    moore_bound,
    moore_d2_feasible,
    root_multiplicity,
    srg_check,
    srg_spectrum,
)
from strategies import brute_automorphisms, brute_intersection_array, random_graph  # noqa: E402

CRITERIA = {
    1: "catalog golden table",
    2: "automorphism orders",
    3: "transitivity ladder",
    4: "heptad arithmetic",
    5: "SRG suite",
    6: "intersection arrays",
    7: "Moore feasibility",
    8: "generalized polygons",
    9: "cores and colourings",
    10: "connectivity and matchings",
    11: "Hamiltonicity table",
    12: "design arithmetic",
    13: "oracle equivalence",
}

HS_AUT_SECONDS = 60.0


def vt_catalog() -> dict:
    """Vertex-transitive graphs used by the catalog-wide criteria."""
    return {
        "petersen": F.petersen(),
        "heawood": F.heawood(),
        "coxeter": F.coxeter(),
        "tutte_coxeter": F.tutte_coxeter(),
        "shrikhande": F.shrikhande(),
        "hoffman_singleton": F.hoffman_singleton(),
        "Q3": F.hypercube(3),
        "Q4": F.hypercube(4),
        "K4": F.complete(4),
        "K5": F.complete(5),
        "K33": F.complete_bipartite(3, 3),
        "C5": F.cycle(5),
        "C6": F.cycle(6),
        "C7": F.cycle(7),
        "C9": F.cycle(9),
        "paley9": F.paley(9),
        "paley13": F.paley(13),
        "hamming32": F.hamming(3, 2),
        "hamming33": F.hamming(3, 3),
        "L(K5)": line_graph(F.complete(5)),
        "kneser72": F.kneser(7, 2),
        "johnson631": F.johnson(6, 3, 1),
    }


# -- 1 ---------------------------------------------------------------------


def test_criterion_01_catalog_golden_table():
    table = {
        "petersen": (F.petersen(), (10, 3, 5, 2)),
        "heawood": (F.heawood(), (14, 3, 6, 3)),
        "coxeter": (F.coxeter(), (28, 3, 7, 4)),
        "tutte_coxeter": (F.tutte_coxeter(), (30, 3, 8, 4)),
        "hoffman_singleton": (F.hoffman_singleton(), (50, 7, 5, 2)),
        "folkman": (F.folkman(), (20, 4, 4, None)),
        "Q3": (F.hypercube(3), (8, 3, 4, 3)),
    }
    for name, (g, (n, k, gth, diam)) in table.items():
        got = (g.n, g.regularity(), girth(g), diameter(g))
        assert got[:3] == (n, k, gth), (name, got)
        if diam is not None:
            assert got[3] == diam, (name, got)


# -- 2 ---------------------------------------------------------------------


def test_criterion_02_automorphism_orders():
    expected = {
        "petersen": (F.petersen(), 120),
        "heawood": (F.heawood(), 336),
        "coxeter": (F.coxeter(), 336),
        "tutte_coxeter": (F.tutte_coxeter(), 1440),
        "K33": (F.complete_bipartite(3, 3), 72),
        "hamming32": (F.hamming(3, 2), 48),
        "asymmetric6": (F.asymmetric6(), 1),
    }
    for n in range(3, 13):
        expected[f"C{n}"] = (F.cycle(n), 2 * n)
    fact = 1
    for n in range(1, 6):
        fact *= n
        expected[f"Q{n}"] = (F.hypercube(n), 2**n * fact)
    wrong = {name: (automorphism_order(g), want) for name, (g, want) in expected.items()
             if automorphism_order(g) != want}
    assert not wrong, wrong


def test_criterion_02_hoffman_singleton_order():
    t0 = time.perf_counter()
    order = automorphism_order(F.hoffman_singleton())
    elapsed = time.perf_counter() - t0
    assert order == 252000
    assert elapsed <= HS_AUT_SECONDS, elapsed


def test_criterion_02_paley9_order():
    order = automorphism_order(F.paley(9))
    assert order == 216, f"computed |Aut(Paley(9))| = {order}, criterion states 216"


# -- 3 ---------------------------------------------------------------------


def test_criterion_03_transitivity_ladder():
    p = F.petersen()
    grp = automorphism_group(p)
    assert is_s_arc_transitive(p, 3, grp)
    assert is_s_arc_regular(p, 3, grp)
    assert not is_s_arc_transitive(p, 4, grp)
    assert distance_transitive(p, grp) is True

    q3 = F.hypercube(3)
    assert max_s_arc_transitivity(q3) == 2
    assert distance_transitive(q3) is True

    assert transitivity(F.folkman()).semisymmetric

    sh = F.shrikhande()
    assert intersection_array(sh) is not None
    assert distance_transitive(sh) is False

    c6 = F.cycle(6)
    grp = automorphism_group(c6)
    assert all(is_s_arc_transitive(c6, s, grp) for s in range(0, 6))


# -- 4 ---------------------------------------------------------------------


def test_criterion_04_heptad_arithmetic():
    triads = F.triads()
    hepts = F.all_heptads()
    o1, o2 = F.heptads()
    assert len(set(triads)) == len(triads) == 105
    assert len(hepts) == 30
    assert (len(o1), len(o2)) == (15, 15)
    for tri in triads:
        assert sum(1 for h in hepts if tri <= h) == 2
    for triple in F.colex_subsets(7, 3):
        for orb in (o1, o2):
            assert sum(1 for h in orb if triple in h) == 3
    for orb in (o1, o2):
        for a, b in combinations(orb, 2):
            assert len(a & b) == 1


# -- 5 ---------------------------------------------------------------------


def srg_suite() -> dict:
    return {
        "petersen": (F.petersen(), (10, 3, 0, 1)),
        "shrikhande": (F.shrikhande(), (16, 6, 2, 2)),
        "L(K5)": (line_graph(F.complete(5)), (10, 6, 3, 4)),
        "L(K44)": (line_graph(F.complete_bipartite(4, 4)), (16, 6, 2, 2)),
        "paley9": (F.paley(9), (9, 4, 1, 2)),
    }


def test_criterion_05_srg_suite():
    suite = srg_suite()
    for name, (g, params) in suite.items():
        p = srg_check(g)
        assert p is not None and p.astuple() == params, (name, p)
        # the complement, recomputed from scratch, has the derived parameters
        assert srg_check(complement(g)) == p.complement(), name
    p = srg_check(F.petersen())
    sp = srg_spectrum(p)
    assert sp.as_multiset() == {Fraction(3): 1, Fraction(1): 5, Fraction(-2): 4}
    poly = char_poly(F.petersen())
    assert [root_multiplicity(poly, x) for x in (3, 1, -2)] == [1, 5, 4]
    assert are_isomorphic(suite["L(K44)"][0], suite["shrikhande"][0]) is None


def test_criterion_05_stated_complement_formula():
    # (v, v-1-k, v-2-2k+mu, v-2-k+lambda), compared with the recomputed complement
    bad = {}
    for name, (g, (v, k, lam, mu)) in srg_suite().items():
        stated = (v, v - 1 - k, v - 2 - 2 * k + mu, v - 2 - k + lam)
        actual = srg_check(complement(g)).astuple()
        if stated != actual:
            bad[name] = (stated, actual)
    assert not bad, bad


# -- 6 ---------------------------------------------------------------------


def test_criterion_06_intersection_arrays():
    expected = {
        "petersen": (F.petersen(), ((3, 2), (1, 1))),
        "heawood": (F.heawood(), ((3, 2, 2), (1, 1, 3))),
        "hoffman_singleton": (F.hoffman_singleton(), ((7, 6), (1, 1))),
    }
    for name, (g, (b, c)) in expected.items():
        ia = intersection_array(g)
        assert ia is not None and (ia.b, ia.c) == (b, c), (name, ia)
        assert brute_intersection_array(g) == (b, c), name


# -- 7 ---------------------------------------------------------------------


def test_criterion_07_moore_feasibility():
    assert moore_bound(3, 2) == 10
    assert moore_bound(7, 2) == 50
    assert moore_bound(57, 2) == 3250
    assert [k for k in range(2, 101) if moore_d2_feasible(k)] == [2, 3, 7, 57]
    for g in (F.cycle(5), F.cycle(7), F.petersen(), F.hoffman_singleton()):
        assert is_moore(g)
    for g in (F.hypercube(3), F.heawood()):
        assert not is_moore(g)


# -- 8 ---------------------------------------------------------------------


def test_criterion_08_generalized_polygons():
    h = generalized_polygon(F.heawood())
    assert (h.d, h.s, h.t) == (3, 2, 2)
    tc = generalized_polygon(F.tutte_coxeter())
    assert (tc.d, tc.s, tc.t) == (4, 2, 2)
    tc_graph = F.tutte_coxeter()
    assert are_isomorphic(levi_graph(w_quadrangle(2)), tc_graph) is not None
    assert are_isomorphic(levi_graph(gq22_from_k6()), tc_graph) is not None
    for s in range(2, 11):
        for t in range(2, 11):
            assert not feit_higman_admissible(5, s, t), (s, t)
    assert not feit_higman_admissible(8, 2, 2)


# -- 9 ---------------------------------------------------------------------


def test_criterion_09_cores_and_colourings():
    p = F.petersen()
    assert is_core(p)
    assert core(F.cycle(6)) == F.complete(2)
    for name, g in vt_catalog().items():
        if g.n > 40:
            continue
        size = len(core_vertices(g))
        assert g.n % size == 0, (name, g.n, size)
    assert independence_number(p) == 4
    assert len(max_independent_sets(p)) == 5
    assert chromatic_number(p) == 3


# -- 10 --------------------------------------------------------------------


def test_criterion_10_connectivity_and_matchings():
    for name, g in vt_catalog().items():
        assert is_vertex_transitive(g), name
        if is_connected(g):
            assert edge_connectivity(g) == g.regularity(), name
    p = F.petersen()
    assert vertex_connectivity(p) == 3
    for u, v in p.edges():
        m = max_matching_with_edge(p, u, v)
        assert is_matching(p, m) and len(m) == 5 and (u, v) in m
    for g in (F.cycle(7), F.cycle(9), F.complete(5)):
        assert is_connected(g) and g.n % 2 == 1
        assert len(max_matching(g)) == (g.n - 1) // 2


# -- 11 --------------------------------------------------------------------


def abelian_moduli() -> list[tuple[int, ...]]:
    out = [(n,) for n in range(3, 25)]
    out += [(2, 2), (2, 4), (2, 2, 2), (3, 3), (2, 6), (2, 8), (4, 4), (2, 2, 4),
            (3, 6), (2, 10), (2, 2, 6), (2, 12), (2, 2, 2, 2), (2, 2, 2, 3)]
    return out


def abelian_cayley_test_set() -> list[tuple[tuple[int, ...], frozenset]]:
    """Two seeded random inverse-closed connection sets per abelian group, plus a generating one."""
    rng = random.Random(2024)
    cases = []
    for moduli in abelian_moduli():
        G = FiniteGroup.abelian(list(moduli))
        nonid = [x for x in range(G.order) if x != G.identity]
        # the standard generators e_i
        std = set()
        for i in range(len(moduli)):
            coords = tuple(1 if j == i else 0 for j in range(len(moduli)))
            x = G.labels.index(coords)
            std |= {x, G.inv(x)}
        cases.append((moduli, frozenset(std)))
        for _ in range(2):
            C: set[int] = set()
            for x in rng.sample(nonid, rng.randint(1, min(3, len(nonid)))):
                C |= {x, G.inv(x)}
            cases.append((moduli, frozenset(C)))
    return cases


def test_criterion_11_hamiltonicity_table():
    assert hamiltonian_cycle(F.petersen()) is None
    assert hamiltonian_path(F.petersen()) is not None
    assert hamiltonian_cycle(F.coxeter()) is None
    assert hamiltonian_path(F.coxeter()) is not None
    assert hamiltonian_cycle(F.heawood()) is not None
    assert hamiltonian_cycle(F.tutte_coxeter()) is not None
    tested = 0
    for moduli, C in abelian_cayley_test_set():
        g = cayley_graph(FiniteGroup.abelian(list(moduli)), C)
        if not is_connected(g):
            continue
        cyc = hamiltonian_cycle(g)
        assert cyc is not None, (moduli, sorted(C))
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n))
        tested += 1
    assert tested >= 40


# -- 12 --------------------------------------------------------------------


def test_criterion_12_design_arithmetic():
    fano = is_t_design(fano_plane(), 2)
    assert (str(fano), fano.b, fano.r) == ("2-(7,3,1)", 7, 3)
    assert steiner_counts(5, 8, 24).b == 759
    assert steiner_counts(5, 6, 12).b == 132
    assert steiner_counts(4, 5, 11).b == 66
    s8 = affine_planes_f2()
    assert is_t_design(s8, 3).lam == 1
    s7 = contraction(s8, 0, 3)
    p7 = is_t_design(s7, 2)
    assert (p7.v, p7.k, p7.lam) == (7, 3, 1)

    structures = [fano_plane(), fano_plane().dual(), pg2(3), pg2(4), affine_lines_f3(), s8, s7]
    verified = [p for p in (is_t_design(s, 2) for s in structures) if p is not None]
    assert len(verified) == len(structures)
    assert all(p.b >= p.v for p in verified)

    for s in (fano_plane(), pg2(3), affine_lines_f3()):
        symmetric = is_t_design(s, 2).symmetric
        levi = levi_graph(s)
        ia = intersection_array(levi)
        levi_drg_d3 = ia is not None and ia.diameter == 3
        assert symmetric == levi_drg_d3
    assert is_t_design(fano_plane(), 2).symmetric and is_t_design(pg2(3), 2).symmetric


# -- 13 --------------------------------------------------------------------


def test_criterion_13_aut_oracle():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
        assert automorphism_group(g).order() == len(brute_automorphisms(g)), g.edges()


def test_criterion_13_bsgs_oracle():
    rng = random.Random(1313)
    done = 0
    while done < 20:
        n = rng.randint(3, 7)
        gens = [tuple(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        elems = closure(gens, bound=5040)
        assert len(elems) <= 5040
        assert PermGroup(gens, n).order() == len(elems)
        done += 1


def test_criterion_13_burnside_oracle():
    # dihedral group of the square acting on its four corners
    d4 = PermGroup([(1, 2, 3, 0), (0, 3, 2, 1)], 4)
    gens = [p.image for p in d4.generators]

    def act(p, colouring):
        out = [0] * 4
        for i, c in enumerate(colouring):
            out[p[i]] = c
        return tuple(out)

    for n in (2, 3, 4):
        colourings = list(product(range(n), repeat=4))
        union_find = len(orbits_on(gens, colourings, act))
        burnside = d4.burnside_orbit_count(lambda p: n ** Permutation.cycle_count(p))
        assert burnside == union_find == (n**4 + 2 * n**3 + 3 * n**2 + 2 * n) // 8


# -- direct runner -----------------------------------------------------------


def _collect() -> dict[int, list]:
    out: dict[int, list] = {k: [] for k in CRITERIA}
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and callable(fn):
            out[int(name.split("_")[2])].append((name, fn))
    return out


def main() -> int:
    failed_any = False
    for num, tests in _collect().items():
        failures = []
        t0 = time.perf_counter()
        for name, fn in tests:
            try:
                fn()
            except Exception:  # report every criterion even if one breaks
                failures.append(name)
                traceback.print_exc(limit=1)
        verdict = "PASS" if not failures else "FAIL"
        failed_any |= bool(failures)
        extra = f" ({', '.join(failures)})" if failures else ""
        print(f"criterion {num:2d} {CRITERIA[num]}: {verdict}{extra} [{time.perf_counter() - t0:.1f}s]")
    return 1 if failed_any else 0


if __name__ == "__main__":
    sys.exit(main())
