import random

import networkx as nx
import pytest

from util import (
    brute_force_aut_order,
    complete_graph,
    cycle_graph,
    k33_graph,
    path_graph,
    pentaprism_graph,
    petersen_graph,
    prism_graph,
    random_graph,
    star_graph,
    to_nx,
    two_triangles,
)
from z4census.aut import (
    are_isomorphic,
    automorphism_group,
    automorphism_order_exceeds,
    canonical_form,
    refine,
    twin_pair_exists,
)
from z4census.graphs import complement, graph6_decode, make_graph, relabel
from z4census.perms import Perm, group_order, pair_orbits, perm_from_cycles


# ---------------------------------------------------------------------------
# refinement


def test_refine_regular_graph_stays_one_cell():
    assert refine(cycle_graph(5), [list(range(5))]) == [[0, 1, 2, 3, 4]]


def test_refine_star_splits_by_degree():
    cells = refine(star_graph(4), [list(range(5))])
    assert cells == [[1, 2, 3, 4], [0]] or cells == [[0], [1, 2, 3, 4]]
    # leaves have 0 neighbors among leaves, center has 4: leaves sort first
    assert cells[0] == [1, 2, 3, 4]


def test_refine_discrete_is_fixed_point():
    g = make_graph(3, [(0, 1)])
    discrete = [[0], [1], [2]]
    assert refine(g, discrete) == discrete


def test_refine_is_equitable_and_refines_input():
    rng = random.Random(31)
    for _ in range(100):
        g = random_graph(rng, 1, 9)
        cells = refine(g, [list(range(g.n))])
        flat = sorted(v for c in cells for v in c)
        assert flat == list(range(g.n))
        # equitable: equal neighbor counts into every cell
        for cell in cells:
            for other in cells:
                counts = {
                    sum(1 for w in other if g.has_edge(v, w)) for v in cell
                }
                assert len(counts) == 1
        # idempotent
        assert refine(g, cells) == cells


def test_refine_rejects_bad_partition():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        refine(g, [[0, 1]])
    with pytest.raises(ValueError):
        refine(g, [[0, 1, 2], [2]])


# ---------------------------------------------------------------------------
# automorphism groups


def test_aut_complete_graph():
    assert automorphism_group(complete_graph(4)).order == 24


def test_aut_petersen():
    res = automorphism_group(petersen_graph())
    assert res.order == 120
    assert len(res.vertex_orbits) == 1
    assert len(res.edge_orbits) == 1


def test_generators_are_exact_automorphisms():
    rng = random.Random(32)
    for _ in range(100):
        g = random_graph(rng, 1, 10)
        res = automorphism_group(g)
        for p in res.generators:
            assert relabel(g, p) == g


def test_aut_order_vs_brute_force():
    rng = random.Random(33)
    for _ in range(200):
        g = random_graph(rng, 1, 7)
        assert automorphism_group(g).order == brute_force_aut_order(g)


def test_aut_order_from_generators_is_consistent():
    rng = random.Random(34)
    for _ in range(50):
        g = random_graph(rng, 1, 8)
        res = automorphism_group(g)
        assert group_order(res.generators) == res.order or not res.generators


def test_aut_equals_aut_of_complement():
    rng = random.Random(35)
    for _ in range(60):
        g = random_graph(rng, 1, 9)
        c = complement(g)
        ra, rc = automorphism_group(g), automorphism_group(c)
        assert ra.order == rc.order
        for p in ra.generators:
            assert relabel(c, p) == c
        for p in rc.generators:
            assert relabel(g, p) == g


def test_orbits_consistent_with_generators():
    g = petersen_graph()
    res = automorphism_group(g)
    for orbit in res.vertex_orbits:
        s = set(orbit)
        for p in res.generators:
            assert {p[v] for v in s} == s


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


def test_canonical_invariance_under_relabeling():
    rng = random.Random(36)
    for _ in range(60):
        g = random_graph(rng, 1, 10)
        canon = canonical_form(g).canonical_bytes
        for _ in range(10):
            img = list(range(g.n))
            rng.shuffle(img)
            assert canonical_form(relabel(g, Perm(img))).canonical_bytes == canon


def test_canonical_labeling_realizes_certificate():
    rng = random.Random(37)
    for _ in range(50):
        g = random_graph(rng, 1, 10)
        cf = canonical_form(g)
        assert graph6_decode(cf.canonical_bytes) == relabel(g, cf.labeling)


def test_canonical_triangle_any_labeling():
    tri = complete_graph(3)
    canon = canonical_form(tri).canonical_bytes
    for img in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0)]:
        assert canonical_form(relabel(tri, Perm(img))).canonical_bytes == canon


def test_canonical_stable_across_runs():
    g = petersen_graph()
    assert canonical_form(g).canonical_bytes == canonical_form(g).canonical_bytes


def test_canonical_discriminates_same_degree_pairs():
    pairs = [
        (cycle_graph(6), two_triangles()),
        (k33_graph(), prism_graph()),
        (petersen_graph(), pentaprism_graph()),
        (make_graph(8, [(i, (i + 1) % 8) for i in range(8)]),
         make_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])),
    ]
    for a, b in pairs:
        assert sorted(a.degrees()) == sorted(b.degrees())
        assert canonical_form(a).canonical_bytes != canonical_form(b).canonical_bytes
        assert not are_isomorphic(a, b)


def test_iso_examples():
    rng = random.Random(38)
    c5 = cycle_graph(5)
    img = list(range(5))
    rng.shuffle(img)
    assert are_isomorphic(c5, relabel(c5, Perm(img)))
    assert not are_isomorphic(cycle_graph(6), two_triangles())
    assert canonical_form(cycle_graph(6)).canonical_bytes != canonical_form(
        k33_graph()
    ).canonical_bytes


def test_iso_vs_networkx_vf2():
    rng = random.Random(39)
    for _ in range(150):
        a = random_graph(rng, 1, 8)
        if rng.random() < 0.5:
            img = list(range(a.n))
            rng.shuffle(img)
            b = relabel(a, Perm(img))
        else:
            b = random_graph(rng, a.n, a.n)
        assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


# ---------------------------------------------------------------------------
# scan kernel primitives


def test_twin_pair_detection():
    # two leaves of a star are twins; a path P4 has none
    assert twin_pair_exists(star_graph(3).rows, 4)
    assert not twin_pair_exists(path_graph(4).rows, 4)


def test_order_exceeds_kernel_matches_engine():
    rng = random.Random(40)
    base = perm_from_cycles([(0, 1, 2, 3), (4, 5), (6, 7)], 10)
    known = frozenset(tuple((base**k).img) for k in range(4))
    classes = pair_orbits(base)
    for _ in range(150):
        mask = rng.getrandbits(len(classes))
        edges = [e for ci, cls in enumerate(classes) if (mask >> ci) & 1 for e in cls]
        g = make_graph(10, edges)
        exceeds = automorphism_order_exceeds(g.rows, 10, known)
        assert exceeds == (automorphism_group(g).order > 4)
