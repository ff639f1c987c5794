import itertools
import random

import pytest

from util import brute_force_aut_order
from z4census.aut import are_isomorphic, automorphism_group, canonical_form
from z4census.census import (
    CensusInconsistencyError,
    ScanConfig,
    ScanTooLargeError,
    candidates_scanned,
    complement_pairs,
    enumerate_family,
    scan_generator,
    standard_generator,
    verify_structure_claim,
)
from z4census.graphs import Graph, complement, make_graph, relabel
from z4census.perms import Perm, pair_orbits, perm_from_cycles


def test_scan_standard_generator_finds_twelve_classes(family442):
    assert len(family442.classes) == 12
    assert family442.candidates_per_type == {(4, 4, 2): 8192}


def test_scan_rejects_non_order4_generator():
    cfg = ScanConfig()
    with pytest.raises(ValueError):
        scan_generator(Perm.identity(10), cfg)
    with pytest.raises(ValueError):
        scan_generator(perm_from_cycles([(0, 1)], 10), cfg)


def test_scan_class_cap():
    cfg = ScanConfig(max_scan_classes=5)
    with pytest.raises(ScanTooLargeError):
        scan_generator(standard_generator(), cfg)


def test_witnesses_are_invariant_with_aut_order_four(family442):
    for record in family442.classes:
        assert relabel(record.witness, record.generator) == record.witness
        assert automorphism_group(record.witness).order == 4
        assert canonical_form(record.witness).canonical_bytes == record.canonical_g6


def test_classes_pairwise_non_isomorphic(family442):
    classes = family442.classes
    for a, b in itertools.combinations(classes, 2):
        assert not are_isomorphic(a.witness, b.witness)


def test_scan_invariant_under_conjugation(family442):
    rng = random.Random(71)
    img = list(range(10))
    rng.shuffle(img)
    p = Perm(img)
    base = standard_generator()
    conj = p * base * p.inverse()
    assert conj.cycle_type() == (4, 4, 2)
    cfg = ScanConfig(cycle_types=[(4, 4, 2)])
    results = scan_generator(conj, cfg)
    assert [canon for canon, _ in results] == family442.canonical_strings()


def test_second_cycle_type_contributes_nothing():
    rep = perm_from_cycles([(0, 1, 2, 3), (4, 5, 6, 7)], 10)  # type (4,4,1,1)
    assert rep.cycle_type() == (4, 4, 1, 1)
    assert scan_generator(rep, ScanConfig()) == []


def test_candidates_scanned_counts():
    assert candidates_scanned(standard_generator()) == 8192
    assert candidates_scanned(perm_from_cycles([(0, 1, 2, 3)], 10)) == 1 << 23


def test_enumerate_family_n4_is_empty():
    fam = enumerate_family(ScanConfig(n=4))
    assert fam.classes == ()
    assert fam.candidates_per_type == {(4,): 4}
    # brute-force cross-check: no 4-vertex graph has automorphism order 4
    for bits in range(64):
        edges = [
            e
            for i, e in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            if (bits >> i) & 1
        ]
        assert brute_force_aut_order(make_graph(4, edges)) != 4


def test_enumerate_family_unknown_type_rejected():
    with pytest.raises(ValueError):
        enumerate_family(ScanConfig(cycle_types=[(5, 5)]))


def test_exploration_mode_higher_target_order():
    # n=4, automorphism order 8: the 4-cycle C4 and the perfect matching 2K2
    fam = enumerate_family(ScanConfig(n=4, target_order=8))
    assert len(fam.classes) == 2
    orders = {automorphism_group(c.witness).order for c in fam.classes}
    assert orders == {8}


def test_scan_parallel_chunks_deterministic(family442):
    cfg = ScanConfig(cycle_types=[(4, 4, 2)], parallel_chunks=2)
    fam2 = enumerate_family(cfg)
    assert fam2.canonical_strings() == family442.canonical_strings()
    assert [c.witness for c in fam2.classes] == [c.witness for c in family442.classes]


def test_complement_pairs(family442):
    pairs = complement_pairs(family442)
    assert len(pairs) == 6
    covered = sorted(x for pair in pairs for x in pair)
    assert covered == list(range(12))
    for i, j in pairs:
        assert i != j
        wi = family442.classes[i].witness
        wj = family442.classes[j].witness
        assert wi.edge_count() + wj.edge_count() == 45
        assert are_isomorphic(complement(wi), wj)


def test_complement_pairs_rejects_incomplete_census(family442):
    from z4census.census import CensusClass, FamilyResult

    broken = FamilyResult(family442.classes[:1], {}, {})
    with pytest.raises(CensusInconsistencyError):
        complement_pairs(broken)
    with pytest.raises(ValueError):
        complement_pairs(FamilyResult((), {}, {}))


def test_edge_histogram_symmetric(family442):
    counts = sorted(c.witness.edge_count() for c in family442.classes)
    assert counts == sorted(45 - c for c in counts)


def test_structure_claim(family442):
    report = verify_structure_claim(family442)
    assert report.verified
    assert report.distinct_patterns == 12
    assert len(report.zone_patterns) == 12
    base = standard_generator()
    zone_pairs = {
        (u, v)
        for u in range(10)
        for v in range(u + 1, 10)
        if ({u, v} <= {0, 1, 2, 3}) or ({u, v} <= {4, 5, 6, 7}) or {u, v} == {8, 9}
    }
    shared = set(report.shared_exterior_edges)
    assert shared.isdisjoint(zone_pairs)
    for canon, wit_g6 in zip(family442.canonical_strings(), report.witnesses):
        from z4census.graphs import graph6_decode

        w = graph6_decode(wit_g6)
        assert relabel(w, base) == w
        assert canonical_form(w).canonical_bytes == canon
        # witness agrees with the shared exterior outside the zones
        wedges = {e for e in w.edges() if e not in zone_pairs}
        assert wedges == shared


def test_zone_classes_are_complement_stable():
    # complementation maps interior pairs to interior pairs, so the zone
    # frame is preserved under complementing any witness
    base = standard_generator()
    zone_pairs = {
        (u, v)
        for u in range(10)
        for v in range(u + 1, 10)
        if ({u, v} <= {0, 1, 2, 3}) or ({u, v} <= {4, 5, 6, 7}) or {u, v} == {8, 9}
    }
    for cls in pair_orbits(base):
        inside = [p in zone_pairs for p in cls]
        assert all(inside) or not any(inside)


def test_family_result_deterministic(family442):
    fam2 = enumerate_family(ScanConfig(cycle_types=[(4, 4, 2)]))
    assert fam2.canonical_strings() == family442.canonical_strings()
    assert [c.witness for c in fam2.classes] == [c.witness for c in family442.classes]
    assert [c.generator for c in fam2.classes] == [
        c.generator for c in family442.classes
    ]
