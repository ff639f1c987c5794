"""Census report assembly: the machine-checked verification record.

The JSON schema is regression-friendly: top-level keys ``census_id``,
``config``, ``classes`` and ``proposition_checks`` (plus ``structure_check``
and one isolated ``generated_at`` timestamp key).  Each class record holds
the canonical graph6 string, the witness, its generator in 1-indexed cycle
notation, the full invariant profile, the complement partner index and the
interior zone pattern.  Verdicts are PASS, FAIL (could not evaluate) or
REFUTED (computation contradicts the claim).
"""

from __future__ import annotations

import hashlib
import math
from datetime import datetime, timezone

from .census import (
    FamilyResult,
    ScanConfig,
    StructureClaimReport,
    complement_pairs,
    verify_structure_claim,
)
from .graphs import Graph
from .invariants import InvariantProfile, char_poly_string, profile

# expansion of (x^2-2)^2 (x^3-2x^2-8x-4) (x^3+2x^2-4x-4), ascending degree;
# the spectral fingerprint that pins down the distinguished planar class
PLANAR_CLASS_CHAR_POLY = (64, 192, 64, -256, -176, 112, 100, -16, -20, 0, 1)

PASS = "PASS"
FAIL = "FAIL"
REFUTED = "REFUTED"


def census_id(canonical_strings) -> str:
    """Content hash of the census: sha256 over sorted canonical records."""
    blob = "".join(s + "\n" for s in sorted(canonical_strings))
    return hashlib.sha256(blob.encode("ascii")).hexdigest()


def _json_num(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def profile_to_dict(p: InvariantProfile) -> dict:
    return {
        "n": p.n,
        "edge_count": p.edge_count,
        "degrees": list(p.degrees),
        "min_degree": p.min_degree,
        "max_degree": p.max_degree,
        "girth": _json_num(p.girth),
        "clique_number": p.clique_number,
        "chromatic_number": p.chromatic_number,
        "vertex_connectivity": p.vertex_connectivity,
        "edge_connectivity": p.edge_connectivity,
        "diameter": _json_num(p.diameter),
        "radius": _json_num(p.radius),
        "planar": p.planar,
        "eulerian": p.eulerian,
        "hamiltonian": p.hamiltonian,
        "hamiltonian_cycle": (
            None if p.hamiltonian_cycle is None else [v + 1 for v in p.hamiltonian_cycle]
        ),
        "vertex_transitive": p.vertex_transitive,
        "edge_transitive": p.edge_transitive,
        "distance_transitive": p.distance_transitive,
        "core_kind": p.core_kind,
        "core_order": p.core_order,
        "char_poly": list(p.char_poly),
        "char_poly_pretty": char_poly_string(p.char_poly),
        "aut_order": p.aut_order,
        "orbit_sizes": list(p.orbit_sizes),
    }


def _check(item: int, name: str, fn) -> dict:
    try:
        verdict, evidence = fn()
    except Exception as exc:  # evaluation failure, not a refutation
        return {"item": item, "claim": name, "verdict": FAIL, "evidence": str(exc)}
    return {"item": item, "claim": name, "verdict": verdict, "evidence": evidence}


def evaluate_propositions(
    family: FamilyResult,
    profiles: list[InvariantProfile],
    pairs: list[tuple[int, int]],
    structure: StructureClaimReport,
) -> list[dict]:
    """The 14-item verification battery over the enumerated census."""
    canons = family.canonical_strings()

    def offending(indices, measured) -> dict:
        return {
            "offending_classes": [canons[i] for i in indices],
            "measured": measured,
        }

    def all_classes(pred, describe) -> tuple[str, dict]:
        bad = [i for i, p in enumerate(profiles) if not pred(p)]
        measured = {canons[i]: describe(profiles[i]) for i in range(len(profiles))}
        if bad:
            return REFUTED, offending(bad, measured)
        return PASS, {"per_class": measured}

    def c1():
        count = len(family.classes)
        contributing = {
            ",".join(map(str, t)): c
            for t, c in sorted(family.per_cycle_type_counts.items())
        }
        ok = count == 12 and all(
            (c == 0) == (t != (4, 4, 2))
            for t, c in family.per_cycle_type_counts.items()
        )
        ev = {"class_count": count, "classes_per_cycle_type": contributing}
        return (PASS if ok else REFUTED), ev

    def c2():
        sums = [
            profiles[i].edge_count + profiles[j].edge_count for i, j in pairs
        ]
        ok = (
            len(pairs) == 6
            and all(i != j for i, j in pairs)
            and all(s == 45 for s in sums)
        )
        ev = {"pairs": [[canons[i], canons[j]] for i, j in pairs], "edge_sums": sums}
        return (PASS if ok else REFUTED), ev

    def c3():
        counts = sorted(p.edge_count for p in profiles)
        ok = all(18 <= c <= 27 for c in counts) and counts[0] == 18 and counts[-1] == 27
        return (PASS if ok else REFUTED), {"edge_counts": counts}

    def c4():
        return all_classes(
            lambda p: 3 <= p.min_degree <= 5 and 4 <= p.max_degree <= 6,
            lambda p: [p.min_degree, p.max_degree],
        )

    def c5():
        return all_classes(
            lambda p: p.orbit_sizes == (4, 4, 2), lambda p: list(p.orbit_sizes)
        )

    def c6():
        return all_classes(lambda p: p.girth == 3, lambda p: _json_num(p.girth))

    def c7():
        return all_classes(
            lambda p: p.clique_number in (3, 4), lambda p: p.clique_number
        )

    def c8():
        return all_classes(
            lambda p: p.core_kind in ("K3", "K4", "SELF"), lambda p: p.core_kind
        )

    def c9():
        return all_classes(
            lambda p: p.vertex_connectivity == p.edge_connectivity
            and 3 <= p.vertex_connectivity <= 5,
            lambda p: [p.vertex_connectivity, p.edge_connectivity],
        )

    def c10():
        return all_classes(
            lambda p: p.radius == 2 and p.diameter in (2, 3),
            lambda p: [_json_num(p.diameter), _json_num(p.radius)],
        )

    def c11():
        return all_classes(
            lambda p: p.chromatic_number in (3, 4), lambda p: p.chromatic_number
        )

    def c12():
        planar = [i for i, p in enumerate(profiles) if p.planar]
        ok = len(planar) == 1
        return (PASS if ok else REFUTED), {
            "planar_classes": [canons[i] for i in planar]
        }

    def c13():
        euler = [i for i, p in enumerate(profiles) if p.eulerian]
        ok = len(euler) == 1
        return (PASS if ok else REFUTED), {
            "eulerian_classes": [canons[i] for i in euler]
        }

    def c14():
        ham = all_classes(lambda p: p.hamiltonian, lambda p: p.hamiltonian)
        return ham

    def c15():
        return all_classes(
            lambda p: not (
                p.vertex_transitive or p.edge_transitive or p.distance_transitive
            ),
            lambda p: [p.vertex_transitive, p.edge_transitive, p.distance_transitive],
        )

    checks = [
        _check(1, "census has exactly 12 classes, all from cycle type (4,4,2)", c1),
        _check(1, "classes form 6 complement pairs, none self-paired", c2),
        _check(2, "edge counts lie in [18, 27] with both endpoints attained", c3),
        _check(3, "minimum degree in [3, 5] and maximum degree in [4, 6]", c4),
        _check(4, "vertex orbit sizes are {4, 4, 2} for every class", c5),
        _check(5, "girth is 3 for every class", c6),
        _check(6, "clique number is 3 or 4", c7),
        _check(7, "every core is K3, K4 or the graph itself", c8),
        _check(8, "vertex connectivity equals edge connectivity, in [3, 5]", c9),
        _check(9, "radius is 2 and diameter is 2 or 3", c10),
        _check(10, "chromatic number is 3 or 4", c11),
        _check(11, "exactly one class is planar", c12),
        _check(12, "exactly one class is Eulerian", c13),
        _check(13, "every class is Hamiltonian with a validated cycle", c14),
        _check(14, "no class is vertex, edge or distance transitive", c15),
    ]
    return checks


def distinguished_class_facts(
    family: FamilyResult, profiles: list[InvariantProfile]
) -> dict:
    """Identification of the two distinguished classes by their properties."""
    canons = family.canonical_strings()
    planar = [i for i, p in enumerate(profiles) if p.planar]
    min_edges = min(p.edge_count for p in profiles)
    minimal = [i for i, p in enumerate(profiles) if p.edge_count == min_edges]
    facts: dict = {}
    if len(planar) == 1:
        i = planar[0]
        facts["planar_class"] = {
            "canonical_g6": canons[i],
            "core_kind": profiles[i].core_kind,
            "char_poly": list(profiles[i].char_poly),
            "char_poly_matches_expected_factorization": (
                profiles[i].char_poly == PLANAR_CLASS_CHAR_POLY
            ),
        }
    if len(minimal) == 1:
        i = minimal[0]
        facts["minimum_edge_class"] = {
            "canonical_g6": canons[i],
            "edge_count": profiles[i].edge_count,
            "core_kind": profiles[i].core_kind,
            "is_own_core": profiles[i].core_kind == "SELF",
        }
    return facts


def build_report(
    family: FamilyResult,
    cfg: ScanConfig,
    structure: StructureClaimReport | None = None,
    timings: dict | None = None,
    include_timestamp: bool = True,
) -> dict:
    """Full verification report for an enumerated census."""
    profiles = [profile(c.witness) for c in family.classes]
    pairs = complement_pairs(family)
    if structure is None:
        structure = verify_structure_claim(family)
    partner = {}
    for i, j in pairs:
        partner[i] = j
        partner[j] = i
    canon_to_zone = dict(zip(family.canonical_strings(), structure.zone_patterns))
    classes = []
    for i, (record, prof) in enumerate(zip(family.classes, profiles)):
        classes.append(
            {
                "index": i,
                "canonical_g6": record.canonical_g6,
                "witness_g6": _encode(record.witness),
                "witness_edges": [[u + 1, v + 1] for u, v in record.witness.edges()],
                "generator": record.generator.cycle_string(one_indexed=True),
                "generator_cycle_type": list(record.generator.cycle_type()),
                "profile": profile_to_dict(prof),
                "complement_partner": partner.get(i),
                "zone_pattern": canon_to_zone.get(record.canonical_g6),
            }
        )
    checks = evaluate_propositions(family, profiles, pairs, structure)
    report = {
        "census_id": census_id(family.canonical_strings()),
        "config": {
            "n": cfg.n,
            "aut_order": cfg.target_order,
            "cycle_types": (
                "all"
                if cfg.cycle_types == "all"
                else [list(t) for t in cfg.wanted_types()]
            ),
            "threads": cfg.parallel_chunks,
        },
        "candidates_per_cycle_type": {
            ",".join(map(str, t)): c
            for t, c in sorted(family.candidates_per_type.items())
        },
        "classes": classes,
        "proposition_checks": checks,
        "distinguished_classes": distinguished_class_facts(family, profiles),
        "structure_check": {
            "verified": structure.verified,
            "detail": structure.detail,
            "shared_exterior_edges": [
                [u + 1, v + 1] for u, v in structure.shared_exterior_edges
            ],
            "zone_patterns": list(structure.zone_patterns),
            "zone_witnesses_g6": list(structure.witnesses),
            "distinct_zone_patterns": structure.distinct_patterns,
        },
    }
    if timings:
        report["timings_seconds"] = {k: round(v, 3) for k, v in timings.items()}
    if include_timestamp:
        report["generated_at"] = datetime.now(timezone.utc).isoformat()
    return report


def _encode(g: Graph) -> str:
    from .graphs import graph6_encode

    return graph6_encode(g)


def report_verdict(report: dict) -> str:
    """Overall verdict: PASS, FAIL or REFUTED (structure check included)."""
    verdicts = {c["verdict"] for c in report["proposition_checks"]}
    if not report["structure_check"]["verified"]:
        verdicts.add(REFUTED)
    if REFUTED in verdicts:
        return REFUTED
    if FAIL in verdicts:
        return FAIL
    return PASS


_TABLE_COLUMNS = [
    ("n", "n"),
    ("edges", "edge_count"),
    ("deg_min", "min_degree"),
    ("deg_max", "max_degree"),
    ("girth", "girth"),
    ("omega", "clique_number"),
    ("chi", "chromatic_number"),
    ("kappa", "vertex_connectivity"),
    ("lambda", "edge_connectivity"),
    ("diam", "diameter"),
    ("rad", "radius"),
    ("planar", "planar"),
    ("euler", "eulerian"),
    ("hamil", "hamiltonian"),
    ("vtrans", "vertex_transitive"),
    ("etrans", "edge_transitive"),
    ("dtrans", "distance_transitive"),
    ("core", "core_kind"),
    ("aut", "aut_order"),
]


def render_table(rows: list[dict]) -> str:
    """Aligned text table for a list of profile dicts (plus a 'graph' key)."""
    headers = ["graph"] + [h for h, _ in _TABLE_COLUMNS]
    table = [headers]
    for row in rows:
        cells = [row["graph"]]
        for _, key in _TABLE_COLUMNS:
            val = row[key]
            if isinstance(val, bool):
                val = "yes" if val else "no"
            cells.append(str(val))
        table.append(cells)
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = []
    for ri, r in enumerate(table):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if ri == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
