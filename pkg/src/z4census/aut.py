"""Automorphism groups, canonical labeling and isomorphism testing.

The engine is a partition-refinement backtracking search over ordered vertex
partitions: cells are refined to the coarsest equitable partition, the first
non-singleton cell of minimal size is branched on, and leaves (discrete
partitions) yield labeled-graph certificates.  Equal certificates expose
automorphisms; the lexicographically least certificate over all leaves is
the canonical form.  Discovered automorphisms prune branches lying in the
same orbit of the current stabilizer, which keeps the tree small.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perms
from .graphs import Graph, graph6_encode, relabel
from .perms import Perm


@dataclass(frozen=True)
class AutResult:
    """Full automorphism group data of one graph."""

    generators: tuple[Perm, ...]
    order: int
    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling (vertex -> canonical position) and certificate."""

    labeling: Perm
    canonical_bytes: str


def _refine_cells(rows, cells, splitters):
    """Coarsest equitable refinement of an ordered partition.

    ``cells`` is a list of sorted vertex lists; ``splitters`` is a list of
    vertex bitmasks to process (None means every initial cell).  Split
    fragments are ordered by ascending neighbor count, which keeps the
    operator deterministic and label-equivariant.
    """
    cells = [list(c) for c in cells]
    n_cells = len(cells)
    total = sum(len(c) for c in cells)
    if splitters is None:
        work = [_mask_of(c) for c in cells]
    else:
        work = list(splitters)
    qi = 0
    while qi < len(work):
        if n_cells == total:  # discrete already; no further split possible
            break
        w = work[qi]
        qi += 1
        i = 0
        while i < n_cells:
            cell = cells[i]
            lc = len(cell)
            if lc == 2:
                a, b = cell
                da = (rows[a] & w).bit_count()
                db = (rows[b] & w).bit_count()
                if da != db:
                    if da > db:
                        a, b = b, a
                    # fragment order (and worklist order) must follow the
                    # neighbor counts, or refinement loses label-equivariance
                    cells[i : i + 1] = [[a], [b]]
                    work.append(1 << a)
                    work.append(1 << b)
                    n_cells += 1
                    i += 2
                    continue
            elif lc > 2:
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    d = (rows[v] & w).bit_count()
                    if d in buckets:
                        buckets[d].append(v)
                    else:
                        buckets[d] = [v]
                if len(buckets) > 1:
                    parts = [buckets[d] for d in sorted(buckets)]
                    cells[i : i + 1] = parts
                    for part in parts:
                        m = 0
                        for v in part:
                            m |= 1 << v
                        work.append(m)
                    n_cells += len(parts) - 1
                    i += len(parts)
                    continue
            i += 1
    return cells


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def refine(g: Graph, partition) -> list[list[int]]:
    """Public equitable-refinement entry point.

    ``partition`` is an ordered list of disjoint vertex groups covering
    0..n-1.  The result refines the input, is equitable (any two vertices in
    one cell have equally many neighbors in every cell) and is idempotent.
    """
    cells = [sorted(c) for c in partition]
    seen: set[int] = set()
    for cell in cells:
        if not cell:
            raise ValueError("empty cell in partition")
        for v in cell:
            if v in seen or not 0 <= v < g.n:
                raise ValueError(f"bad partition entry {v}")
            seen.add(v)
    if len(seen) != g.n:
        raise ValueError("partition does not cover all vertices")
    return _refine_cells(g.rows, cells, None)


def _search(
    rows,
    n: int,
    *,
    want_canon: bool,
    seed_gens=(),
    known: frozenset | None = None,
    stop_on_extra: bool = False,
    verify: bool = True,
):
    """Core refinement-tree search.

    Returns ``(generators, best_lab, extra)`` where ``generators`` are the
    discovered automorphisms (image tuples, excluding seeds), ``best_lab``
    the leaf ordering realizing the least certificate (canonical mode only)
    and ``extra`` the first automorphism found outside ``known`` when
    ``stop_on_extra`` is set.

    ``seed_gens`` must be genuine automorphisms of the graph; they join the
    orbit pruning from the start.
    """
    if n == 0:
        return [], (), None

    identity = tuple(range(n))
    gens: list[tuple[int, ...]] = []
    gen_set: set[tuple[int, ...]] = set()
    all_gens = [tuple(s) for s in seed_gens if tuple(s) != identity]
    state = {
        "first_key": None,
        "first_pos": None,  # vertex -> position in first leaf
        "best_key": None,
        "best_lab": None,
        "extra": None,
    }
    prefix: list[int] = []

    def record(tau: tuple[int, ...]) -> None:
        if verify:
            for v in range(n):
                row = rows[v]
                img = 0
                while row:
                    low = row & -row
                    img |= 1 << tau[low.bit_length() - 1]
                    row ^= low
                if img != rows[tau[v]]:
                    raise RuntimeError("internal error: leaf map is not an automorphism")
        if tau != identity and tau not in gen_set:
            gen_set.add(tau)
            gens.append(tau)
            all_gens.append(tau)
        if stop_on_extra and known is not None and tau not in known:
            state["extra"] = tau

    def leaf(cells) -> None:
        lab = [c[0] for c in cells]
        key = 0
        for j in range(1, n):
            lj = lab[j]
            rj = rows[lj]
            for i in range(j):
                key = (key << 1) | ((rj >> lab[i]) & 1)
        lab_t = tuple(lab)
        if state["first_key"] is None:
            pos = [0] * n
            for i, v in enumerate(lab_t):
                pos[v] = i
            state["first_key"] = key
            state["first_pos"] = pos
            if want_canon:
                state["best_key"] = key
                state["best_lab"] = lab_t
            return
        if key == state["first_key"]:
            pos0 = state["first_pos"]
            tau = tuple(lab_t[pos0[v]] for v in range(n))
            if tau != identity:
                record(tau)
        if want_canon and key < state["best_key"]:
            state["best_key"] = key
            state["best_lab"] = lab_t

    def rec(cells) -> None:
        ti = -1
        tsize = n + 1
        for i, c in enumerate(cells):
            lc = len(c)
            if 1 < lc < tsize:
                ti = i
                tsize = lc
                if lc == 2:
                    break
        if ti == -1:
            leaf(cells)
            return
        cell = cells[ti]
        head = cells[:ti]
        tail = cells[ti + 1 :]
        branched: list[int] = []
        for v in cell:
            if branched:
                stab = [g for g in all_gens if all(g[x] == x for x in prefix)]
                if stab:
                    orbit = set(branched)
                    stack = list(branched)
                    while stack:
                        x = stack.pop()
                        for gp in stab:
                            y = gp[x]
                            if y not in orbit:
                                orbit.add(y)
                                stack.append(y)
                    if v in orbit:
                        continue
            branched.append(v)
            rest = [u for u in cell if u != v]
            child = _refine_cells(rows, head + [[v], rest] + tail, [1 << v])
            prefix.append(v)
            rec(child)
            prefix.pop()
            if state["extra"] is not None:
                return

    root = _refine_cells(rows, [list(range(n))], None)
    rec(root)
    return gens, state["best_lab"], state["extra"]


def automorphism_group(g: Graph) -> AutResult:
    """Generators, exact order and orbits of the full automorphism group.

    The order is recomputed from the generators through the stabilizer
    chain (an independent code path from the tree search), so the two
    agreeing is itself a consistency check.
    """
    gens_raw, _, _ = _search(g.rows, g.n, want_canon=False)
    generators = tuple(Perm(t) for t in gens_raw)
    order = perms.group_order(generators) if generators else 1
    vorbits = tuple(
        tuple(c) for c in perms.vertex_orbits(generators, g.n)
    )

    def pair_act(p, pair):
        a, b = p[pair[0]], p[pair[1]]
        return (a, b) if a < b else (b, a)

    eorbits = tuple(
        tuple(c)
        for c in perms.orbit_partition(g.edges(), generators, pair_act)
    )
    return AutResult(generators, order, vorbits, eorbits)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical labeling and graph6 certificate.

    The certificate is the lexicographically least graph6 string over all
    leaves of the refinement tree, so two graphs are isomorphic exactly when
    their certificates agree.
    """
    if g.n == 0:
        return CanonicalForm(Perm(()), graph6_encode(g))
    _, best_lab, _ = _search(g.rows, g.n, want_canon=True)
    labeling = Perm(best_lab).inverse()  # vertex -> canonical position
    return CanonicalForm(labeling, graph6_encode(relabel(g, labeling)))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """True iff an edge-preserving bijection exists (canonical certificates agree)."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a).canonical_bytes == canonical_form(b).canonical_bytes


def automorphism_order_exceeds(rows, n: int, known_group) -> bool:
    """True iff Aut of the graph given by bit-rows properly contains ``known_group``.

    ``known_group`` must be a subgroup of the automorphism group, supplied
    as image tuples including the identity.  Used by the census scan where
    every candidate is invariant under the scanned generator by
    construction: the search seeds its pruning with the known subgroup and
    stops at the first automorphism outside it.
    """
    known = frozenset(known_group)
    _, _, extra = _search(
        rows,
        n,
        want_canon=False,
        seed_gens=known,
        known=known,
        stop_on_extra=True,
        verify=False,
    )
    return extra is not None


def twin_pair_exists(rows, n: int) -> bool:
    """True iff some pair of vertices has identical neighborhoods off the pair.

    Such a pair can be swapped by a transposition fixing everything else, so
    the automorphism group contains that transposition.  No power of an
    order-4 permutation containing a 4-cycle is a transposition, which makes
    this a sound fast rejection test for the census scan.
    """
    for u in range(n):
        ru = rows[u]
        bu = 1 << u
        for v in range(u + 1, n):
            m = ~(bu | (1 << v))
            if ru & m == rows[v] & m:
                return True
    return False
