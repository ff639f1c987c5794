"""Exact structural invariants for small graphs.

Everything is computed exactly: branch-and-bound for clique and chromatic
numbers, max-flow/Menger for connectivities, face-embedding planarity with
a verifiable rotation-system certificate (cross-checked by a forbidden
minor search on negative answers), backtracking Hamiltonicity with a
validated certificate cycle, retract search for the homomorphism core, and
a fraction-free integer determinant for the characteristic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .aut import AutResult, are_isomorphic, automorphism_group, canonical_form
from .graphs import Graph, induced_subgraph
from .perms import orbit_partition

INF = math.inf


class InvariantError(RuntimeError):
    """Internal consistency violation between computed invariants."""


# ---------------------------------------------------------------------------
# degrees, girth, metric


def degree_stats(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(min degree, max degree, sorted degree multiset)."""
    if g.n == 0:
        raise ValueError("degree statistics undefined on the empty graph")
    degs = tuple(sorted(g.degrees()))
    return degs[0], degs[-1], degs


def _bfs_dist(rows, n: int, root: int) -> list[int]:
    dist = [-1] * n
    dist[root] = 0
    queue = [root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        row = rows[u]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def girth(g: Graph):
    """Length of a shortest cycle, or infinity for forests.

    BFS from every vertex; any non-tree edge closes a walk whose length
    bounds the girth from above, and the BFS rooted on a shortest cycle
    attains it.
    """
    n = g.n
    rows = g.rows
    best = INF
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            du = dist[u]
            if 2 * du >= best:
                continue
            row = rows[u]
            while row:
                low = row & -row
                v = low.bit_length() - 1
                row ^= low
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cand = du + dist[v] + 1
                    if cand < best:
                        best = cand
    return best


def metric(g: Graph):
    """(diameter, radius, eccentricities); infinities on disconnected graphs."""
    n = g.n
    if n == 0:
        return 0, 0, ()
    ecc = []
    for v in range(n):
        dist = _bfs_dist(g.rows, n, v)
        ecc.append(INF if -1 in dist else max(dist))
    return max(ecc), min(ecc), tuple(ecc)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return -1 not in _bfs_dist(g.rows, g.n, 0)


# ---------------------------------------------------------------------------
# clique and chromatic numbers


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound over candidate bitsets."""
    rows = g.rows
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            sub = rows[low.bit_length() - 1] & cand
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best:
                best = size + 1

    if g.n:
        expand((1 << g.n) - 1, 0)
    return best


def _k_colorable(rows, n: int, k: int) -> list[int] | None:
    """A proper k-coloring or None: branch on the most saturated vertex,
    never opening more than one fresh color."""
    colors = [-1] * n

    def neighbor_colors(v: int) -> int:
        seen = 0
        row = rows[v]
        while row:
            low = row & -row
            c = colors[low.bit_length() - 1]
            row ^= low
            if c >= 0:
                seen |= 1 << c
        return seen

    def bt(done: int, used: int) -> bool:
        if done == n:
            return True
        best_v = -1
        best_key = (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (neighbor_colors(v).bit_count(), rows[v].bit_count())
                if key > best_key:
                    best_key = key
                    best_v = v
        v = best_v
        forbidden = neighbor_colors(v)
        for c in range(min(used + 1, k)):
            if not (forbidden >> c) & 1:
                colors[v] = c
                if bt(done + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return colors if bt(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number (branch and bound above the clique bound)."""
    n = g.n
    if n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    for k in range(clique_number(g), n + 1):
        if _k_colorable(g.rows, n, k) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")


# ---------------------------------------------------------------------------
# connectivity (Menger via unit-capacity max-flow)


def _max_flow(cap, source: int, sink: int) -> int:
    """Edmonds-Karp on a dense capacity matrix (tiny networks only)."""
    size = len(cap)
    flow = 0
    while True:
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        qi = 0
        while qi < len(queue) and parent[sink] == -1:
            u = queue[qi]
            qi += 1
            row = cap[u]
            for v in range(size):
                if parent[v] == -1 and row[v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] == -1:
            return flow
        path = []
        v = sink
        while v != source:
            path.append(v)
            v = parent[v]
        bottleneck = min(cap[parent[v]][v] for v in path)
        for v in path:
            u = parent[v]
            cap[u][v] -= bottleneck
            cap[v][u] += bottleneck
        flow += bottleneck


def connectivity(g: Graph) -> tuple[int, int]:
    """(vertex connectivity, edge connectivity), both exact.

    Vertex connectivity: minimum over non-adjacent pairs of the max-flow in
    the split-vertex network (n-1 for complete graphs, by convention).
    Edge connectivity: minimum max-flow from vertex 0 to every other vertex
    with unit edge capacities.
    """
    n = g.n
    if n < 2:
        raise ValueError("connectivity undefined for n < 2")
    rows = g.rows
    big = n * n

    kappa = n - 1
    for s in range(n):
        if kappa == 0:
            break
        for t in range(s + 1, n):
            if (rows[s] >> t) & 1:
                continue
            cap = [[0] * (2 * n) for _ in range(2 * n)]
            for v in range(n):
                cap[v][v + n] = big if v in (s, t) else 1
            for u in range(n):
                row = rows[u]
                while row:
                    low = row & -row
                    v = low.bit_length() - 1
                    row ^= low
                    cap[u + n][v] = big
            kappa = min(kappa, _max_flow(cap, s + n, t))
            if kappa == 0:
                break

    lam = n * n
    for t in range(1, n):
        cap = [[0] * n for _ in range(n)]
        for u in range(n):
            row = rows[u]
            while row:
                low = row & -row
                cap[u][low.bit_length() - 1] = 1
                row ^= low
        lam = min(lam, _max_flow(cap, 0, t))
        if lam == 0:
            break
    return kappa, lam


# ---------------------------------------------------------------------------
# Eulerian / Hamiltonian


def is_eulerian(g: Graph) -> bool:
    """All degrees even and at most one component carries edges."""
    if any(d % 2 for d in g.degrees()):
        return False
    seeds = [v for v in range(g.n) if g.rows[v]]
    if not seeds:
        return True  # degenerate: no edges at all
    dist = _bfs_dist(g.rows, g.n, seeds[0])
    return all(dist[v] >= 0 for v in seeds)


def is_hamiltonian(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Backtracking Hamiltonian-cycle search with a validated certificate."""
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonicity undefined for n < 3")
    if not is_connected(g):
        return False, None
    rows = g.rows
    if min(r.bit_count() for r in rows) < 2:
        return False, None
    full = (1 << n) - 1
    path = [0]

    def bt(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        free = full & ~visited
        # every unreached vertex still needs two cycle neighbors among the
        # unreached set and the two path endpoints
        need = free | (1 << v) | 1
        probe = free
        while probe:
            low = probe & -probe
            probe ^= low
            if (rows[low.bit_length() - 1] & (need ^ low)).bit_count() < 2:
                return False
        if not rows[0] & (free | (1 << v)):
            return False
        cand = rows[v] & free
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            path.append(u)
            if bt(u, visited | low):
                return True
            path.pop()
        return False

    if bt(0, 1):
        cycle = tuple(path)
        _validate_cycle(g, cycle)
        return True, cycle
    return False, None


def _validate_cycle(g: Graph, cycle) -> None:
    if cycle is None or sorted(cycle) != list(range(g.n)):
        raise InvariantError("certificate is not a spanning cycle")
    for i, u in enumerate(cycle):
        if not g.has_edge(u, cycle[(i + 1) % len(cycle)]):
            raise InvariantError("certificate cycle uses a non-edge")


# ---------------------------------------------------------------------------
# transitivity


def transitivity(g: Graph, aut: AutResult) -> tuple[bool, bool, bool]:
    """(vertex, edge, distance) transitivity from automorphism generators.

    Orbits of the generated group equal closures under the generators, so
    the group itself is never materialized.  Distance transitivity uses the
    usual convention of applying to connected graphs only.
    """
    vertex_t = len(aut.vertex_orbits) <= 1
    edge_t = len(aut.edge_orbits) <= 1
    if g.n == 0:
        return True, True, True
    if not is_connected(g):
        return vertex_t, edge_t, False
    gens = list(aut.generators)
    dist = [_bfs_dist(g.rows, g.n, v) for v in range(g.n)]
    diam = max(max(row) for row in dist)

    def act(p, pair):
        return (p[pair[0]], p[pair[1]])

    distance_t = vertex_t
    for d in range(1, diam + 1):
        if not distance_t:
            break
        pairs = [
            (u, v) for u in range(g.n) for v in range(g.n) if dist[u][v] == d
        ]
        if len(orbit_partition(pairs, gens, act)) > 1:
            distance_t = False
    return vertex_t, edge_t, distance_t


# ---------------------------------------------------------------------------
# homomorphism core


def _retraction_exists(g: Graph, subset) -> bool:
    """Is there a homomorphism g -> g[subset] fixing the subset pointwise?"""
    rows = g.rows
    smask = 0
    for v in subset:
        smask |= 1 << v
    outside = [v for v in range(g.n) if not (smask >> v) & 1]
    domains = {}
    for v in outside:
        dom = smask
        anchored = rows[v] & smask
        while anchored:
            low = anchored & -anchored
            anchored ^= low
            dom &= rows[low.bit_length() - 1]
        if not dom:
            return False
        domains[v] = dom

    def bt(doms, remaining) -> bool:
        if not remaining:
            return True
        v = min(remaining, key=lambda x: doms[x].bit_count())
        rest = [x for x in remaining if x != v]
        cand = doms[v]
        row_v = rows[v]
        while cand:
            low = cand & -cand
            cand ^= low
            img_row = rows[low.bit_length() - 1]
            new = dict(doms)
            ok = True
            for x in rest:
                if (row_v >> x) & 1:
                    nd = new[x] & img_row
                    if not nd:
                        ok = False
                        break
                    new[x] = nd
            if ok and bt(new, rest):
                return True
        return False

    return bt(domains, outside)


def hom_core(g: Graph) -> Graph:
    """The core: a minimum-order retract, unique up to isomorphism.

    Searches vertex subsets by increasing size for a retraction; the first
    hit is a minimum retract and therefore has no proper retract itself.
    Pruning uses three retract necessities: equal clique number, equal
    chromatic number, and connectedness when the graph is connected.
    """
    n = g.n
    if n == 0:
        return g
    if g.edge_count() == 0:
        return induced_subgraph(g, [0])
    omega = clique_number(g)
    chi = chromatic_number(g)
    connected = is_connected(g)
    for size in range(2, n):
        for subset in combinations(range(n), size):
            sub = induced_subgraph(g, subset)
            if clique_number(sub) != omega:
                continue
            if connected and not is_connected(sub):
                continue
            if chromatic_number(sub) != chi:
                continue
            if _retraction_exists(g, subset):
                return sub
    return g


# ---------------------------------------------------------------------------
# characteristic polynomial (exact integers)


def _p_normalize(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _p_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _p_normalize(out)


def _p_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return _p_normalize(out)


def _p_divexact(a, b):
    """Exact division in Z[x]; raises if the division is not exact."""
    if not a:
        return ()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        raise ArithmeticError("inexact polynomial division")
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + db]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _p_normalize(q)


def char_poly(g: Graph) -> tuple[int, ...]:
    """det(xI - A) with exact integer coefficients, ascending by degree.

    Fraction-free (Bareiss) elimination over Z[x]: every division is exact,
    and arbitrary-precision integers make the wide-intermediate contract
    trivially safe, so the overflow failure mode cannot occur.
    """
    n = g.n
    if n == 0:
        return (1,)
    rows = g.rows
    m = [
        [(0, 1) if i == j else ((-1,) if (rows[i] >> j) & 1 else ()) for j in range(n)]
        for i in range(n)
    ]
    prev = (1,)
    for k in range(n - 1):
        pivot = m[k][k]
        if not pivot:
            raise InvariantError("zero pivot in characteristic-matrix elimination")
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = _p_sub(_p_mul(pivot, m[i][j]), _p_mul(mik, m[k][j]))
                m[i][j] = _p_divexact(num, prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return tuple(list(det) + [0] * (n + 1 - len(det)))


def char_poly_string(coeffs) -> str:
    """Human-readable polynomial, highest degree first."""
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{d}" if mag == 1 else f"{mag}*x^{d}"
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    head = terms[0][2:] if terms[0].startswith("+ ") else "-" + terms[0][2:]
    return " ".join([head] + terms[1:])


# ---------------------------------------------------------------------------
# planarity: face embedding + forbidden-minor cross-check


@dataclass(frozen=True)
class PlanarCertificate:
    """Rotation system of a planar embedding plus its traced faces."""

    rotation: tuple[tuple[int, ...], ...]  # rotation[v] = cyclic neighbor order
    faces: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MinorCertificate:
    """Branch sets of a K5 or K3,3 minor model."""

    kind: str  # "K5" or "K33"
    branch_sets: tuple[tuple[int, ...], ...]


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Blocks as edge lists (iterative lowpoint DFS)."""
    n = g.n
    visited = [False] * n
    depth = [0] * n
    low = [0] * n
    parent = [-1] * n
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        work = [(root, iter(g.neighbors(root)))]
        while work:
            u, it = work[-1]
            advanced = False
            for v in it:
                if not visited[v]:
                    visited[v] = True
                    depth[v] = depth[u] + 1
                    low[v] = depth[v]
                    parent[v] = u
                    stack.append((u, v))
                    work.append((v, iter(g.neighbors(v))))
                    advanced = True
                    break
                if v != parent[u] and depth[v] < depth[u]:
                    stack.append((u, v))
                    if depth[v] < low[u]:
                        low[u] = depth[v]
            if not advanced:
                work.pop()
                if work:
                    p = work[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= depth[p]:
                        block = []
                        while True:
                            e = stack.pop()
                            block.append(e)
                            if e == (p, u):
                                break
                        blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, list[int]]) -> list[int]:
    """Any cycle in a biconnected graph with >= 3 vertices (DFS back edge)."""
    start = min(adj)
    stack = [start]
    on_path = {start: 0}
    parent = {start: -1}
    iters = [iter(adj[start])]
    while stack:
        u = stack[-1]
        found = False
        for v in iters[-1]:
            if v == parent[u]:
                continue
            if v in on_path:
                return stack[on_path[v] :]
            parent[v] = u
            on_path[v] = len(stack)
            stack.append(v)
            iters.append(iter(adj[v]))
            found = True
            break
        if not found:
            del on_path[u]
            stack.pop()
            iters.pop()
    raise InvariantError("no cycle found in a biconnected block")


def _demoucron_faces(block_edges) -> list[list[int]] | None:
    """Face walks of a planar embedding of one biconnected block, or None.

    Incremental path addition: fragments of the embedded subgraph go into
    admissible faces (faces containing all attachment vertices), forced
    fragments first; a fragment with no admissible face certifies
    nonplanarity of the block.
    """
    edges = {(min(u, v), max(u, v)) for u, v in block_edges}
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()
    vertices = set(adj)
    if len(edges) == 1:
        ((u, v),) = edges
        return [[u, v]]

    cycle = _find_cycle(adj)
    emb_v = set(cycle)
    emb_e = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        emb_e.add((min(u, v), max(u, v)))
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]

    while emb_e != edges:
        fragments = []
        for u, v in sorted(edges - emb_e):
            if u in emb_v and v in emb_v:
                fragments.append(({u, v}, [u, v]))
        seen: set[int] = set()
        for seed in sorted(vertices - emb_v):
            if seed in seen:
                continue
            comp = {seed}
            queue = [seed]
            while queue:
                x = queue.pop(0)
                for y in adj[x]:
                    if y not in emb_v and y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            attach = sorted({y for x in comp for y in adj[x] if y in emb_v})
            fragments.append((set(attach), _fragment_path(adj, comp, attach)))

        best = None
        for attach, path in fragments:
            admissible = [fi for fi, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                return None
            if best is None or len(admissible) < len(best[2]):
                best = (attach, path, admissible)
                if len(admissible) == 1:
                    break
        _, path, admissible = best
        face_idx = admissible[0]
        face = faces[face_idx]
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        arc_ab = _arc(face, i, j)
        arc_ba = _arc(face, j, i)
        interior = path[1:-1]
        faces[face_idx] = arc_ab + list(reversed(interior))
        faces.append(arc_ba + list(interior))
        emb_v.update(interior)
        for idx in range(len(path) - 1):
            u, v = path[idx], path[idx + 1]
            emb_e.add((min(u, v), max(u, v)))
    return faces


def _fragment_path(adj, comp, attach) -> list[int]:
    """A path between two distinct attachments through the fragment interior."""
    a = attach[0]
    others = set(attach) - {a}
    parent = {}
    queue = [x for x in sorted(comp) if a in adj[x]]
    for x in queue:
        parent[x] = a
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        hit = sorted(y for y in adj[x] if y in others)
        if hit:
            path = [hit[0], x]
            while path[-1] != a:
                path.append(parent[path[-1]])
            return list(reversed(path))
        for y in adj[x]:
            if y in comp and y not in parent:
                parent[y] = x
                queue.append(y)
    raise InvariantError("fragment with fewer than two attachments in a block")


def _arc(face, i, j) -> list[int]:
    out = [face[i]]
    k = i
    while k != j:
        k = (k + 1) % len(face)
        out.append(face[k])
    return out


def _rotation_from_faces(faces) -> dict[int, list[int]]:
    """Rebuild the rotation at each vertex from directed face walks.

    Each directed edge must occur in exactly one walk and the successor map
    at every vertex must close into a single cycle; both are validated.
    """
    succ: dict[tuple[int, int], int] = {}
    for face in faces:
        m = len(face)
        for idx in range(m):
            u, v, w = face[idx], face[(idx + 1) % m], face[(idx + 2) % m]
            if (u, v) in succ:
                raise InvariantError("directed edge traced twice in face walks")
            succ[(u, v)] = w
    at: dict[int, dict[int, int]] = {}
    for (u, v), w in succ.items():
        at.setdefault(v, {})[u] = w
    rot: dict[int, list[int]] = {}
    for v, nxt in at.items():
        start = min(nxt)
        order = [start]
        while True:
            w = nxt[order[-1]]
            if w == start:
                break
            if w in order:
                raise InvariantError("rotation at a vertex does not close")
            order.append(w)
        if len(order) != len(nxt):
            raise InvariantError("rotation at a vertex is not a single cycle")
        rot[v] = order
    return rot


def _trace_faces(rotation: dict[int, list[int]]) -> list[tuple[int, ...]]:
    """Face walks induced by a rotation system (the edge after (u, v) is
    (v, successor of u in the rotation at v))."""
    pending = {(u, v) for u, nbrs in rotation.items() for v in nbrs}
    faces = []
    while pending:
        start = min(pending)
        walk = []
        u, v = start
        while True:
            walk.append(u)
            pending.discard((u, v))
            nbrs = rotation[v]
            w = nbrs[(nbrs.index(u) + 1) % len(nbrs)]
            u, v = v, w
            if (u, v) == start:
                break
        faces.append(tuple(walk))
    return faces


def check_planar_certificate(g: Graph, rotation) -> bool:
    """Validate a rotation system: correct neighbor sets and Euler's formula
    V - E + F = 2 on every connected component."""
    rot = {v: list(rotation[v]) for v in range(g.n)}
    for v in range(g.n):
        if sorted(rot[v]) != g.neighbors(v):
            return False
    faces = _trace_faces({v: rot[v] for v in rot if rot[v]})
    comp_of = [-1] * g.n
    comps = 0
    for v in range(g.n):
        if comp_of[v] == -1:
            dist = _bfs_dist(g.rows, g.n, v)
            for u in range(g.n):
                if dist[u] >= 0:
                    comp_of[u] = comps
            comps += 1
    for c in range(comps):
        verts = [v for v in range(g.n) if comp_of[v] == c]
        ne = sum(g.degree(v) for v in verts) // 2
        nf = (
            1
            if ne == 0
            else sum(1 for f in faces if comp_of[f[0]] == c)
        )
        if len(verts) - ne + nf != 2:
            return False
    return True


def _neighborhood_of(rows, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= rows[low.bit_length() - 1]
        mask ^= low
    return out


def _connected_subsets_from(rows, v: int, allowed: int):
    """All connected vertex subsets containing v inside ``allowed`` (masks),
    each produced exactly once (frontier extension with exclusion)."""

    def grow(sub: int, ext: int):
        yield sub
        frontier = _neighborhood_of(rows, sub) & ext
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            ext ^= low
            yield from grow(sub | low, ext)

    yield from grow(1 << v, allowed & ~(1 << v))


def _complete_minor_model(g: Graph, r: int):
    """Branch sets of a K_r minor model, or None."""
    rows = g.rows
    parts: list[int] = []

    def rec(active: int):
        if len(parts) == r:
            return True
        if active.bit_count() < r - len(parts):
            return False
        for p in parts:
            if not _neighborhood_of(rows, p) & active:
                return False
        v = (active & -active).bit_length() - 1
        for sub in _connected_subsets_from(rows, v, active):
            nb = _neighborhood_of(rows, sub)
            if all(nb & p for p in parts):
                parts.append(sub)
                if rec(active & ~sub):
                    return True
                parts.pop()
        return rec(active & ~(1 << v))

    if g.n >= r and rec((1 << g.n) - 1):
        return tuple(tuple(_mask_bits(p)) for p in parts)
    return None


def _bipartite_minor_model(g: Graph, a_size: int, b_size: int):
    """Branch sets of a K_{a,b} minor model (side A parts then side B)."""
    rows = g.rows
    side_a: list[int] = []
    side_b: list[int] = []

    def rec(active: int):
        if len(side_a) == a_size and len(side_b) == b_size:
            return True
        if active.bit_count() < (a_size - len(side_a)) + (b_size - len(side_b)):
            return False
        v = (active & -active).bit_length() - 1
        for sub in _connected_subsets_from(rows, v, active):
            nb = _neighborhood_of(rows, sub)
            if len(side_a) < a_size and all(nb & p for p in side_b):
                side_a.append(sub)
                if rec(active & ~sub):
                    return True
                side_a.pop()
            if side_a and len(side_b) < b_size and all(nb & p for p in side_a):
                side_b.append(sub)
                if rec(active & ~sub):
                    return True
                side_b.pop()
        return rec(active & ~(1 << v))

    if g.n >= a_size + b_size and rec((1 << g.n) - 1):
        return tuple(tuple(_mask_bits(p)) for p in side_a + side_b)
    return None


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def find_forbidden_minor(g: Graph) -> MinorCertificate | None:
    """A K5 or K3,3 minor model if one exists (practical for n <= 10)."""
    model = _complete_minor_model(g, 5)
    if model:
        return MinorCertificate("K5", model)
    model = _bipartite_minor_model(g, 3, 3)
    if model:
        return MinorCertificate("K33", model)
    return None


def is_planar(g: Graph):
    """(planar, certificate).

    Positive answers carry a rotation system validated against Euler's
    formula per component; negative answers at n <= 10 are cross-checked by
    the forbidden-minor search and carry the minor model found.  The two
    deciders disagreeing raises :class:`InvariantError`.
    """
    rotation_cycles: dict[int, list[list[int]]] = {v: [] for v in range(g.n)}
    planar = True
    for block in _biconnected_blocks(g):
        faces = _demoucron_faces(block)
        if faces is None:
            planar = False
            break
        for v, order in _rotation_from_faces(faces).items():
            rotation_cycles[v].append(order)
    if planar:
        rotation = tuple(
            tuple(x for cyc in rotation_cycles[v] for x in cyc) for v in range(g.n)
        )
        faces = _trace_faces({v: list(rotation[v]) for v in range(g.n) if rotation[v]})
        if not check_planar_certificate(g, rotation):
            raise InvariantError("face embedding failed the Euler check")
        return True, PlanarCertificate(rotation, tuple(faces))
    if g.n <= 10:
        minor = find_forbidden_minor(g)
        if minor is None:
            raise InvariantError("face embedding failed but no forbidden minor exists")
        return False, minor
    return False, None


# ---------------------------------------------------------------------------
# the aggregate profile


@dataclass(frozen=True)
class InvariantProfile:
    """Every exact invariant of one graph, plus automorphism data."""

    n: int
    edge_count: int
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    girth: object  # int or math.inf
    clique_number: int
    chromatic_number: int
    vertex_connectivity: int
    edge_connectivity: int
    diameter: object  # int or math.inf
    radius: object
    planar: bool
    eulerian: bool
    hamiltonian: bool
    hamiltonian_cycle: tuple[int, ...] | None
    vertex_transitive: bool
    edge_transitive: bool
    distance_transitive: bool
    core_kind: str  # "K3" | "K4" | "SELF" | "OTHER:<canonical g6>"
    core_order: int
    char_poly: tuple[int, ...]
    aut_order: int
    orbit_sizes: tuple[int, ...]


def _core_kind(g: Graph, core: Graph) -> str:
    if core.n == g.n:
        return "SELF"
    if core.n == 3 and core.edge_count() == 3:
        return "K3"
    if core.n == 4 and core.edge_count() == 6:
        return "K4"
    return "OTHER:" + canonical_form(core).canonical_bytes


def profile(g: Graph) -> InvariantProfile:
    """Aggregate profile; internal consistency is checked before returning."""
    if g.n == 0:
        raise ValueError("profile undefined on the empty graph")
    dmin, dmax, degs = degree_stats(g)
    diam, rad, _ = metric(g)
    planar, _cert = is_planar(g)
    if g.n >= 3:
        ham, cycle = is_hamiltonian(g)
    else:
        ham, cycle = False, None
    aut = automorphism_group(g)
    vt, et, dt = transitivity(g, aut)
    core = hom_core(g)
    kappa, lam = connectivity(g) if g.n >= 2 else (0, 0)
    prof = InvariantProfile(
        n=g.n,
        edge_count=g.edge_count(),
        degrees=degs,
        min_degree=dmin,
        max_degree=dmax,
        girth=girth(g),
        clique_number=clique_number(g),
        chromatic_number=chromatic_number(g),
        vertex_connectivity=kappa,
        edge_connectivity=lam,
        diameter=diam,
        radius=rad,
        planar=planar,
        eulerian=is_eulerian(g),
        hamiltonian=ham,
        hamiltonian_cycle=cycle,
        vertex_transitive=vt,
        edge_transitive=et,
        distance_transitive=dt,
        core_kind=_core_kind(g, core),
        core_order=core.n,
        char_poly=char_poly(g),
        aut_order=aut.order,
        orbit_sizes=tuple(sorted((len(o) for o in aut.vertex_orbits), reverse=True)),
    )
    _check_profile(g, prof)
    return prof


def _check_profile(g: Graph, p: InvariantProfile) -> None:
    """Cross-invariant sanity; raises InvariantError on any violation."""
    if g.n >= 2 and not (
        p.vertex_connectivity <= p.edge_connectivity <= p.min_degree
    ):
        raise InvariantError("Whitney chain violated")
    if p.chromatic_number < p.clique_number:
        raise InvariantError("chromatic number below clique number")
    if p.radius > p.diameter:
        raise InvariantError("radius exceeds diameter")
    if math.isfinite(p.diameter) and p.diameter > 2 * p.radius:
        raise InvariantError("diameter exceeds twice the radius")
    if p.eulerian and any(d % 2 for d in p.degrees):
        raise InvariantError("Eulerian graph with an odd degree")
    if p.planar and g.n >= 3 and p.edge_count > 3 * g.n - 6:
        raise InvariantError("planar graph above the edge bound")
    if p.hamiltonian:
        _validate_cycle(g, p.hamiltonian_cycle)
    if p.char_poly[-1] != 1 or (g.n >= 1 and p.char_poly[g.n - 1] != 0):
        raise InvariantError("characteristic polynomial is not monic trace-free")
    if g.n >= 2 and p.char_poly[g.n - 2] != -p.edge_count:
        raise InvariantError("characteristic polynomial contradicts the edge count")
    if sum(p.orbit_sizes) != g.n:
        raise InvariantError("orbit sizes do not partition the vertices")
