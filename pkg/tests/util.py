"""Shared test helpers: named graphs and independent oracles.

Oracles here deliberately avoid the library's own code paths: brute-force
permutation loops, itertools enumeration, per-edge BFS, networkx and sympy.
"""

from __future__ import annotations

import itertools
import math
import random

import networkx as nx

from z4census.graphs import Graph, make_graph


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def k33_graph() -> Graph:
    return make_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def prism_graph() -> Graph:
    # K3 x K2: two triangles joined by a perfect matching (3-regular)
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def pentaprism_graph() -> Graph:
    # C5 x K2: 3-regular on 10 vertices, same degree sequence as Petersen
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return make_graph(10, edges)


def two_triangles() -> Graph:
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def bowtie_graph() -> Graph:
    return make_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def random_graph(rng: random.Random, nmin: int = 1, nmax: int = 10) -> Graph:
    n = rng.randint(nmin, nmax)
    p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.85])
    return make_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def brute_force_aut_order(g: Graph) -> int:
    """Count automorphisms by looping over all n! permutations."""
    n = g.n
    rows = g.rows
    count = 0
    for p in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            row = rows[v]
            img = 0
            while row:
                low = row & -row
                img |= 1 << p[low.bit_length() - 1]
                row ^= low
            if img != rows[p[v]]:
                ok = False
                break
        if ok:
            count += 1
    return count


def brute_force_girth(g: Graph):
    """Shortest cycle by per-edge removal plus BFS between the endpoints."""
    best = math.inf
    for u, v in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        dist = [-1] * g.n
        dist[u] = 0
        queue = [u]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            row = rows[x]
            while row:
                low = row & -row
                y = low.bit_length() - 1
                row ^= low
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if dist[v] >= 0:
            best = min(best, dist[v] + 1)
    return best


def brute_force_clique(g: Graph) -> int:
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all((g.rows[u] >> v) & 1 for u, v in itertools.combinations(sub, 2)):
                return r
    return 0


def brute_force_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    edges = g.edges()
    if not edges:
        return 1
    for k in range(1, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return k
    raise AssertionError


def brute_force_hamiltonian(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    for p in itertools.permutations(range(1, n)):
        seq = (0,) + p
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            return True
    return False


def triangle_count(g: Graph) -> int:
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
