import random

import networkx as nx
import pytest

from util import complete_graph, cycle_graph, random_graph, to_nx
from z4census.graphs import (
    Graph,
    Graph6Error,
    GraphError,
    UnsupportedSizeError,
    complement,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    make_graph,
    read_graph6_file,
    relabel,
    write_graph6_file,
)
from z4census.perms import Perm


def test_make_graph_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edge_count() == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_make_graph_degenerate():
    assert make_graph(0, []).edge_count() == 0


def test_make_graph_duplicate_collapse():
    g = make_graph(2, [(0, 1), (1, 0)])
    assert g.edge_count() == 1


def test_make_graph_errors():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        make_graph(3, [(1, 1)])
    with pytest.raises(UnsupportedSizeError):
        make_graph(33, [])
    with pytest.raises(GraphError):
        Graph(3, (1, 0, 0))  # asymmetric rows


def test_complement_examples():
    assert complement(complete_graph(3)).edge_count() == 0
    k10 = complement(make_graph(10, []))
    assert k10.edge_count() == 45


def test_complement_involution_and_count():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng, 0, 10)
        c = complement(g)
        assert complement(c) == g
        assert g.edge_count() + c.edge_count() == g.n * (g.n - 1) // 2


def test_induced_subgraph_examples():
    k5 = complete_graph(5)
    assert induced_subgraph(k5, [0, 1, 2]) == complete_graph(3)
    assert induced_subgraph(k5, []).n == 0
    c5 = cycle_graph(5)
    sub = induced_subgraph(c5, [0, 1, 3])
    assert sub.n == 3 and sub.edges() == [(0, 1)]


def test_induced_full_set_identity():
    rng = random.Random(12)
    for _ in range(50):
        g = random_graph(rng)
        assert induced_subgraph(g, range(g.n)) == g


def test_relabel_examples():
    rng = random.Random(13)
    p3 = make_graph(3, [(0, 1), (1, 2)])
    assert relabel(p3, Perm((2, 1, 0))) == p3  # path symmetry: same edge set
    for _ in range(100):
        g = random_graph(rng)
        assert relabel(g, Perm.identity(g.n)) == g
        p = list(range(g.n))
        rng.shuffle(p)
        p = Perm(p)
        assert relabel(relabel(g, p), p.inverse()) == g
        assert sorted(relabel(g, p).degrees()) == sorted(g.degrees())
        assert relabel(g, p).edge_count() == g.edge_count()


def test_relabel_degree_mismatch():
    with pytest.raises(GraphError):
        relabel(complete_graph(3), Perm((0, 1)))


def test_graph6_frozen_vectors():
    assert graph6_encode(make_graph(2, [(0, 1)])) == "A_"
    assert graph6_encode(make_graph(2, [])) == "A?"
    assert graph6_decode("A_") == make_graph(2, [(0, 1)])
    assert graph6_decode("A?") == make_graph(2, [])
    assert graph6_encode(make_graph(0, [])) == "?"
    assert graph6_decode("?").n == 0


def test_graph6_round_trip_random():
    rng = random.Random(14)
    for _ in range(1000):
        g = random_graph(rng, 0, 10)
        s = graph6_encode(g)
        assert graph6_decode(s) == g


def test_graph6_against_reference_tool():
    rng = random.Random(15)
    for _ in range(300):
        g = random_graph(rng, 0, 10)
        mine = graph6_encode(g)
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert mine == ref
        back = nx.from_graph6_bytes(mine.encode())
        assert sorted(map(tuple, map(sorted, back.edges()))) == g.edges()


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(20))  # byte below 63
    with pytest.raises(Graph6Error):
        graph6_decode("C")  # truncated payload for n=4
    with pytest.raises(Graph6Error):
        graph6_decode("A_?")  # trailing byte
    with pytest.raises(ValueError):
        graph6_decode("~~~")  # multi-byte size prefix unsupported


def test_graph6_padding_strict_vs_lenient():
    # K2 with a nonzero padding bit: '_' has payload 100000; '`' is 100001
    bad = "A" + chr(63 + 0b100001)
    with pytest.raises(Graph6Error):
        graph6_decode(bad)
    assert graph6_decode(bad, strict=False) == make_graph(2, [(0, 1)])


def test_graph6_file_round_trip(tmp_path):
    rng = random.Random(16)
    graphs = [random_graph(rng, 0, 10) for _ in range(20)]
    path = tmp_path / "x.g6"
    write_graph6_file(path, graphs)
    assert read_graph6_file(path) == graphs


def test_graph6_file_error_names_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("A_\nA_??\nA?\n")
    with pytest.raises(Graph6Error, match="line 2"):
        read_graph6_file(path)
