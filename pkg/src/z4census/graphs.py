"""Immutable small graphs with bitset adjacency, plus the graph6 codec.

A graph on n <= 32 vertices stores one integer bitmask per vertex, so the
whole neighborhood test is a single AND.  All operations return new values;
nothing here mutates, which makes every Graph safe to share across workers.
"""

from __future__ import annotations

from .perms import Perm

MAX_VERTICES = 32
_GRAPH6_MAX = 62  # single-byte size prefix


class GraphError(ValueError):
    """Invalid graph construction input."""


class UnsupportedSizeError(GraphError):
    """Vertex count outside the supported range."""


class Graph6Error(ValueError):
    """Malformed graph6 data."""


class Graph:
    """Undirected simple graph: vertex count ``n`` and bit-rows ``rows``.

    ``rows[v]`` is the neighborhood bitset of v.  Invariants (checked at
    construction): symmetry, no loops, no bits at or above n.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        if not 0 <= n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits at or above n={n}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(n):
            row = rows[v]
            while row:
                u = (row & -row).bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
                row &= row - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def make_graph(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops rejected."""
    if not 0 <= n <= MAX_VERTICES:
        raise UnsupportedSizeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop ({u}, {v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    """Edge (u, v) present iff absent in g (u != v)."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row & ~(1 << v)) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by ``vertices``, reindexed by increasing original index.

    ``vertices`` may be an iterable of vertex indices or a bitmask.
    """
    if isinstance(vertices, int):
        sel = _bits(vertices)
    else:
        sel = sorted(set(vertices))
    if sel and (sel[0] < 0 or sel[-1] >= g.n):
        raise GraphError(f"vertex selection outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(sel)}
    rows = [0] * len(sel)
    for i, v in enumerate(sel):
        row = g.rows[v]
        for u in sel[i + 1 :]:
            if (row >> u) & 1:
                rows[i] |= 1 << index[u]
                rows[index[u]] |= 1 << i
    return Graph(len(sel), rows)


def relabel(g: Graph, p: Perm) -> Graph:
    """Image graph: edge (p(u), p(v)) iff g has (u, v)."""
    if len(p) != g.n:
        raise GraphError(f"permutation degree {len(p)} != vertex count {g.n}")
    rows = [0] * g.n
    for v in range(g.n):
        old = g.rows[v]
        new = 0
        while old:
            low = old & -old
            new |= 1 << p[low.bit_length() - 1]
            old ^= low
        rows[p[v]] = new
    return Graph(g.n, rows)


def graph6_encode(g: Graph) -> str:
    """Standard graph6: size byte (n + 63), then the upper triangle bits
    x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte, MSB first,
    zero-padded, each 6-bit group offset by 63.  Printable ASCII only.
    """
    if g.n > _GRAPH6_MAX:
        raise UnsupportedSizeError(f"graph6 single-byte size limited to n <= {_GRAPH6_MAX}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def graph6_decode(s, strict: bool = True) -> Graph:
    """Inverse of :func:`graph6_encode`.

    In strict mode nonzero padding bits are rejected; ``strict=False``
    tolerates them for third-party files.  Trailing bytes, truncated
    payloads and bytes outside 63..126 are always rejected.
    """
    if isinstance(s, bytes):
        try:
            s = s.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("graph6 data is not ASCII") from exc
    s = s.rstrip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte graph6 sizes not supported")
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"decoded vertex count {n} exceeds {MAX_VERTICES}")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    payload = s[1:]
    if len(payload) < nbytes:
        raise Graph6Error("truncated graph6 bit payload")
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after graph6 payload")
    bits = 0
    for ch in payload:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = nbytes * 6 - npairs
    if strict and pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = npairs - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> pos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(n, rows)


def read_graph6_file(path, strict: bool = True) -> list[Graph]:
    """Read newline-separated graph6 records; blank lines are skipped.

    Raises :class:`Graph6Error` with the 1-based line number on bad input.
    """
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(graph6_decode(line, strict=strict))
            except ValueError as exc:
                raise Graph6Error(f"line {lineno}: malformed graph6 ({exc})") from exc
    return graphs


def write_graph6_file(path, graphs) -> None:
    """Write newline-separated graph6 records."""
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
