"""Permutations of {0..n-1}, orbit machinery and exact group orders.

Everything here is exact integer combinatorics: permutations are stored as
image tuples, orbits are computed by closure under generators, and the order
of a generated subgroup of S_n comes from a stabilizer-chain (Schreier-Sims)
computation with base points 0, 1, ..., n-1.
"""

from __future__ import annotations

import re
from math import lcm


class Perm:
    """A permutation of {0..n-1}, stored as the image tuple ``img``.

    ``p(v)`` (or ``p[v]``) is the image of v.  Composition follows function
    application order: ``(p * q)(v) == p(q(v))``.
    """

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        n = len(img)
        seen = [False] * n
        for x in img:
            if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {img!r}")
            seen[x] = True
        object.__setattr__(self, "img", img)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def n(self) -> int:
        return len(self.img)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Perm":
        """Build a permutation from disjoint cycles; unlisted points stay fixed."""
        img = list(range(n))
        used = set()
        for cyc in cycles:
            cyc = list(cyc)
            for x in cyc:
                if not 0 <= x < n:
                    raise ValueError(f"cycle entry {x} out of range 0..{n - 1}")
                if x in used:
                    raise ValueError(f"point {x} repeated across cycles")
                used.add(x)
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @classmethod
    def parse_cycles(cls, text: str, n: int) -> "Perm":
        """Parse 1-indexed cycle notation like ``(1,2,3,4)(5,6,7,8)(9,10)``.

        Whitespace is ignored; ``()`` or an empty string denotes the identity.
        """
        s = re.sub(r"\s+", "", text)
        if s in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", s):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for group in re.findall(r"\(([\d,]+)\)", s):
            entries = [int(t) for t in group.split(",")]
            if any(e < 1 or e > n for e in entries):
                raise ValueError(f"vertex out of range 1..{n} in {text!r}")
            cycles.append([e - 1 for e in entries])
        return cls.from_cycles(cycles, n)

    def __call__(self, v: int) -> int:
        return self.img[v]

    def __getitem__(self, v: int) -> int:
        return self.img[v]

    def __len__(self) -> int:
        return len(self.img)

    def __iter__(self):
        return iter(self.img)

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.img) != len(other.img):
            raise ValueError("degree mismatch")
        return Perm(tuple(self.img[x] for x in other.img))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.img)
        for i, x in enumerate(self.img):
            inv[x] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self.img))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * len(self.img)
        out = []
        for start in range(len(self.img)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.img[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.img[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths, sorted descending."""
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycle_string(self, one_indexed: bool = True) -> str:
        """Cycle notation for display; fixed points omitted, ``()`` if identity."""
        off = 1 if one_indexed else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x + off) for x in c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self) -> int:
        return hash(self.img)

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string(one_indexed=False)}, n={len(self.img)})"


def perm_from_cycles(cycles, n: int) -> Perm:
    """Standard cycle-notation constructor (0-indexed cycles)."""
    return Perm.from_cycles(cycles, n)


def element_order(p: Perm) -> int:
    """Least k >= 1 with p^k = identity (= lcm of cycle lengths)."""
    return p.order()


def _check_same_degree(generators) -> int:
    degrees = {len(p) for p in generators}
    if len(degrees) > 1:
        raise ValueError(f"generators act on mixed degrees {sorted(degrees)}")
    return degrees.pop() if degrees else 0


def orbit_partition(points, generators, act) -> list[list]:
    """Partition ``points`` into orbits of the group generated by ``generators``.

    ``act(p, x)`` applies a generator to a point.  Orbits of the generated
    group equal the closure under generators and their inverses; classes come
    back sorted by minimal element, each class sorted.
    """
    gens = list(generators)
    gens += [g.inverse() for g in gens]
    points = sorted(points)
    remaining = set(points)
    classes = []
    for start in points:
        if start not in remaining:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = act(g, x)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        remaining -= orbit
        classes.append(sorted(orbit))
    return classes


def vertex_orbits(generators, n: int | None = None) -> list[list[int]]:
    """Orbits of the generated group on points, sorted by minimal element."""
    if generators:
        deg = _check_same_degree(generators)
        if n is not None and n != deg:
            raise ValueError(f"generators act on {deg} points, not {n}")
        n = deg
    elif n is None:
        raise ValueError("need n when the generator list is empty")
    return orbit_partition(range(n), generators, lambda g, x: g[x])


def pair_orbits(p: Perm) -> list[list[tuple[int, int]]]:
    """Orbits of <p> on unordered pairs of {0..n-1}.

    Classes are listed in ascending order of their minimal pair; a graph is
    invariant under p exactly when its edge set is a union of such classes.
    """
    n = len(p)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]

    def act(g, pair):
        a, b = g[pair[0]], g[pair[1]]
        return (a, b) if a < b else (b, a)

    return orbit_partition(pairs, [p], act)


def order4_representatives(n: int) -> list[Perm]:
    """One representative per conjugacy class of order-4 elements of S_n.

    Cycle types are the partitions of n into parts from {1, 2, 4} containing
    at least one 4; each representative lays its cycles on consecutive
    indices, longest cycles first.
    """
    types: list[tuple[int, ...]] = []

    def build(remaining, max_part, acc):
        if remaining == 0:
            if 4 in acc:
                types.append(tuple(acc))
            return
        for part in (4, 2, 1):
            if part <= max_part and part <= remaining:
                build(remaining - part, part, acc + [part])

    build(n, 4, [])
    types.sort(reverse=True)
    reps = []
    for t in types:
        cycles = []
        next_idx = 0
        for length in t:
            cycles.append(list(range(next_idx, next_idx + length)))
            next_idx += length
        reps.append(Perm.from_cycles([c for c in cycles if len(c) > 1], n))
    return reps


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a o b)[i] = a[b[i]]."""
    return tuple(a[x] for x in b)


def _invert(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def group_order(generators) -> int:
    """Exact order of the subgroup of S_n generated by ``generators``.

    Uses a stabilizer chain with base points 0, 1, ..., n-1 (Schreier-Sims
    at toy scale): strong generators are added until every Schreier
    generator sifts to the identity, at which point the product of the
    orbit sizes along the chain is the group order.
    """
    gens = [tuple(g.img if isinstance(g, Perm) else g) for g in generators]
    if not gens:
        return 1
    n = _check_same_degree(gens)
    if n == 0:
        return 1
    identity = tuple(range(n))
    strong = [g for g in gens if g != identity]
    if not strong:
        return 1

    def build_chain():
        transversals = []
        level_gens = []
        for level in range(n):
            gl = [g for g in strong if all(g[i] == i for i in range(level))]
            trans = {level: identity}
            queue = [level]
            while queue:
                x = queue.pop(0)
                for g in gl:
                    y = g[x]
                    if y not in trans:
                        trans[y] = _compose(g, trans[x])
                        queue.append(y)
            transversals.append(trans)
            level_gens.append(gl)
        return transversals, level_gens

    def sift(g, transversals):
        """Reduce g along the chain; returns (stuck level, residue) or (n, None)."""
        for level in range(n):
            x = g[level]
            if x == level:
                continue
            trans = transversals[level]
            if x not in trans:
                return level, g
            g = _compose(_invert(trans[x]), g)
        return n, None

    while True:
        transversals, level_gens = build_chain()
        residue = None
        for level in range(n):
            for x, rep in transversals[level].items():
                for g in level_gens[level]:
                    # Schreier generator for coset rep and generator g
                    u = _compose(g, rep)
                    schreier = _compose(_invert(transversals[level][g[x]]), u)
                    lv, res = sift(schreier, transversals)
                    if lv < n:
                        residue = res
                        break
                if residue:
                    break
            if residue:
                break
        if residue is None:
            break
        strong.append(residue)

    result = 1
    for trans in transversals:
        result *= len(trans)
    return result
