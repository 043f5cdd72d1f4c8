"""Simple undirected graphs: DIMACS I/O, seeded random instances, coloring bounds.

Vertices are 0-based internally and 1-based in DIMACS files. Graphs are
immutable after construction; every function here is pure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable


class DimacsError(ValueError):
    """Raised on malformed DIMACS .col input."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with n vertices labeled 0..n-1.

    edges holds unordered distinct pairs stored as (u, v) tuples with u < v.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range or not normalized for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing edge orientation and dropping duplicates."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            normalized.add((u, v) if u < v else (v, u))
        return Graph(n, frozenset(normalized))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks (bit v set iff v is a neighbor)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def non_adjacent_pairs(self) -> list[tuple[int, int]]:
        """All unordered non-adjacent pairs, lexicographic by (u, v)."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if (u, v) not in self.edges]


@dataclass(frozen=True)
class Coloring:
    """Assignment of nonnegative integer color labels to vertices 0..n-1."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.colors):
            raise ValueError("color labels must be nonnegative")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS .col text into a Graph.

    Accepts `c` comment lines, one `p edge|col <n> <m>` line, and `e <u> <v>`
    lines with 1-based endpoints. Duplicate edges and both orientations
    collapse to one edge. The declared edge count is advisory: a mismatch
    warns but does not fail.
    """
    n: int | None = None
    declared_m: int | None = None
    edges: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(tokens[2])
                declared_m = int(tokens[3])
            except ValueError as exc:
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}") from exc
            if n < 0:
                raise DimacsError(f"line {lineno}: negative vertex count")
        elif tokens[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError as exc:
                raise DimacsError(f"line {lineno}: malformed edge line {line!r}") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex index out of range [1, {n}]")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop e {u} {v}")
            edges.add((u - 1, v - 1) if u < v else (v - 1, u - 1))
        else:
            raise DimacsError(f"line {lineno}: unrecognized line {line!r}")

    if n is None:
        raise DimacsError("missing problem line (`p edge <n> <m>`)")
    if declared_m is not None and declared_m != len(edges):
        warnings.warn(
            f"DIMACS header declares {declared_m} edges but {len(edges)} distinct edges parsed",
            stacklevel=2,
        )
    return Graph(n, frozenset(edges))


def write_dimacs(g: Graph) -> str:
    """Serialize a graph as DIMACS .col text; inverse of parse_dimacs."""
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


_MASK64 = (1 << 64) - 1


def _splitmix64_stream(seed: int):
    """SplitMix64 sequence; fully specified so instances are portable bit-exactly."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def gen_gnp(n: int, p: float | Fraction, seed: int) -> Graph:
    """Random G(n, p) instance, deterministic given (n, p, seed).

    Pairs are enumerated in lexicographic order (u < v); each draws one
    SplitMix64 value mapped to [0, 1) by (x >> 11) * 2**-53 and becomes an
    edge iff the value is below p.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    stream = _splitmix64_stream(seed)
    edges = set()
    for u, v in combinations(range(n), 2):
        value = (next(stream) >> 11) * 2.0**-53
        if value < p:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def density(g: Graph) -> Fraction:
    """Edge density |E| / C(n, 2) as an exact rational."""
    if g.n < 2:
        raise ValueError("density is undefined for graphs with fewer than 2 vertices")
    return Fraction(g.num_edges, g.n * (g.n - 1) // 2)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    return Graph(g.n, frozenset(g.non_adjacent_pairs()))


def dsatur_coloring(g: Graph) -> Coloring:
    """Proper coloring via DSATUR order.

    Next vertex: max saturation degree, ties by max degree in g, then lowest
    index; it receives the lowest color unused on its neighbors. Deterministic.
    """
    colors: list[int] = [-1] * g.n
    saturation: list[set[int]] = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = min(uncolored, key=lambda u: (-len(saturation[u]), -g.degree(u), u))
        used = saturation[v]
        c = 0
        while c in used:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in g.adjacency[v]:
            if colors[u] == -1:
                saturation[u].add(c)
    return Coloring(tuple(colors))


def greedy_clique(g: Graph) -> frozenset[int]:
    """Greedy clique: its size is a valid lower bound on the chromatic number.

    Seeds at the max-degree vertex and repeatedly adds the candidate adjacent
    to the whole clique with the most neighbors among the remaining
    candidates; all ties break to the lowest index.
    """
    if g.n == 0:
        return frozenset()
    seed = min(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = {seed}
    candidates = set(g.adjacency[seed])
    while candidates:
        best = min(
            candidates,
            key=lambda v: (-len(g.adjacency[v] & candidates), v),
        )
        clique.add(best)
        candidates &= g.adjacency[best]
    return frozenset(clique)
