"""Shared graph fixtures and brute-force enumeration oracles for the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np

from pair014 import Coloring, Graph, Model, PairAssignment


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_proper_coloring(g: Graph, rng: random.Random) -> Coloring:
    """Greedy over a shuffled order, reusing or opening colors at random."""
    order = list(range(g.n))
    rng.shuffle(order)
    colors = [-1] * g.n
    next_label = 0
    for v in order:
        used = {colors[u] for u in g.adjacency[v] if colors[u] != -1}
        open_labels = sorted(set(c for c in colors if c != -1) - used)
        if open_labels and rng.random() < 0.7:
            colors[v] = rng.choice(open_labels)
        else:
            colors[v] = next_label
            next_label += 1
    labels = sorted(set(colors))
    shuffled = labels[:]
    rng.shuffle(shuffled)
    relabel = dict(zip(labels, shuffled))
    return Coloring(tuple(relabel[c] for c in colors))


def assignment_from_mask(num_vars: int, mask: int) -> PairAssignment:
    return PairAssignment(tuple((mask >> i) & 1 for i in range(num_vars)))


def _all_vectors(num_vars: int) -> np.ndarray:
    idx = np.arange(1 << num_vars, dtype=np.uint32)
    return ((idx[:, None] >> np.arange(num_vars, dtype=np.uint32)[None, :]) & 1).astype(
        np.int8
    )


def feasible_masks_of_model(m: Model, include_cuts: bool = True) -> set[int]:
    """All 0/1 pair vectors satisfying the model's x-space rows, as bitmasks."""
    num_vars = len(m.pair_vars)
    vectors = _all_vectors(num_vars)
    ok = np.ones(1 << num_vars, dtype=bool)
    for con in m.constraints:
        if con.tag == "objective_tangent":
            continue
        if con.tag == "simple_cut" and not include_cuts:
            continue
        lhs = np.zeros(1 << num_vars, dtype=np.int32)
        for kind, i, coeff in con.terms:
            assert kind == "x" and coeff.denominator == 1
            lhs += int(coeff) * vectors[:, i].astype(np.int32)
        if con.sense == "<=":
            ok &= lhs <= int(con.rhs)
        else:
            ok &= lhs >= int(con.rhs)
    return {int(i) for i in np.nonzero(ok)[0]}


def full_triangle_feasible_masks(g: Graph) -> set[int]:
    """Feasible set of the unreduced transitivity system, built independently.

    Every pair gets a column conceptually; edge pairs are fixed to zero and
    all three role assignments of every triple are enforced.
    """
    nonedges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    position = {pair: i for i, pair in enumerate(nonedges)}
    num_vars = len(nonedges)
    vectors = _all_vectors(num_vars)
    total = 1 << num_vars
    zero = np.zeros(total, dtype=np.int32)

    def column(pair):
        if pair in position:
            return vectors[:, position[pair]].astype(np.int32)
        return zero

    ok = np.ones(total, dtype=bool)
    for u, v, w in combinations(range(g.n), 3):
        pairs = ((u, v), (u, w), (v, w))
        for minus in pairs:
            lhs = -column(minus)
            for p in pairs:
                if p != minus:
                    lhs = lhs + column(p)
            ok &= lhs <= 1
    return {int(i) for i in np.nonzero(ok)[0]}


def proper_partition_masks(g: Graph) -> set[int]:
    """Encodings of all partitions of V into independent sets of g.

    Partitions are enumerated in restricted-growth order, i.e. one
    representative per orbit of proper colorings under label permutation.
    """
    nonedges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    position = {pair: i for i, pair in enumerate(nonedges)}
    result: set[int] = set()
    classes: list[list[int]] = []

    def recurse(v: int) -> None:
        if v == g.n:
            mask = 0
            for cls in classes:
                for a, b in combinations(cls, 2):
                    mask |= 1 << position[(a, b)]
            result.add(mask)
            return
        for cls in classes:
            if all(not g.has_edge(u, v) for u in cls):
                cls.append(v)
                recurse(v + 1)
                cls.pop()
        classes.append([v])
        recurse(v + 1)
        classes.pop()

    if g.n == 0:
        return {0}
    recurse(0)
    return result


def exact_max_independent_with(g: Graph, v: int) -> int:
    """Independent-set size through v by plain subset enumeration."""
    others = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
    best = 1
    for r in range(1, len(others) + 1):
        for subset in combinations(others, r):
            if all(not g.has_edge(a, b) for a, b in combinations(subset, 2)):
                best = max(best, 1 + r)
    return best


def fv_values_for(g: Graph, x: PairAssignment) -> list[Fraction]:
    """The tight continuous values 1/(1 + linked partners) for a feasible x."""
    from pair014 import build_pair_vars

    degree = [0] * g.n
    for pv in build_pair_vars(g):
        if x.values[pv.id]:
            degree[pv.u] += 1
            degree[pv.v] += 1
    return [Fraction(1, 1 + d) for d in degree]
