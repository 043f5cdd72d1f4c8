"""Brute-force chromatic number, used as ground truth at small scale."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Coloring, Graph, greedy_clique


@dataclass(frozen=True)
class OracleResult:
    chromatic_number: int
    witness: Coloring


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """Exhaustive backtracking k-colorability check.

    Vertices are tried in degree-descending order (ties to lowest index).
    A vertex may reuse any feasible color already opened, or open exactly one
    new color when fewer than k are in use. Restricting each step to at most
    one fresh color loses no solutions: color classes can always be relabeled
    in order of first appearance, so some proper k-coloring survives the
    restriction whenever any exists.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    adjacency = g.adjacency

    def extend(pos: int, used: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        forbidden = {colors[u] for u in adjacency[v] if colors[u] != -1}
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if extend(pos + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    if extend(0, 0):
        return Coloring(tuple(colors))
    return None


def chromatic_number(g: Graph) -> OracleResult:
    """Smallest k admitting a proper coloring, found by increasing k.

    The search starts at the greedy clique size, which is a valid lower
    bound. Practical up to roughly n=30 on dense graphs.
    """
    if g.n == 0:
        return OracleResult(0, Coloring(()))
    k = max(1, len(greedy_clique(g)))
    while True:
        witness = is_k_colorable(g, k)
        if witness is not None:
            return OracleResult(k, witness)
        k += 1
