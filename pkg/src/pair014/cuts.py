"""Per-vertex independent-set bounds and the size cuts they induce.

The color class of a vertex v is an independent set containing v, so its
size never exceeds the maximum independent set through v. That bound turns
into one linear cut per vertex on the incident pair variables.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formulation import LE, TAG_CUT, LinearConstraint, PairVar, VAR_PAIR, build_pair_vars
from .graphs import Graph


@dataclass(frozen=True)
class CutReport:
    """Per-vertex independent-set sizes and the time spent proving them.

    When exact_flags[v] is False the search budget ran out and sizes[v] is a
    certified upper bound, which keeps the derived cut valid.
    """

    sizes: tuple[int, ...]
    exact_flags: tuple[bool, ...]
    preprocess_time: float

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.sizes):
            raise ValueError("independent-set sizes must be >= 1")


def _clique_cover_bound(candidates: int, adj: Sequence[int]) -> int:
    """Greedy partition of the candidate set into cliques.

    Any independent set meets each clique at most once, so the number of
    cliques bounds the independent-set size from above.
    """
    cliques: list[int] = []
    rest = candidates
    while rest:
        u = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        for i, members in enumerate(cliques):
            if members & ~adj[u] == 0:
                cliques[i] |= 1 << u
                break
        else:
            cliques.append(1 << u)
    return len(cliques)


def max_independent_with(g: Graph, v: int, node_budget: int = 10**6) -> tuple[int, bool]:
    """Size of a maximum independent set containing v, by branch and bound.

    Branches on the lowest-index candidate (include first), pruning with the
    greedy clique-cover bound; fully deterministic. If node_budget runs out,
    returns the best upper bound proved so far with exact=False.
    """
    if node_budget < 1:
        raise ValueError(f"node_budget must be >= 1, got {node_budget}")
    adj = g.adjacency_masks
    root_candidates = ((1 << g.n) - 1) & ~adj[v] & ~(1 << v)

    best = 1
    stack: list[tuple[int, int]] = [(1, root_candidates)]
    nodes = 0
    exhausted = False
    while stack:
        if nodes >= node_budget:
            exhausted = True
            break
        nodes += 1
        size, candidates = stack.pop()
        if candidates == 0:
            if size > best:
                best = size
            continue
        if size + _clique_cover_bound(candidates, adj) <= best:
            continue
        u = (candidates & -candidates).bit_length() - 1
        stack.append((size, candidates & ~(1 << u)))
        stack.append((size + 1, candidates & ~adj[u] & ~(1 << u)))

    if not exhausted:
        return best, True
    upper = best
    for size, candidates in stack:
        upper = max(upper, size + _clique_cover_bound(candidates, adj))
    return upper, False


def compute_cut_report(g: Graph, node_budget: int = 10**6) -> CutReport:
    """Independent-set bound for every vertex, in increasing index order."""
    start = time.perf_counter()
    sizes = []
    flags = []
    for v in range(g.n):
        size, exact = max_independent_with(g, v, node_budget)
        sizes.append(size)
        flags.append(exact)
    elapsed = time.perf_counter() - start
    return CutReport(tuple(sizes), tuple(flags), elapsed)


def build_simple_cuts(
    g: Graph, report: CutReport, pair_vars: Sequence[PairVar] | None = None
) -> list[LinearConstraint]:
    """One cut per vertex: sum of incident pair variables <= size - 1.

    Vertices with no incident pair variables produce a vacuous row (empty
    sum <= nonnegative bound) and are dropped.
    """
    if len(report.sizes) != g.n:
        raise ValueError(f"report covers {len(report.sizes)} vertices, graph has {g.n}")
    if pair_vars is None:
        pair_vars = build_pair_vars(g)
    incident: list[list[PairVar]] = [[] for _ in range(g.n)]
    for pv in pair_vars:
        incident[pv.u].append(pv)
        incident[pv.v].append(pv)

    one = Fraction(1)
    cuts = []
    for v in range(g.n):
        if not incident[v]:
            continue
        terms = tuple((VAR_PAIR, pv.id, one) for pv in incident[v])
        rhs = Fraction(report.sizes[v] - 1)
        cuts.append(LinearConstraint(terms, LE, rhs, TAG_CUT, f"cut_{v + 1}"))
    return cuts
