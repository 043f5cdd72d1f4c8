"""Exact coloring solver branching on same-color/different-color pair decisions.

A search node is a partition-in-progress: classes of vertices already forced
to share a color, plus distinctness marks between classes. Branching picks an
undecided class pair and either merges it (the pair variable set to 1) or
marks it distinct (set to 0). Leaves are complete partitions whose class
count is the color count, matching the fractional objective of the model.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graphs import Coloring, Graph, dsatur_coloring

BRANCH_RULES = ("common_nonneighbors", "lex")


@dataclass(frozen=True)
class SolveConfig:
    time_limit: float = 7200.0
    node_limit: int | None = None
    use_cuts: bool = False
    branch_rule: str = "common_nonneighbors"
    cut_node_budget: int = 10**6

    def __post_init__(self) -> None:
        if self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")
        if self.branch_rule not in BRANCH_RULES:
            raise ValueError(f"unknown branch_rule {self.branch_rule!r}")


@dataclass(frozen=True)
class SolveReport:
    lower_bound: int
    upper_bound: int
    incumbent: Coloring
    gap: Fraction
    status: str  # "optimal" | "time_limit" | "node_limit"
    wall_time: float
    nodes: int
    preprocess_time: float


def relative_gap(lb: int, ub: int) -> Fraction:
    """(upper bound - lower bound) / upper bound, exact."""
    if ub < 1:
        raise ValueError(f"upper bound must be >= 1, got {ub}")
    if not 1 <= lb <= ub:
        raise ValueError(f"bounds out of order: lb={lb}, ub={ub}")
    return Fraction(ub - lb, ub)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# A class is (members, forbid, cap): members and forbid are vertex bitmasks,
# forbid holding every vertex the class may not absorb (graph neighbors of
# members plus members of classes marked distinct); cap bounds the class size.


def _class_adjsets(classes: list[tuple[int, int, int]]) -> list[int]:
    """Adjacency between classes as bitmasks over class indices."""
    k = len(classes)
    adjsets = [0] * k
    for i in range(k):
        forbid_i = classes[i][1]
        for j in range(i + 1, k):
            if forbid_i & classes[j][0]:
                adjsets[i] |= 1 << j
                adjsets[j] |= 1 << i
    return adjsets


def _quotient_clique_size(classes: list[tuple[int, int, int]]) -> int:
    """Greedy clique on the quotient graph; a valid lower bound on its colors."""
    k = len(classes)
    if k == 0:
        return 0
    adjsets = _class_adjsets(classes)
    seed = min(range(k), key=lambda i: (-adjsets[i].bit_count(), i))
    size = 1
    candidates = adjsets[seed]
    while candidates:
        best = min(
            _bits(candidates), key=lambda i: (-(adjsets[i] & candidates).bit_count(), i)
        )
        size += 1
        candidates &= adjsets[best]
    return size


def _select_pair(adjsets: list[int], rule: str) -> tuple[int, int] | None:
    """First undecided (non-adjacent) class pair under the configured rule."""
    k = len(adjsets)
    full = (1 << k) - 1
    nonadj = [(~adjsets[i]) & full & ~(1 << i) for i in range(k)]
    if rule == "lex":
        for i in range(k):
            if nonadj[i] >> (i + 1):
                j = ((nonadj[i] >> (i + 1)) & -(nonadj[i] >> (i + 1))).bit_length() + i
                return i, j
        return None
    best_key = None
    best_pair = None
    for i in range(k):
        later = nonadj[i] >> (i + 1)
        for off in _bits(later):
            j = i + 1 + off
            key = (-(nonadj[i] & nonadj[j]).bit_count(), i, j)
            if best_key is None or key < best_key:
                best_key = key
                best_pair = (i, j)
    return best_pair


def _coloring_from_classes(n: int, classes: list[tuple[int, int, int]]) -> Coloring:
    colors = [0] * n
    for idx, (members, _, _) in enumerate(classes):
        for v in _bits(members):
            colors[v] = idx
    return Coloring(tuple(colors))


def solve(
    g: Graph,
    cfg: SolveConfig | None = None,
    on_bounds: Callable[[int, int, int], None] | None = None,
) -> SolveReport:
    """Exact branch and bound; respects time and node limits.

    Lower bound at a node is the greedy clique of the quotient graph
    (inherited monotonically from the parent); the incumbent starts at the
    DSATUR coloring. With use_cuts, a merge whose class would outgrow the
    independent-set bound of one of its members is pruned. on_bounds, when
    given, is called as on_bounds(lower, upper, nodes) at every bound change.
    """
    if cfg is None:
        cfg = SolveConfig()
    start = time.monotonic()

    preprocess_time = 0.0
    caps = [g.n] * g.n
    if cfg.use_cuts:
        from .cuts import compute_cut_report

        report = compute_cut_report(g, node_budget=cfg.cut_node_budget)
        preprocess_time = report.preprocess_time
        caps = list(report.sizes)

    if g.n == 0:
        return SolveReport(
            0, 0, Coloring(()), Fraction(0), "optimal",
            time.monotonic() - start, 0, preprocess_time,
        )

    incumbent = dsatur_coloring(g)
    best_ub = incumbent.num_colors

    adj = g.adjacency_masks
    root_classes = [(1 << v, adj[v], caps[v]) for v in range(g.n)]
    root_lb = _quotient_clique_size(root_classes)

    stack: list[tuple[list[tuple[int, int, int]], int]] = [(root_classes, root_lb)]
    nodes = 0
    stop_status: str | None = None

    last_emitted: tuple[int, int] | None = None

    def emit() -> None:
        nonlocal last_emitted
        if on_bounds is None:
            return
        open_lbs = [lb for _, lb in stack]
        lower = min([best_ub] + open_lbs)
        if (lower, best_ub) != last_emitted:
            last_emitted = (lower, best_ub)
            on_bounds(lower, best_ub, nodes)

    emit()
    while stack:
        if time.monotonic() - start > cfg.time_limit:
            stop_status = "time_limit"
            break
        if cfg.node_limit is not None and nodes >= cfg.node_limit:
            stop_status = "node_limit"
            break
        classes, lb = stack.pop()
        if lb >= best_ub:
            continue
        nodes += 1

        adjsets = _class_adjsets(classes)
        pair = _select_pair(adjsets, cfg.branch_rule)
        if pair is None:
            # complete partition: every remaining class pair is adjacent
            if len(classes) < best_ub:
                best_ub = len(classes)
                incumbent = _coloring_from_classes(g.n, classes)
            emit()
            continue
        i, j = pair

        mi, fi, ci = classes[i]
        mj, fj, cj = classes[j]

        # different-color child: mark the classes mutually forbidden
        distinct = list(classes)
        distinct[i] = (mi, fi | mj, ci)
        distinct[j] = (mj, fj | mi, cj)
        lb_distinct = max(lb, _quotient_clique_size(distinct))
        if lb_distinct < best_ub:
            stack.append((distinct, lb_distinct))

        # same-color child: merge the classes (explored first)
        merged = (mi | mj, fi | fj, min(ci, cj))
        if merged[0].bit_count() <= merged[2]:
            merge_classes = classes[:i] + [merged] + classes[i + 1 : j] + classes[j + 1 :]
            lb_merge = max(lb, _quotient_clique_size(merge_classes))
            if lb_merge < best_ub:
                stack.append((merge_classes, lb_merge))
        emit()

    if stack and stop_status is not None:
        lower_bound = min([best_ub] + [lb for _, lb in stack])
    else:
        lower_bound = best_ub
    status = "optimal" if lower_bound == best_ub else stop_status

    return SolveReport(
        lower_bound=lower_bound,
        upper_bound=best_ub,
        incumbent=incumbent,
        gap=relative_gap(lower_bound, best_ub),
        status=status,
        wall_time=time.monotonic() - start,
        nodes=nodes,
        preprocess_time=preprocess_time,
    )
