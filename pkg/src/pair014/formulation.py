"""Pairwise same-color MILP for vertex coloring.

One binary variable per non-adjacent vertex pair (1 iff the endpoints share a
color), transitivity enforced by triangle inequalities, and the color count
expressed through one continuous variable per vertex bounded below by a fan
of tangent lines. All model coefficients are exact rationals; floating point
appears only at export time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .graphs import Coloring, Graph

# Variable kinds used in constraint terms.
VAR_PAIR = "x"  # binary pair variable, indexed by PairVar.id
VAR_FV = "f"  # continuous per-vertex variable, indexed by vertex

LE = "<="
GE = ">="

TAG_TRIANGLE = "triangle"
TAG_TANGENT = "objective_tangent"
TAG_CUT = "simple_cut"


@dataclass(frozen=True)
class PairVar:
    """Binary variable on a non-adjacent pair u < v; id indexes the x vector."""

    u: int
    v: int
    id: int


@dataclass(frozen=True)
class LinearConstraint:
    """Inequality over model variables with exact rational coefficients.

    terms are (kind, index, coefficient) with kind VAR_PAIR or VAR_FV.
    """

    terms: tuple[tuple[str, int, Fraction], ...]
    sense: str
    rhs: Fraction
    tag: str
    name: str


@dataclass(frozen=True)
class PairAssignment:
    """0/1 value per pair variable id (the integer vector x)."""

    values: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """A single violated requirement; slack is negative by construction."""

    name: str
    tag: str
    slack: Fraction


@dataclass(frozen=True)
class FeasibilityReport:
    violations: tuple[Violation, ...]

    @property
    def feasible(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class Model:
    """The assembled MILP: minimize the sum of the n continuous variables.

    Pair variables are binary in [0, 1]; each continuous variable is bounded
    to [1/n, 1] (all tangents over integer support lie in this range).
    """

    graph: Graph
    pair_vars: tuple[PairVar, ...]
    constraints: tuple[LinearConstraint, ...]
    fv_lower: Fraction
    fv_upper: Fraction
    stats: dict[str, int] = field(compare=False)
    cut_report: object | None = field(default=None, compare=False)

    @cached_property
    def pair_index(self) -> dict[tuple[int, int], PairVar]:
        return {(pv.u, pv.v): pv for pv in self.pair_vars}

    @cached_property
    def incident(self) -> tuple[tuple[PairVar, ...], ...]:
        """Pair variables touching each vertex, in lexicographic order."""
        per_vertex: list[list[PairVar]] = [[] for _ in range(self.graph.n)]
        for pv in self.pair_vars:
            per_vertex[pv.u].append(pv)
            per_vertex[pv.v].append(pv)
        return tuple(tuple(lst) for lst in per_vertex)


def pair_var_name(u: int, v: int) -> str:
    """Export name of the pair variable on {u, v}: x_<u+1>_<v+1> with u < v."""
    return f"x_{u + 1}_{v + 1}"


def fv_name(v: int) -> str:
    """Export name of the continuous variable of vertex v: f_<v+1>."""
    return f"f_{v + 1}"


def build_pair_vars(g: Graph) -> list[PairVar]:
    """One variable per non-adjacent unordered pair; edges carry no variable.

    Ids are contiguous 0..P-1 in lexicographic (u, v) order,
    P = C(n, 2) - |E|.
    """
    return [PairVar(u, v, i) for i, (u, v) in enumerate(g.non_adjacent_pairs())]


def build_triangle_constraints(
    g: Graph, pair_vars: Sequence[PairVar] | None = None
) -> list[LinearConstraint]:
    """Transitivity inequalities with redundant rows removed.

    For each vertex triple and each choice of which pair carries the -1
    coefficient: if either +1 pair is an edge its variable is fixed to 0 and
    the row is implied by variable bounds, so it is dropped. If only the -1
    pair is an edge the row survives in the reduced form x_a + x_b <= 1.
    """
    if pair_vars is None:
        pair_vars = build_pair_vars(g)
    index = {(pv.u, pv.v): pv for pv in pair_vars}
    constraints: list[LinearConstraint] = []
    one = Fraction(1)
    for u, v, w in combinations(range(g.n), 3):
        pairs = ((u, v), (u, w), (v, w))
        for minus in pairs:
            plus = [p for p in pairs if p != minus]
            if any(p not in index for p in plus):
                continue
            if minus in index:
                terms = tuple(
                    (VAR_PAIR, index[p].id, -one if p == minus else one) for p in pairs
                )
            else:
                terms = tuple((VAR_PAIR, index[p].id, one) for p in plus)
            constraints.append(
                LinearConstraint(terms, LE, one, TAG_TRIANGLE, f"t_{len(constraints)}")
            )
    return constraints


def tangent_value(i: int, d) -> Fraction:
    """Value at d of the i-th tangent line to 1/(1+d), exact.

    The line touches the curve at d = i; over integer arguments the upper
    envelope of these lines reproduces 1/(1+d) exactly.
    """
    if i < 0:
        raise ValueError(f"tangent index must be >= 0, got {i}")
    d = Fraction(d)
    return -Fraction(1, (i + 1) * (i + 2)) * (d - i) + Fraction(1, i + 1)


def build_fv_constraints(
    g: Graph, v: int, i_max: int, pair_vars: Sequence[PairVar] | None = None
) -> list[LinearConstraint]:
    """Tangent rows for vertex v, indices i = 0..i_max.

    Each row is f_v >= tangent_i(sum of incident pair variables), rearranged
    to f_v + sum (1/((i+1)(i+2))) x_uv >= i/((i+1)(i+2)) + 1/(i+1). The sum
    ranges only over existing pair variables incident to v.
    """
    if not 0 <= i_max <= g.n - 1:
        raise ValueError(f"i_max must be in [0, {g.n - 1}], got {i_max}")
    if pair_vars is None:
        pair_vars = build_pair_vars(g)
    incident = [pv for pv in pair_vars if v in (pv.u, pv.v)]
    constraints = []
    for i in range(i_max + 1):
        coeff = Fraction(1, (i + 1) * (i + 2))
        terms = [(VAR_FV, v, Fraction(1))]
        terms.extend((VAR_PAIR, pv.id, coeff) for pv in incident)
        rhs = coeff * i + Fraction(1, i + 1)
        constraints.append(
            LinearConstraint(tuple(terms), GE, rhs, TAG_TANGENT, f"pw_{v + 1}_{i}")
        )
    return constraints


def build_model(
    g: Graph,
    *,
    use_cuts: bool = False,
    i_max_mode: str = "full",
    cut_report=None,
    cut_node_budget: int = 10**6,
) -> Model:
    """Assemble the complete model for a graph.

    i_max_mode "full" keeps all n tangent rows per vertex; "truncated" stops
    at the independent-set size bound of each vertex, which leaves the
    integer optimum unchanged because no color class can grow past it.
    Constraints are ordered triangle, tangent, cut; the result is
    deterministic for a given graph and options.
    """
    if i_max_mode not in ("full", "truncated"):
        raise ValueError(f"unknown i_max_mode {i_max_mode!r}")

    pair_vars = tuple(build_pair_vars(g))
    if (use_cuts or i_max_mode == "truncated") and cut_report is None:
        from .cuts import compute_cut_report

        cut_report = compute_cut_report(g, node_budget=cut_node_budget)

    constraints: list[LinearConstraint] = list(build_triangle_constraints(g, pair_vars))
    for v in range(g.n):
        if i_max_mode == "truncated":
            i_max = min(g.n - 1, cut_report.sizes[v] - 1)
        else:
            i_max = g.n - 1
        constraints.extend(build_fv_constraints(g, v, i_max, pair_vars))
    if use_cuts:
        from .cuts import build_simple_cuts

        constraints.extend(build_simple_cuts(g, cut_report, pair_vars))

    stats = {TAG_TRIANGLE: 0, TAG_TANGENT: 0, TAG_CUT: 0}
    for c in constraints:
        stats[c.tag] += 1
    stats["pair_vars"] = len(pair_vars)
    stats["fv_vars"] = g.n

    fv_lower = Fraction(1, g.n) if g.n >= 1 else Fraction(1)
    return Model(
        graph=g,
        pair_vars=pair_vars,
        constraints=tuple(constraints),
        fv_lower=fv_lower,
        fv_upper=Fraction(1),
        stats=stats,
        cut_report=cut_report,
    )


def coloring_to_x(g: Graph, c: Coloring) -> PairAssignment:
    """Encode a proper coloring: x_uv = 1 iff u and v share a color.

    Depends only on label equality, so permuting color labels leaves the
    output unchanged.
    """
    if len(c.colors) != g.n:
        raise ValueError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")
    if not c.is_proper(g):
        raise ValueError("coloring is not proper: an adjacent pair shares a color")
    values = tuple(
        1 if c.colors[pv.u] == c.colors[pv.v] else 0 for pv in build_pair_vars(g)
    )
    return PairAssignment(values)


def _consistent_components(g: Graph, x: PairAssignment) -> list[list[int]]:
    """Connected components of the same-color relation, validating feasibility.

    Raises ValueError unless every value is 0/1 and each component is a
    clique of the x-edges and an independent set of g (the integer triangle
    system in disguise).
    """
    pair_vars = build_pair_vars(g)
    if len(x.values) != len(pair_vars):
        raise ValueError(
            f"assignment has {len(x.values)} values, model needs {len(pair_vars)}"
        )
    for pv in pair_vars:
        if x.values[pv.id] not in (0, 1):
            raise ValueError(f"non-binary value {x.values[pv.id]} on pair ({pv.u}, {pv.v})")

    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    value = {}
    for pv in pair_vars:
        value[(pv.u, pv.v)] = x.values[pv.id]
        if x.values[pv.id] == 1:
            parent[find(pv.u)] = find(pv.v)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    components = sorted(groups.values(), key=lambda comp: comp[0])

    for comp in components:
        for a, b in combinations(comp, 2):
            if g.has_edge(a, b):
                raise ValueError(
                    f"infeasible assignment: adjacent vertices {a} and {b} linked"
                )
            if value[(a, b)] != 1:
                raise ValueError(
                    f"infeasible assignment: transitivity broken on pair ({a}, {b})"
                )
    return components


def x_to_components(g: Graph, x: PairAssignment) -> list[list[int]]:
    """Partition of the vertices into same-color classes implied by x."""
    return _consistent_components(g, x)


def fractional_objective(g: Graph, x: PairAssignment) -> Fraction:
    """Sum over vertices of 1/(1 + number of linked partners), exact.

    Each same-color class of size k contributes k * (1/k) = 1, so the total
    equals the class count.
    """
    _consistent_components(g, x)
    degree = [0] * g.n
    for pv in build_pair_vars(g):
        if x.values[pv.id] == 1:
            degree[pv.u] += 1
            degree[pv.v] += 1
    return sum((Fraction(1, 1 + d) for d in degree), Fraction(0))


def check_feasibility(
    m: Model, x: PairAssignment, fv: Sequence | None = None
) -> FeasibilityReport:
    """Evaluate every model requirement at (x, fv) and report violations.

    Tangent rows and the fv bounds are checked only when fv is given. The
    report lists each violated row with its (negative) slack; an empty
    report means feasible.
    """
    if len(x.values) != len(m.pair_vars):
        raise ValueError(
            f"assignment has {len(x.values)} values, model has {len(m.pair_vars)} pair vars"
        )
    fv_values: list[Fraction] | None = None
    if fv is not None:
        if len(fv) != m.graph.n:
            raise ValueError(f"fv covers {len(fv)} vertices, graph has {m.graph.n}")
        fv_values = [Fraction(val) for val in fv]

    violations: list[Violation] = []

    for pv in m.pair_vars:
        val = x.values[pv.id]
        if val not in (0, 1):
            gap = min(abs(Fraction(val)), abs(Fraction(val) - 1))
            violations.append(
                Violation(f"int[{pair_var_name(pv.u, pv.v)}]", "integrality", -gap)
            )
    if fv_values is not None:
        for v, val in enumerate(fv_values):
            if val < m.fv_lower:
                violations.append(
                    Violation(f"bound[{fv_name(v)}]", "bounds", val - m.fv_lower)
                )
            elif val > m.fv_upper:
                violations.append(
                    Violation(f"bound[{fv_name(v)}]", "bounds", m.fv_upper - val)
                )

    for con in m.constraints:
        if con.tag == TAG_TANGENT and fv_values is None:
            continue
        lhs = Fraction(0)
        for kind, idx, coeff in con.terms:
            if kind == VAR_PAIR:
                lhs += coeff * x.values[idx]
            else:
                lhs += coeff * fv_values[idx]
        slack = con.rhs - lhs if con.sense == LE else lhs - con.rhs
        if slack < 0:
            violations.append(Violation(con.name, con.tag, slack))

    return FeasibilityReport(tuple(violations))
