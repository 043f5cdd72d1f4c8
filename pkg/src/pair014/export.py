"""Model serialization for external MILP solvers, and solution verification.

Variables are named x_<u>_<v> (1-based, u < v) and f_<v>; rows keep the
names assigned at build time (t_<k>, pw_<v>_<i>, cut_<v>). Exact rational
coefficients are printed as the shortest decimal that round-trips through a
double. Both writers are byte-deterministic for a given model.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .formulation import (
    GE,
    LE,
    Model,
    PairAssignment,
    check_feasibility,
    fractional_objective,
    fv_name,
    pair_var_name,
    VAR_PAIR,
    x_to_components,
)
from .graphs import Coloring


def _num(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))


def _var_display(m: Model, kind: str, idx: int) -> str:
    if kind == VAR_PAIR:
        pv = m.pair_vars[idx]
        return pair_var_name(pv.u, pv.v)
    return fv_name(idx)


def _lp_expr(m: Model, terms) -> str:
    parts = []
    for kind, idx, coeff in terms:
        name = _var_display(m, kind, idx)
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = name if mag == 1 else f"{_num(mag)} {name}"
        parts.append(f"{sign} {body}")
    expr = " ".join(parts)
    return expr[2:] if expr.startswith("+ ") else expr


def write_lp(m: Model) -> str:
    """CPLEX LP text: objective, rows in model order, bounds, binaries."""
    n = m.graph.n
    lines = ["Minimize"]
    lines.append(" obj: " + " + ".join(fv_name(v) for v in range(n)))
    lines.append("Subject To")
    for con in m.constraints:
        lines.append(f" {con.name}: {_lp_expr(m, con.terms)} {con.sense} {_num(con.rhs)}")
    lines.append("Bounds")
    for v in range(n):
        lines.append(f" {_num(m.fv_lower)} <= {fv_name(v)} <= {_num(m.fv_upper)}")
    if m.pair_vars:
        lines.append("Binary")
        for pv in m.pair_vars:
            lines.append(f" {pair_var_name(pv.u, pv.v)}")
    lines.append("End")
    return "\n".join(lines) + "\n"


_MARKER_INT_START = "    MARKER                 'MARKER'                 'INTORG'"
_MARKER_INT_END = "    MARKER                 'MARKER'                 'INTEND'"


def write_mps(m: Model) -> str:
    """Fixed-field MPS equivalent of write_lp.

    Long names and 17-digit values overflow the classic field widths; fields
    stay whitespace-separated, which every modern reader accepts.
    """
    n = m.graph.n
    lines = ["NAME          pairvc", "ROWS", " N  obj"]
    sense_code = {LE: "L", GE: "G"}
    for con in m.constraints:
        lines.append(f" {sense_code[con.sense]}  {con.name}")

    entries: dict[str, list[tuple[str, Fraction]]] = {}
    for v in range(n):
        entries[fv_name(v)] = [("obj", Fraction(1))]
    for pv in m.pair_vars:
        entries[pair_var_name(pv.u, pv.v)] = []
    for con in m.constraints:
        for kind, idx, coeff in con.terms:
            entries[_var_display(m, kind, idx)].append((con.name, coeff))

    lines.append("COLUMNS")
    if m.pair_vars:
        lines.append(_MARKER_INT_START)
        for pv in m.pair_vars:
            col = pair_var_name(pv.u, pv.v)
            for row, coeff in entries[col]:
                lines.append(f"    {col:<9} {row:<9} {_num(coeff)}")
        lines.append(_MARKER_INT_END)
    for v in range(n):
        col = fv_name(v)
        for row, coeff in entries[col]:
            lines.append(f"    {col:<9} {row:<9} {_num(coeff)}")

    lines.append("RHS")
    for con in m.constraints:
        lines.append(f"    {'RHS':<9} {con.name:<9} {_num(con.rhs)}")

    lines.append("BOUNDS")
    for pv in m.pair_vars:
        lines.append(f" BV {'BND':<9} {pair_var_name(pv.u, pv.v)}")
    for v in range(n):
        lines.append(f" LO {'BND':<9} {fv_name(v):<9} {_num(m.fv_lower)}")
        lines.append(f" UP {'BND':<9} {fv_name(v):<9} {_num(m.fv_upper)}")
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SolutionFile:
    """Parsed solver output: objective plus variable name -> value."""

    objective: float
    values: dict[str, float]


_OBJECTIVE_RE = re.compile(r"objective\s+value\s*=\s*([^\s]+)", re.IGNORECASE)


def parse_sol(text: str) -> SolutionFile:
    """Parse `name value` solution text with `# Objective value = ...` header."""
    objective: float | None = None
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _OBJECTIVE_RE.search(line)
            if match:
                try:
                    objective = float(match.group(1))
                except ValueError as exc:
                    raise ValueError(f"line {lineno}: bad objective value") from exc
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: unparseable solution line {line!r}")
        try:
            values[tokens[0]] = float(tokens[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: bad value in {line!r}") from exc
    if objective is None:
        raise ValueError("missing `# Objective value = ...` header")
    return SolutionFile(objective, values)


def write_sol(objective: float, values: dict[str, float]) -> str:
    """Serialize a solution in the format parse_sol reads."""
    lines = [f"# Objective value = {objective!r}"]
    lines.extend(f"{name} {value!r}" for name, value in values.items())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    errors: tuple[str, ...]
    colors_used: int | None
    coloring: Coloring | None
    recomputed_objective: Fraction | None


def verify_solution(m: Model, s: SolutionFile, tol: float = 1e-6) -> VerificationReport:
    """Check an externally produced solution against the model.

    Binaries are rounded to {0, 1} (an error if farther than tol from an
    integer); feasibility runs in exact arithmetic and violations within tol
    are accepted; the recomputed color count must match both the file's
    objective and the sum of the continuous variables within tol.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    tol_frac = Fraction(tol)
    errors: list[str] = []

    known = {pair_var_name(pv.u, pv.v) for pv in m.pair_vars}
    known.update(fv_name(v) for v in range(m.graph.n))
    for name in sorted(set(s.values) - known):
        errors.append(f"unknown variable name {name!r}")

    xvals: list[int] = []
    for pv in m.pair_vars:
        name = pair_var_name(pv.u, pv.v)
        raw = s.values.get(name, 0.0)
        rounded = round(raw)
        if abs(raw - rounded) > tol or rounded not in (0, 1):
            errors.append(f"non-integral binary {name} = {raw!r}")
            rounded = 0
        xvals.append(int(rounded))
    if errors:
        return VerificationReport(False, tuple(errors), None, None, None)

    x = PairAssignment(tuple(xvals))
    fv = [Fraction(s.values.get(fv_name(v), 0.0)) for v in range(m.graph.n)]
    report = check_feasibility(m, x, fv)
    x_space_broken = False
    for viol in report.violations:
        if -viol.slack > tol_frac:
            errors.append(f"violated {viol.tag} row {viol.name} (slack {float(viol.slack):.3g})")
            if viol.tag in ("triangle", "simple_cut", "integrality"):
                x_space_broken = True

    coloring = None
    colors_used = None
    recomputed = None
    if not x_space_broken:
        try:
            components = x_to_components(m.graph, x)
        except ValueError as exc:
            errors.append(str(exc))
        else:
            recomputed = fractional_objective(m.graph, x)
            colors_used = len(components)
            colors = [0] * m.graph.n
            for idx, comp in enumerate(components):
                for v in comp:
                    colors[v] = idx
            coloring = Coloring(tuple(colors))
            if abs(Fraction(s.objective) - recomputed) > tol_frac:
                errors.append(
                    f"objective mismatch: file says {s.objective!r}, "
                    f"recomputed {float(recomputed)!r}"
                )
            fv_total = sum(fv, Fraction(0))
            if abs(fv_total - recomputed) > tol_frac:
                errors.append(
                    f"continuous-variable sum {float(fv_total)!r} does not match "
                    f"recomputed objective {float(recomputed)!r}"
                )

    return VerificationReport(not errors, tuple(errors), colors_used, coloring, recomputed)
