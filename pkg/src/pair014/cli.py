"""Command-line front end: gen, build, export, solve, verify, bench.

Exit codes: 0 success (or solved to optimality), 2 solver stopped on a
limit, 1 error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from .export import parse_sol, verify_solution, write_lp, write_mps, write_sol
from .formulation import build_model, coloring_to_x, fv_name, pair_var_name
from .graphs import Graph, density, gen_gnp, parse_dimacs, write_dimacs
from .solver import SolveConfig, SolveReport, solve


def _percent(value: Fraction, places: int) -> str:
    """Exact rational -> fixed-point percent string."""
    quantum = Decimal(1).scaleb(-places)
    dec = Decimal(value.numerator) / Decimal(value.denominator) * 100
    return str(dec.quantize(quantum, rounding=ROUND_HALF_EVEN))


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as handle:
        return parse_dimacs(handle.read())


def _parse_seeds(spec: str) -> list[int]:
    if ":" in spec:
        lo, hi = spec.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in spec.split(",") if tok]


def cmd_gen(args: argparse.Namespace) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    for seed in range(args.seed, args.seed + args.count):
        g = gen_gnp(args.n, args.p, seed)
        name = f"gnp_{args.n}_{args.p}_{seed}.col"
        path = os.path.join(args.out_dir, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(write_dimacs(g))
        dens = _percent(density(g), 1) if g.n >= 2 else ""
        print(f"{path}  n={g.n}  m={g.num_edges}  density[%]={dens}")
    return 0


def _build_from_args(args: argparse.Namespace):
    g = _load_graph(args.graph)
    i_max_mode = "truncated" if getattr(args, "truncate_tangents", False) else "full"
    model = build_model(g, use_cuts=args.cuts, i_max_mode=i_max_mode)
    return g, model, i_max_mode


def _print_model_stats(model, use_cuts: bool) -> None:
    stats = model.stats
    print(f"pair vars: {stats['pair_vars']}")
    print(f"fv vars: {stats['fv_vars']}")
    print(f"triangle: {stats['triangle']}")
    print(f"objective_tangent: {stats['objective_tangent']}")
    if use_cuts:
        prep = model.cut_report.preprocess_time if model.cut_report else 0.0
        print(f"simple_cut: {stats['simple_cut']} ({prep:.2f})")


def cmd_build(args: argparse.Namespace) -> int:
    _, model, _ = _build_from_args(args)
    _print_model_stats(model, args.cuts)
    if args.out:
        return _write_model(args, model)
    return 0


def _write_model(args: argparse.Namespace, model) -> int:
    text = write_lp(model) if args.format == "lp" else write_mps(model)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        manifest = {
            "graph": args.graph,
            "format": args.format,
            "use_cuts": args.cuts,
            "i_max_mode": "truncated" if getattr(args, "truncate_tangents", False) else "full",
            "model": os.path.basename(args.out),
        }
        with open(args.out + ".manifest.json", "w", encoding="utf-8") as handle:
            json.dump(manifest, handle, indent=2)
            handle.write("\n")
        print(f"wrote {args.out} and {args.out}.manifest.json")
    else:
        sys.stdout.write(text)
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    _, model, _ = _build_from_args(args)
    if args.out:
        _print_model_stats(model, args.cuts)
    return _write_model(args, model)


def _solution_values(g: Graph, report: SolveReport) -> dict[str, float]:
    x = coloring_to_x(g, report.incumbent)
    values: dict[str, float] = {}
    degree = [0] * g.n
    from .formulation import build_pair_vars

    pair_vars = build_pair_vars(g)
    for pv in pair_vars:
        values[pair_var_name(pv.u, pv.v)] = float(x.values[pv.id])
        if x.values[pv.id]:
            degree[pv.u] += 1
            degree[pv.v] += 1
    for v in range(g.n):
        values[fv_name(v)] = 1.0 / (1 + degree[v])
    return values


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cfg = SolveConfig(
        time_limit=args.time_limit,
        node_limit=args.node_limit,
        use_cuts=args.cuts,
        branch_rule=args.branch_rule,
    )
    report = solve(g, cfg)
    gap_str = "---" if report.status == "optimal" else _percent(report.gap, 2)
    print(f"instance: {args.graph}")
    print(f"n: {g.n}  m: {g.num_edges}")
    print(f"status: {report.status}")
    print(f"upper bound (colors): {report.upper_bound}")
    print(f"lower bound: {report.lower_bound}")
    print(f"gap[%]: {gap_str}")
    print(f"nodes: {report.nodes}")
    print(f"time[s]: {report.wall_time:.2f}")
    if args.cuts:
        print(f"preprocess[s]: {report.preprocess_time:.2f}")
    if args.write_sol:
        text = write_sol(float(report.upper_bound), _solution_values(g, report))
        with open(args.write_sol, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.write_sol}")
    return 0 if report.status == "optimal" else 2


def cmd_verify(args: argparse.Namespace) -> int:
    if args.manifest:
        with open(args.manifest, encoding="utf-8") as handle:
            manifest = json.load(handle)
        graph_path = manifest["graph"]
        if not os.path.exists(graph_path):
            graph_path = os.path.join(os.path.dirname(args.manifest), graph_path)
        g = _load_graph(graph_path)
        model = build_model(
            g,
            use_cuts=manifest.get("use_cuts", False),
            i_max_mode=manifest.get("i_max_mode", "full"),
        )
    elif args.graph:
        g, model, _ = _build_from_args(args)
    else:
        print("verify needs --manifest or --graph", file=sys.stderr)
        return 1
    with open(args.solution, encoding="utf-8") as handle:
        sol = parse_sol(handle.read())
    result = verify_solution(model, sol, tol=args.tol)
    if result.ok:
        print(f"solution verified: {result.colors_used} colors")
        return 0
    print("solution rejected:")
    for err in result.errors:
        print(f"  {err}")
    return 1


@dataclass
class _InstanceRow:
    group: str
    label: str
    n: int
    p: str
    seed: str
    density_pct: str
    report: SolveReport


def _aggregate(rows: list[_InstanceRow], use_cuts: bool, singleton: bool):
    """Cell summary: average time over solved, stars and average gap otherwise."""
    solved = [r for r in rows if r.report.status == "optimal"]
    unsolved = [r for r in rows if r.report.status != "optimal"]
    avg_time = (
        sum(r.report.wall_time for r in solved) / len(solved) if solved else None
    )
    avg_prep = sum(r.report.preprocess_time for r in rows) / len(rows) if rows else 0.0
    avg_gap = (
        sum((r.report.gap for r in unsolved), Fraction(0)) / len(unsolved)
        if unsolved
        else None
    )
    if unsolved and not singleton:
        time_display = "*" * len(unsolved)
    elif singleton:
        time_display = f"{rows[0].report.wall_time:.2f}"
    else:
        time_display = f"{avg_time:.2f}"
    if use_cuts:
        time_display += f" ({avg_prep:.2f})"
    gap_display = "---" if not unsolved else _percent(avg_gap, 2)
    densities = [r.density_pct for r in rows if r.density_pct]
    density_display = densities[0] if singleton and densities else ""
    return {
        "solved": len(solved),
        "unsolved": len(unsolved),
        "avg_time": avg_time,
        "avg_prep": avg_prep,
        "avg_gap": avg_gap,
        "time_display": time_display,
        "gap_display": gap_display,
        "density_display": density_display,
    }


def run_bench(
    cells: list[tuple[int, str]],
    seeds: list[int],
    files: list[str],
    use_cuts: bool,
    time_limit: float,
) -> tuple[str, str]:
    """Run every instance and return (text table, CSV text)."""
    groups: list[tuple[str, bool, list[_InstanceRow]]] = []
    for n, p_str in cells:
        p = float(p_str)
        rows = []
        for seed in seeds:
            g = gen_gnp(n, p, seed)
            report = solve(g, SolveConfig(time_limit=time_limit, use_cuts=use_cuts))
            dens = _percent(density(g), 1) if g.n >= 2 else ""
            rows.append(
                _InstanceRow(f"{n} {p_str}", f"gnp_{n}_{p_str}_{seed}", n, p_str, str(seed), dens, report)
            )
        groups.append((f"{n} {p_str}", False, rows))
    for path in files:
        g = _load_graph(path)
        report = solve(g, SolveConfig(time_limit=time_limit, use_cuts=use_cuts))
        dens = _percent(density(g), 1) if g.n >= 2 else ""
        label = os.path.basename(path)
        groups.append(
            (label, True, [_InstanceRow(label, label, g.n, "", "", dens, report)])
        )

    headers = ["instance", "n", "p", "density[%]", "time[s]", "gap[%]"]
    table_rows = []
    csv_buf = io.StringIO()
    writer = csv.writer(csv_buf)
    writer.writerow(
        [
            "row_type", "group", "instance", "n", "p", "seed", "density_pct",
            "status", "time_s", "preprocess_s", "lower_bound", "upper_bound",
            "gap_pct", "solved", "unsolved", "time_display", "gap_display",
        ]
    )
    for key, singleton, rows in groups:
        for r in rows:
            gap_pct = "" if r.report.status == "optimal" else _percent(r.report.gap, 2)
            writer.writerow(
                [
                    "instance", key, r.label, r.n, r.p, r.seed, r.density_pct,
                    r.report.status, repr(r.report.wall_time),
                    repr(r.report.preprocess_time), r.report.lower_bound,
                    r.report.upper_bound, gap_pct, "", "", "", "",
                ]
            )
        agg = _aggregate(rows, use_cuts, singleton)
        writer.writerow(
            [
                "cell", key, "", rows[0].n, rows[0].p, "", agg["density_display"],
                "", repr(agg["avg_time"]) if agg["avg_time"] is not None else "",
                repr(agg["avg_prep"]), "", "",
                _percent(agg["avg_gap"], 2) if agg["avg_gap"] is not None else "",
                agg["solved"], agg["unsolved"], agg["time_display"], agg["gap_display"],
            ]
        )
        table_rows.append(
            [
                key, str(rows[0].n), rows[0].p, agg["density_display"],
                agg["time_display"], agg["gap_display"],
            ]
        )

    widths = [len(h) for h in headers]
    for row in table_rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in table_rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    table = "\n".join(lines) + ("\n" if table_rows else "\n")
    return table, csv_buf.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    cells = []
    if args.cells:
        for chunk in args.cells.split(","):
            n_str, p_str = chunk.split(":")
            cells.append((int(n_str), p_str))
    seeds = _parse_seeds(args.seeds)
    table, csv_text = run_bench(cells, seeds, args.files, args.cuts, args.time_limit)
    sys.stdout.write(table)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(csv_text)
        print(f"wrote {args.csv}")
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pair014",
        description="Pairwise same-color MILP toolkit for vertex coloring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate seeded random DIMACS instances")
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("p", type=float)
    p_gen.add_argument("seed", type=int)
    p_gen.add_argument("count", type=int)
    p_gen.add_argument("-o", "--out-dir", default=".")
    p_gen.set_defaults(func=cmd_gen)

    for name, func in (("build", cmd_build), ("export", cmd_export)):
        p_sub = sub.add_parser(name, help=f"{name} the model for a DIMACS graph")
        p_sub.add_argument("graph")
        p_sub.add_argument("--cuts", action="store_true")
        p_sub.add_argument(
            "--truncate-tangents",
            action="store_true",
            help="stop tangent rows at each vertex's independent-set bound",
        )
        p_sub.add_argument("--format", choices=("lp", "mps"), default="lp")
        p_sub.add_argument("-o", "--out")
        p_sub.set_defaults(func=func)

    p_solve = sub.add_parser("solve", help="run the internal exact solver")
    p_solve.add_argument("graph")
    p_solve.add_argument("--time-limit", type=float, default=7200.0)
    p_solve.add_argument("--node-limit", type=int, default=None)
    p_solve.add_argument("--cuts", action="store_true")
    p_solve.add_argument("--branch-rule", default="common_nonneighbors")
    p_solve.add_argument("--write-sol")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="verify a solution file against a model")
    p_verify.add_argument("solution")
    p_verify.add_argument("--manifest")
    p_verify.add_argument("--graph")
    p_verify.add_argument("--cuts", action="store_true")
    p_verify.add_argument("--truncate-tangents", action="store_true")
    p_verify.add_argument("--tol", type=float, default=1e-6)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="solve instance cells and tabulate")
    p_bench.add_argument("files", nargs="*")
    p_bench.add_argument("--cells", help="comma-separated n:p pairs, e.g. 30:0.9,50:0.5")
    p_bench.add_argument("--seeds", default="0:4", help="range lo:hi or comma list")
    p_bench.add_argument("--cuts", action="store_true")
    p_bench.add_argument("--time-limit", type=float, default=7200.0)
    p_bench.add_argument("--csv")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
