"""Pairwise same-color formulation of vertex coloring.

Builds the MILP whose binary variables sit on non-adjacent vertex pairs,
solves it exactly at desk scale with a pair-branching search, exports LP/MPS
for external solvers, and verifies solutions against brute force.
"""

from .cuts import CutReport, build_simple_cuts, compute_cut_report, max_independent_with
from .export import (
    SolutionFile,
    VerificationReport,
    parse_sol,
    verify_solution,
    write_lp,
    write_mps,
    write_sol,
)
from .formulation import (
    FeasibilityReport,
    LinearConstraint,
    Model,
    PairAssignment,
    PairVar,
    Violation,
    build_fv_constraints,
    build_model,
    build_pair_vars,
    build_triangle_constraints,
    check_feasibility,
    coloring_to_x,
    fractional_objective,
    fv_name,
    pair_var_name,
    tangent_value,
    x_to_components,
)
from .graphs import (
    Coloring,
    DimacsError,
    Graph,
    complement,
    density,
    dsatur_coloring,
    gen_gnp,
    greedy_clique,
    parse_dimacs,
    write_dimacs,
)
from .oracle import OracleResult, chromatic_number, is_k_colorable
from .solver import SolveConfig, SolveReport, relative_gap, solve

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "CutReport",
    "DimacsError",
    "FeasibilityReport",
    "Graph",
    "LinearConstraint",
    "Model",
    "OracleResult",
    "PairAssignment",
    "PairVar",
    "SolutionFile",
    "SolveConfig",
    "SolveReport",
    "VerificationReport",
    "Violation",
    "build_fv_constraints",
    "build_model",
    "build_pair_vars",
    "build_simple_cuts",
    "build_triangle_constraints",
    "check_feasibility",
    "chromatic_number",
    "coloring_to_x",
    "complement",
    "compute_cut_report",
    "density",
    "dsatur_coloring",
    "fractional_objective",
    "fv_name",
    "gen_gnp",
    "greedy_clique",
    "is_k_colorable",
    "max_independent_with",
    "pair_var_name",
    "parse_dimacs",
    "parse_sol",
    "relative_gap",
    "solve",
    "tangent_value",
    "verify_solution",
    "write_dimacs",
    "write_lp",
    "write_mps",
    "write_sol",
    "x_to_components",
]
