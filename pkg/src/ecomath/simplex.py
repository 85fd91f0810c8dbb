"""Standard-form linear programs, the tableau simplex method, and an
independent vertex-enumeration oracle for two-variable problems.

A LinearProgram always stores its restrictions as A x <= b together with
x >= 0; a minimum problem is handled by negating the objective.  Only
standard forms with b >= 0 are solvable here: anything that would need
artificial variables is reported as "unsupported" rather than solved by
an invented phase-1 method.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

FEAS_TOL = 1e-9
PIVOT_MIN = 1e-9


class SimplexError(ValueError):
    pass


class IterationLimitError(RuntimeError):
    """Cycling guard tripped: the iteration cap was exceeded."""


@dataclass(frozen=True)
class LinearProgram:
    sense: str  # "max" or "min"
    c: tuple[float, ...]
    A: tuple[tuple[float, ...], ...]
    b: tuple[float, ...]
    d: float = 0.0
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise SimplexError(f"sense must be 'max' or 'min', not {self.sense!r}")
        object.__setattr__(self, "c", tuple(float(v) for v in self.c))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        object.__setattr__(
            self, "A", tuple(tuple(float(v) for v in row) for row in self.A)
        )
        n = len(self.c)
        if any(len(row) != n for row in self.A):
            raise SimplexError("each restriction row must have one entry per variable")
        if len(self.A) != len(self.b):
            raise SimplexError("rows(A) must equal dim(b)")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def m(self) -> int:
        return len(self.b)

    @classmethod
    def from_dict(cls, data: dict) -> "LinearProgram":
        return cls(
            sense=data.get("sense", "max"),
            c=data["c"],
            A=tuple(tuple(r) for r in data.get("A", [])),
            b=tuple(data.get("b", [])),
            d=float(data.get("d", 0.0)),
            names=tuple(data["names"]) if data.get("names") else None,
        )

    @classmethod
    def from_json(cls, text: str) -> "LinearProgram":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        out = {
            "sense": self.sense,
            "c": list(self.c),
            "d": self.d,
            "A": [list(r) for r in self.A],
            "b": list(self.b),
        }
        if self.names:
            out["names"] = list(self.names)
        return out


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "unbounded" | "infeasible" | "unsupported"
    x: tuple[float, ...] = ()
    z: float = float("nan")
    slacks: tuple[float, ...] = ()
    iterations: int = 0

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "x": list(self.x),
            "z": self.z,
            "slacks": list(self.slacks),
            "iterations": self.iterations,
        }


class SimplexTableau:
    """(1+m) x (1+n+m+1) tableau: z column, x columns, s columns, RHS.

    Row 0 holds (1, -c_1..-c_n, 0..0, d); rows 1..m hold the restrictions
    with their slack unit columns.  Basis variables are identified by
    index: 0 is z, 1..n the structural variables, n+1..n+m the slacks.
    """

    def __init__(self, grid: np.ndarray, basis: list[int], n: int, m: int):
        self.grid = grid
        self.basis = basis
        self.n = n
        self.m = m
        self.iteration = 0

    def copy(self) -> "SimplexTableau":
        t = SimplexTableau(self.grid.copy(), list(self.basis), self.n, self.m)
        t.iteration = self.iteration
        return t

    @property
    def rhs(self) -> np.ndarray:
        return self.grid[:, -1]

    def variable_name(self, idx: int) -> str:
        if idx == 0:
            return "z"
        if idx <= self.n:
            return f"x{idx}"
        return f"s{idx - self.n}"

    def basis_solution(self) -> np.ndarray:
        """Values of (z, x_1..x_n, s_1..s_m) with non-basis variables at 0."""
        values = np.zeros(1 + self.n + self.m)
        for row, var in enumerate(self.basis):
            values[var] = self.grid[row, -1]
        return values

    def format_text(self) -> str:
        header = ["z"] + [f"x{j}" for j in range(1, self.n + 1)] + [
            f"s{i}" for i in range(1, self.m + 1)
        ] + ["RHS"]
        lines = ["# " + ",".join(header)]
        for row in self.grid:
            lines.append(",".join(repr(float(v)) for v in row))
        return "\n".join(lines) + "\n"


def negate_to_max(lp: LinearProgram) -> LinearProgram:
    """min z = c.x + d  <=>  max -z = (-c).x - d over the same feasible set."""
    if lp.sense == "max":
        return lp
    return LinearProgram(
        sense="max",
        c=tuple(-v for v in lp.c),
        A=lp.A,
        b=lp.b,
        d=-lp.d,
        names=lp.names,
    )


def canonicalize(lp: LinearProgram) -> SimplexTableau:
    """Initial tableau with slack variables; first basis is {z, s_1..s_m}."""
    if lp.sense != "max":
        raise SimplexError("canonicalize expects a max problem; use negate_to_max")
    if any(v < 0 for v in lp.b):
        raise SimplexError(
            "unsupported: negative capacity would need a phase-1 method"
        )
    n, m = lp.n, lp.m
    grid = np.zeros((1 + m, 1 + n + m + 1))
    grid[0, 0] = 1.0
    grid[0, 1 : 1 + n] = [-v for v in lp.c]
    grid[0, -1] = lp.d
    for i in range(m):
        grid[1 + i, 1 : 1 + n] = lp.A[i]
        grid[1 + i, 1 + n + i] = 1.0
        grid[1 + i, -1] = lp.b[i]
    basis = [0] + [n + 1 + i for i in range(m)]
    return SimplexTableau(grid, basis, n, m)


def pivot(t: SimplexTableau, i_star: int, j_star: int) -> SimplexTableau:
    """Pivot operation on element (i_star, j_star); rows are 1-based over
    the restriction block, columns 1-based over the variable block."""
    p = t.grid[i_star, j_star]
    if p <= PIVOT_MIN:
        raise SimplexError(f"pivot element {p!r} at ({i_star},{j_star}) is not positive")
    out = t.copy()
    out.grid[i_star] = out.grid[i_star] / p
    for k in range(out.grid.shape[0]):
        if k != i_star and out.grid[k, j_star] != 0.0:
            out.grid[k] = out.grid[k] - out.grid[k, j_star] * out.grid[i_star]
    out.grid[:, j_star] = 0.0
    out.grid[i_star, j_star] = 1.0
    out.basis[i_star] = j_star
    out.iteration = t.iteration + 1
    return out


def iteration_cap(n: int, m: int) -> int:
    return 10 * (n + m) + 100


def solve_simplex(
    lp: LinearProgram, trace: Optional[list[SimplexTableau]] = None
) -> LpSolution:
    """Dantzig's simplex algorithm on the standard maximum problem.

    The entering column is the most negative row-0 coefficient over all
    non-basis columns (smallest index on ties); the leaving row follows the
    minimum-ratio rule (smallest ratio, then smallest row index).  A min
    problem is negated first and its optimal value negated back.
    """
    if lp.sense == "min":
        inner = solve_simplex(negate_to_max(lp), trace=trace)
        if inner.status != "optimal":
            return inner
        return LpSolution(
            "optimal", inner.x, -inner.z, inner.slacks, inner.iterations
        )
    try:
        t = canonicalize(lp)
    except SimplexError:
        return LpSolution("unsupported")
    if trace is not None:
        trace.append(t.copy())
    cap = iteration_cap(lp.n, lp.m)
    ncols = 1 + lp.n + lp.m

    while True:
        row0 = t.grid[0, 1:ncols]
        nonbasis = [j for j in range(1, ncols) if j not in t.basis]
        candidates = [(row0[j - 1], j) for j in nonbasis if row0[j - 1] < -PIVOT_MIN]
        if not candidates:
            break  # S1: optimal
        _, j_star = min(candidates)  # most negative, then smallest column index
        col = t.grid[1:, j_star]
        if np.all(col <= PIVOT_MIN):
            return LpSolution("unbounded", iterations=t.iteration)  # S3
        ratios = [
            (t.grid[i, -1] / t.grid[i, j_star], i)
            for i in range(1, 1 + lp.m)
            if t.grid[i, j_star] > PIVOT_MIN
        ]
        _, i_star = min(ratios)  # S4: smallest ratio, then smallest row index
        t = pivot(t, i_star, j_star)
        if trace is not None:
            trace.append(t.copy())
        if t.iteration > cap:
            raise IterationLimitError(
                f"no optimum after {cap} pivots; presumed cycling"
            )

    values = t.basis_solution()
    x = tuple(values[1 : 1 + lp.n])
    slacks = tuple(values[1 + lp.n :])
    z = float(values[0])
    return LpSolution("optimal", x, z, slacks, t.iteration)


# ---------------------------------------------------------------------------
# Vertex-enumeration oracle for n = 2 (the graphical method, made exact).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    solution: LpSolution
    vertices: tuple[tuple[float, float], ...] = ()
    optimal_vertices: tuple[tuple[float, float], ...] = ()
    isoquant_slope: Optional[float] = None  # slope of the (0,0)-isoquant


def _feasible(lp: LinearProgram, pt: np.ndarray, tol: float = 1e-7) -> bool:
    if pt[0] < -tol or pt[1] < -tol:
        return False
    A = np.array(lp.A, dtype=float)
    b = np.array(lp.b, dtype=float)
    if lp.m and np.any(A @ pt > b + tol * (1.0 + np.abs(b))):
        return False
    return True


def vertex_oracle(lp: LinearProgram) -> OracleResult:
    """Enumerate all candidate vertices of the feasible region of a
    two-variable standard maximum problem and evaluate z at each.

    Lines considered: the m restriction boundaries plus the two axes.
    Unboundedness is detected by probing candidate recession directions
    (axis directions and directions along each restriction boundary).
    """
    if lp.sense == "min":
        inner = vertex_oracle(negate_to_max(lp))
        sol = inner.solution
        if sol.status == "optimal":
            sol = LpSolution("optimal", sol.x, -sol.z, sol.slacks, sol.iterations)
        return OracleResult(sol, inner.vertices, inner.optimal_vertices, inner.isoquant_slope)
    if lp.n != 2:
        raise SimplexError("vertex oracle is defined for n = 2 only")

    c = np.array(lp.c, dtype=float)
    A = np.array(lp.A, dtype=float).reshape(lp.m, 2)
    b = np.array(lp.b, dtype=float)
    slope = -c[0] / c[1] if abs(c[1]) > PIVOT_MIN else None

    # all boundary lines as rows (a1, a2, rhs)
    lines = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]
    for i in range(lp.m):
        lines.append((A[i, 0], A[i, 1], b[i]))

    points = []
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            M = np.array([lines[i][:2], lines[j][:2]])
            rhs = np.array([lines[i][2], lines[j][2]])
            det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
            if abs(det) <= 1e-12:
                continue
            pt = np.linalg.solve(M, rhs)
            if _feasible(lp, pt):
                points.append(pt)

    # deduplicate
    vertices: list[np.ndarray] = []
    for pt in points:
        if not any(np.max(np.abs(pt - v)) <= 1e-8 for v in vertices):
            vertices.append(pt)

    if not vertices:
        return OracleResult(LpSolution("infeasible"), (), (), slope)

    # unboundedness: an extreme ray of {v >= 0, A v <= 0} with c.v > 0
    ray_candidates = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    for i in range(lp.m):
        dvec = np.array([A[i, 1], -A[i, 0]])
        ray_candidates.extend([dvec, -dvec])
    for v in ray_candidates:
        nv = np.linalg.norm(v)
        if nv <= 1e-12:
            continue
        v = v / nv
        if v[0] >= -1e-9 and v[1] >= -1e-9 and (lp.m == 0 or np.all(A @ v <= 1e-9)):
            if float(c @ v) > 1e-9:
                return OracleResult(LpSolution("unbounded"), tuple(map(tuple, vertices)), (), slope)

    zs = [float(c @ v) + lp.d for v in vertices]
    z_best = max(zs)
    best = [v for v, z in zip(vertices, zs) if z >= z_best - 1e-9]
    x = tuple(best[0])
    slacks = tuple(b - A @ best[0]) if lp.m else ()
    sol = LpSolution("optimal", x, z_best, slacks, 0)
    return OracleResult(
        sol,
        tuple(map(tuple, vertices)),
        tuple(map(tuple, best)),
        slope,
    )
