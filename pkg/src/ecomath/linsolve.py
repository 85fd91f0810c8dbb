"""Gaussian elimination and everything built on top of it.

Row reduction with partial pivoting is the single elimination routine;
rank, determinants, inverses, solvability classification and the small
symmetric eigenproblems all reduce to it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import EPS_ZERO, DimensionError, Matrix, Vector

PIVOT_TOL = 1e-10  # below this a column is considered pivot-free


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    """A x = b with an m x n coefficient matrix and an m-dim image vector."""

    A: Matrix
    b: Vector

    def __post_init__(self):
        if self.A.rows != self.b.n:
            raise DimensionError(
                f"rows(A)={self.A.rows} does not match dim(b)={self.b.n}"
            )


@dataclass(frozen=True)
class SolutionSet:
    """Classification and parametrization of the solutions of a LinearSystem.

    kind is one of "none", "unique", "multiple".  For "multiple" the full
    solution set is particular + span(free_directions); each free direction
    carries entry 1 at its free column.
    """

    kind: str
    particular: Optional[Vector]
    free_directions: tuple[Vector, ...]
    rank_A: int
    rank_Ab: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "particular": list(self.particular.entries) if self.particular else None,
            "free_directions": [list(v.entries) for v in self.free_directions],
            "rank_A": self.rank_A,
            "rank_Ab": self.rank_Ab,
        }


def rref(M: Matrix) -> tuple[Matrix, int, tuple[int, ...], float]:
    """Reduced row-echelon form via partial pivoting.

    Returns (R, rank, pivot_cols, det_factor) where det_factor accumulates
    the effect of row swaps and scalings, so for a square input
    det(M) = det_factor * det(R).  Pivots are chosen by maximum absolute
    value, ties broken by smallest row index.
    """
    a = M.to_array().copy()
    m, n = a.shape
    det_factor = 1.0
    pivot_cols = []
    r = 0
    for j in range(n):
        if r >= m:
            break
        col = np.abs(a[r:, j])
        i_rel = int(np.argmax(col))  # argmax returns the first maximum
        if col[i_rel] <= PIVOT_TOL:
            a[r:, j] = 0.0  # structural zero, keep the tail clean
            continue
        i = r + i_rel
        if i != r:
            a[[r, i]] = a[[i, r]]
            det_factor = -det_factor
        p = a[r, j]
        a[r] = a[r] / p
        det_factor *= p
        for k in range(m):
            if k != r and a[k, j] != 0.0:
                a[k] = a[k] - a[k, j] * a[r]
        a[:, j] = 0.0
        a[r, j] = 1.0
        pivot_cols.append(j)
        r += 1
    return Matrix.from_array(a), r, tuple(pivot_cols), det_factor


def rank(M: Matrix) -> int:
    return rref(M)[1]


def solve(sys: LinearSystem) -> SolutionSet:
    """Classify and solve A x = b by elimination on the augmented matrix."""
    A = sys.A.to_array()
    b = sys.b.to_array()
    m, n = A.shape
    aug = np.hstack([A, b.reshape(-1, 1)])
    R, rank_Ab, pivots, _ = rref(Matrix.from_array(aug))
    Ra = R.to_array()
    pivots_A = tuple(j for j in pivots if j < n)
    rank_A = len(pivots_A)

    if rank_Ab > rank_A:
        return SolutionSet("none", None, (), rank_A, rank_Ab)

    particular = np.zeros(n)
    for row_idx, j in enumerate(pivots_A):
        particular[j] = Ra[row_idx, n]

    if rank_A == n:
        return SolutionSet("unique", Vector(tuple(particular)), (), rank_A, rank_Ab)

    free_cols = [j for j in range(n) if j not in pivots_A]
    directions = []
    for f in free_cols:
        d = np.zeros(n)
        d[f] = 1.0
        for row_idx, j in enumerate(pivots_A):
            d[j] = -Ra[row_idx, f]
        directions.append(Vector(tuple(d)))
    return SolutionSet(
        "multiple", Vector(tuple(particular)), tuple(directions), rank_A, rank_Ab
    )


def determinant(A: Matrix) -> float:
    """Determinant: closed forms for n <= 3, elimination product beyond."""
    if not A.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    if n == 1:
        return A[0, 0]
    if n == 2:
        return A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    if n == 3:
        a = A.to_array()
        return float(
            a[0, 0] * a[1, 1] * a[2, 2]
            + a[0, 1] * a[1, 2] * a[2, 0]
            + a[0, 2] * a[1, 0] * a[2, 1]
            - a[0, 2] * a[1, 1] * a[2, 0]
            - a[0, 0] * a[1, 2] * a[2, 1]
            - a[0, 1] * a[1, 0] * a[2, 2]
        )
    R, rk, _, det_factor = rref(A)
    if rk < n:
        return 0.0
    return det_factor  # det(R) = 1 for a regular matrix


def is_regular(A: Matrix, tol: float = EPS_ZERO) -> bool:
    return abs(determinant(A)) > tol


def inverse(A: Matrix) -> Matrix:
    """Inverse via simultaneous elimination on [A | I]."""
    if not A.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {A.rows}x{A.cols}")
    det = determinant(A)
    if abs(det) <= EPS_ZERO:
        raise SingularMatrixError(f"matrix is singular (|det| = {abs(det):.3e})")
    n = A.rows
    aug = np.hstack([A.to_array(), np.eye(n)])
    R, rk, _, _ = rref(Matrix.from_array(aug))
    if rk < n:
        raise SingularMatrixError("matrix is singular (rank deficient)")
    return Matrix.from_array(R.to_array()[:, n:])


# ---------------------------------------------------------------------------
# Symmetric eigenproblems for n <= 3 via the characteristic equation.
# ---------------------------------------------------------------------------

def _char_poly_coeffs(a: np.ndarray) -> list[float]:
    """Coefficients of det(A - t*I), highest power first."""
    n = a.shape[0]
    if n == 1:
        return [-1.0, a[0, 0]]
    if n == 2:
        return [1.0, -(a[0, 0] + a[1, 1]), a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]]
    # n == 3: det(A - tI) = -t^3 + tr(A) t^2 - c1 t + det(A)
    tr = float(np.trace(a))
    c1 = (
        a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        + a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0]
        + a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]
    )
    det = determinant(Matrix.from_array(a))
    return [-1.0, tr, -c1, det]


def _cubic_real_roots(coeffs: list[float]) -> list[float]:
    """All real roots of a cubic with real coefficients.

    Depressed-cubic Cardano/trigonometric evaluation followed by one
    Newton polish step per root.
    """
    a, b, c, d = coeffs
    b, c, d = b / a, c / a, d / a
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    shift = -b / 3.0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    roots: list[float]
    if disc > EPS_ZERO:
        u = cmath.exp(cmath.log(-q / 2.0 + cmath.sqrt(disc)) / 3.0)
        t = u - p / (3.0 * u)
        roots = [t.real + shift]
    elif abs(p) <= EPS_ZERO:
        roots = [math.copysign(abs(q) ** (1.0 / 3.0), -q) + shift]
    else:
        # three real roots: trigonometric form
        r = math.sqrt(-p ** 3 / 27.0)
        phi = math.acos(max(-1.0, min(1.0, -q / (2.0 * r))))
        mag = 2.0 * math.sqrt(-p / 3.0)
        roots = [mag * math.cos((phi + 2.0 * math.pi * k) / 3.0) + shift for k in range(3)]

    def f(t):
        return ((a * t + coeffs[1]) * t + coeffs[2]) * t + coeffs[3]

    def fprime(t):
        return (3.0 * a * t + 2.0 * coeffs[1]) * t + coeffs[2]

    polished = []
    for t in roots:
        fp = fprime(t)
        if abs(fp) > PIVOT_TOL:
            t = t - f(t) / fp
        polished.append(t)
    return sorted(polished)


def eigen_sym(A: Matrix) -> list[tuple[float, Vector]]:
    """Eigenvalues/unit eigenvectors of a symmetric matrix, n in {1, 2, 3}."""
    if not A.is_square:
        raise DimensionError("eigen_sym needs a square matrix")
    n = A.rows
    if n > 3:
        raise DimensionError("eigen_sym supports n <= 3 only")
    a = A.to_array()
    if np.max(np.abs(a - a.T)) > EPS_ZERO:
        raise ValueError("matrix is not symmetric")

    if n == 1:
        return [(a[0, 0], Vector((1.0,)))]
    if n == 2:
        tr = a[0, 0] + a[1, 1]
        det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        disc = max(tr * tr / 4.0 - det, 0.0)
        s = math.sqrt(disc)
        eigenvalues = sorted([tr / 2.0 - s, tr / 2.0 + s])
    else:
        eigenvalues = _cubic_real_roots(_char_poly_coeffs(a))

    # cluster near-equal eigenvalues so repeated roots share one null space
    clusters: list[list[float]] = []
    for lam in sorted(eigenvalues):
        if clusters and abs(lam - clusters[-1][-1]) <= 1e-7 * (1.0 + abs(lam)):
            clusters[-1].append(lam)
        else:
            clusters.append([lam])

    pairs: list[tuple[float, Vector]] = []
    for cluster in clusters:
        lam = sum(cluster) / len(cluster)
        shifted = Matrix.from_array(a - lam * np.eye(n))
        R, rk, pivots, _ = rref(shifted)
        Ra = R.to_array()
        free_cols = [j for j in range(n) if j not in pivots]
        if not free_cols:
            # rounding pushed the matrix to full rank; drop the weakest pivot
            free_cols = [pivots[-1]]
            pivots = pivots[:-1]
            Ra = Ra.copy()
        # symmetric matrices: geometric multiplicity equals algebraic, so the
        # null-space dimension is authoritative (Cardano can collapse a
        # repeated root into a single value)
        vecs = []
        for f in free_cols:
            v = np.zeros(n)
            v[f] = 1.0
            for row_idx, j in enumerate(pivots):
                v[j] = -Ra[row_idx, f]
            v = v / np.linalg.norm(v)
            vecs.append(v)
        # orthonormalize within the cluster (Gram-Schmidt)
        ortho: list[np.ndarray] = []
        for v in vecs:
            for u in ortho:
                v = v - np.dot(u, v) * u
            nv = np.linalg.norm(v)
            if nv > PIVOT_TOL:
                ortho.append(v / nv)
        for v in ortho:
            pairs.append((lam, Vector(tuple(v))))
    return pairs
