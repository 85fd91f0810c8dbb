"""Dense real vectors and matrices with the elementary algebraic operations.

Values are immutable after construction and every operation is a pure
function, so everything here is safe to share between threads.  Reals are
plain 64-bit floats; ``EPS_ZERO`` is the single comparison tolerance used
across the package unless an operation documents otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

EPS_ZERO = 1e-9


class DimensionError(ValueError):
    """Operands do not have compatible dimensions/formats."""


class FormatError(ValueError):
    """A matrix/vector text file could not be parsed."""


@dataclass(frozen=True)
class Vector:
    """Real-valued vector with a column/row orientation flag."""

    entries: tuple[float, ...]
    orientation: str = "col"  # "col" or "row"

    def __post_init__(self):
        if len(self.entries) < 1:
            raise DimensionError("vector needs at least one entry")
        if self.orientation not in ("col", "row"):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        object.__setattr__(self, "entries", tuple(float(v) for v in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def T(self) -> "Vector":
        return Vector(self.entries, "row" if self.orientation == "col" else "col")

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class Matrix:
    """Real-valued (m x n) matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[float, ...] = field(repr=False)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix format must be at least 1x1")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(float(v) for v in self.entries))

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("matrix needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), n, tuple(v for r in rows for v in r))

    @classmethod
    def from_array(cls, a) -> "Matrix":
        a = np.atleast_2d(np.asarray(a, dtype=float))
        return cls(a.shape[0], a.shape[1], tuple(a.ravel()))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_array(np.eye(n))

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls(m, n, (0.0,) * (m * n))

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix.from_array(self.to_array().T)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[float, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]


def linear_combination(coeffs, vectors) -> Vector:
    """Componentwise sum of lambda_i * v_i over vectors of equal dimension."""
    coeffs = list(coeffs)
    vectors = list(vectors)
    if not vectors or len(coeffs) != len(vectors):
        raise DimensionError("need matching, non-empty coefficient and vector lists")
    n = vectors[0].n
    orientation = vectors[0].orientation
    if any(v.n != n or v.orientation != orientation for v in vectors):
        raise DimensionError("all vectors must share dimension and orientation")
    acc = np.zeros(n)
    for lam, v in zip(coeffs, vectors):
        acc += float(lam) * v.to_array()
    return Vector(tuple(acc), orientation)


def dot(a: Vector, b: Vector) -> float:
    """Euclidian scalar product; orientation is auto-transposed as a convenience."""
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return float(np.dot(a.to_array(), b.to_array()))


def are_orthogonal(a: Vector, b: Vector, tol: float = EPS_ZERO) -> bool:
    return abs(dot(a, b)) <= tol


def norm(a: Vector) -> float:
    return math.sqrt(dot(a, a))


def normalize(a: Vector) -> Vector:
    la = norm(a)
    if la <= EPS_ZERO:
        raise ValueError("cannot normalize the zero vector")
    return Vector(tuple(v / la for v in a.entries), a.orientation)


def angle(a: Vector, b: Vector) -> float:
    """Angle enclosed between two non-zero vectors, in [0, pi].

    The cosine is clamped to [-1, 1] so floating-point drift cannot
    produce a domain error.
    """
    la, lb = norm(a), norm(b)
    if la <= EPS_ZERO or lb <= EPS_ZERO:
        raise ValueError("angle undefined for zero vectors")
    c = dot(a, b) / (la * lb)
    return math.acos(max(-1.0, min(1.0, c)))


def mat_combine(alpha: float, A: Matrix, beta: float, B: Matrix) -> Matrix:
    """Entrywise alpha*A + beta*B for matrices of the same format."""
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise DimensionError(
            f"format mismatch: {A.rows}x{A.cols} vs {B.rows}x{B.cols}"
        )
    return Matrix.from_array(alpha * A.to_array() + beta * B.to_array())


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise DimensionError(
            f"inner dimensions disagree: {A.rows}x{A.cols} times {B.rows}x{B.cols}"
        )
    return Matrix.from_array(A.to_array() @ B.to_array())


def mat_vec(A: Matrix, x: Vector) -> Vector:
    """A applied to a column vector."""
    if A.cols != x.n:
        raise DimensionError(f"inner dimensions disagree: {A.cols} vs {x.n}")
    return Vector(tuple(A.to_array() @ x.to_array()), "col")


# ---------------------------------------------------------------------------
# Shared matrix text format: one row per line, comma-separated entries,
# '.' decimal point, blank lines and '#' comment lines ignored.
# ---------------------------------------------------------------------------

def parse_matrix_text(text: str) -> Matrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append([float(tok) for tok in stripped.split(",")])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if not rows:
        raise FormatError("no data rows found")
    try:
        return Matrix.from_rows(rows)
    except DimensionError as exc:
        raise FormatError(str(exc)) from None


def parse_vector_text(text: str) -> Vector:
    """A vector file is a matrix file with a single row or a single column."""
    m = parse_matrix_text(text)
    if m.cols == 1:
        return Vector(tuple(m.to_array()[:, 0]), "col")
    if m.rows == 1:
        return Vector(tuple(m.row(0)), "row")
    raise FormatError(f"expected a single row or column, got {m.rows}x{m.cols}")


def format_matrix_text(M: Matrix) -> str:
    lines = []
    for i in range(M.rows):
        lines.append(",".join(repr(v) for v in M.row(i)))
    return "\n".join(lines) + "\n"


def format_vector_text(v: Vector) -> str:
    if v.orientation == "row":
        return ",".join(repr(x) for x in v.entries) + "\n"
    return "\n".join(repr(x) for x in v.entries) + "\n"


def read_matrix(path) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())


def read_vector(path) -> Vector:
    with open(path, encoding="utf-8") as fh:
        return parse_vector_text(fh.read())


def write_matrix(path, M: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix_text(M))
