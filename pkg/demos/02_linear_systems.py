"""Solving linear systems: one solution, none, or a whole family.

Markets with several interacting goods reduce to A x = b. Gaussian
elimination tells us which of the three regimes we are in, and — when
solutions form a family — parameterizes all of them.
"""

from ecomath.linalg import Matrix, Vector, format_matrix_text
from ecomath.linsolve import LinearSystem, determinant, eigen_sym, inverse, solve

# Regime 1: a unique solution. Two goods, two market-clearing conditions.
A = Matrix.from_rows([[1, 1], [1, -1]])
b = Vector((3.0, 1.0))
out = solve(LinearSystem(A, b))
print("unique system:", out.kind, "-> x =", out.particular)

# Regime 2: inconsistent conditions, no solution at all.
A = Matrix.from_rows([[1, 1], [1, 1]])
out = solve(LinearSystem(A, Vector((1.0, 2.0))))
print("inconsistent system:", out.kind)

# Regime 3: redundant conditions, a one-parameter family.
A = Matrix.from_rows([[1, 2], [2, 4]])
out = solve(LinearSystem(A, Vector((3.0, 6.0))))
print("redundant system:", out.kind)
print("  particular solution:", out.particular)
print("  free directions:   ", out.free_directions)
print()

# Determinants and inverses: det != 0 is exactly the unique-solution case.
A = Matrix.from_rows([[2, 0, 1], [0, 1, 0], [1, 0, 1]])
print("det(A) =", determinant(A))
print("inverse(A):\n" + format_matrix_text(inverse(A)))

# Symmetric matrices (e.g. covariance of returns) have real eigenvalues.
S = Matrix.from_rows([[2, 1], [1, 2]])
for value, vector in eigen_sym(S):
    print("eigenvalue", value, "with direction", vector)
