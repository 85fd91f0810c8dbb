"""Vectors and matrices: the arithmetic behind multi-good economies.

A firm sells two goods. Prices and quantities live in vectors; revenue is
their dot product. Technology — how outputs depend on inputs — lives in a
matrix, and composing two production stages is a matrix product.
"""

from ecomath.linalg import (Matrix, Vector, dot, format_matrix_text,
                            linear_combination, mat_mul, mat_vec, norm)

prices = Vector((3.0, 5.0))
quantities = Vector((10.0, 4.0))
print("prices     =", prices)
print("quantities =", quantities)
print("revenue    =", dot(prices, quantities))
print()

# Stage 1 turns raw materials into parts, stage 2 turns parts into products.
stage1 = Matrix.from_rows([[2, 1], [1, 3]])
stage2 = Matrix.from_rows([[1, 0], [2, 1]])
combined = mat_mul(stage2, stage1)
print("stage 1:\n" + format_matrix_text(stage1))
print("stage 2:\n" + format_matrix_text(stage2))
print("combined technology:\n" + format_matrix_text(combined))

# Raw-material demand for one unit of each final product:
demand = mat_vec(combined, Vector((1.0, 1.0)))
print("raw materials for one of each product:", demand)
print()

# Norms and distances quantify how different two production plans are.
plan_a = Vector((10.0, 4.0))
plan_b = Vector((8.0, 7.0))
gap = linear_combination([1.0, -1.0], [plan_a, plan_b])
print("|plan_a - plan_b| =", norm(gap))
print("transpose check: (AB)^T == B^T A^T ->",
      mat_mul(stage2, stage1).T == mat_mul(stage1.T, stage2.T))
