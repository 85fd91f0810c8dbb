"""Production planning with the simplex method.

A workshop makes two products with profit 3 and 2 per unit. Materials
limit total output to 4 units; machine time limits product one to 2
units. Which mix maximizes profit?

    max 3 x1 + 2 x2
    s.t. x1 + x2 <= 4
         x1      <= 2
         x1, x2 >= 0
"""

from ecomath.simplex import LinearProgram, solve_simplex, vertex_oracle

lp = LinearProgram("max", c=(3, 2), A=((1, 1), (1, 0)), b=(4, 2))

trace = []
out = solve_simplex(lp, trace=trace)
print("status:", out.status)
print("optimal plan x =", out.x)
print("maximum profit z =", out.z)
print("unused capacity (slacks):", out.slacks)
print()

# The path the tableau took, vertex by vertex:
for i, t in enumerate(trace):
    basis = ", ".join(t.variable_name(j) for j in t.basis)
    print(f"iteration {i}: basis = {basis}")
print(trace[-1].format_text())
print()

# Cross-check with brute force: enumerate the feasible polygon's corners.
oracle = vertex_oracle(lp)
print("feasible vertices:", sorted(oracle.vertices))
print("oracle optimum:   ", oracle.solution.x, "z =", oracle.solution.z)

# An unbounded problem: profit grows forever along a recession direction.
unbounded = LinearProgram("max", c=(1, 1), A=((1, -1),), b=(1,))
print("unbounded example ->", solve_simplex(unbounded).status)
