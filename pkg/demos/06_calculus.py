"""Calculus tools: parse, differentiate, analyze, integrate.

Expressions in one variable x are parsed into trees, differentiated
exactly, and analyzed for roots, extrema, asymptotes, and integrals.
"""

from ecomath import calculus as ca

# Parsing and exact differentiation.
f = ca.parse("x^3 - 6*x^2 + 15*x + 40")
print("f(x)  =", ca.to_string(f))
print("f'(x) =", ca.to_string(ca.differentiate(f)))
print("f(2)  =", ca.evaluate(f, 2.0))
print()

# Elasticity: percent response of f to a percent change in x.
print("elasticity of x^3 at any x:", ca.elasticity(ca.parse("x^3"), 1.7))
print("elasticity of exp(2*x) at x=1.5:",
      ca.elasticity(ca.parse("exp(2*x)"), 1.5))
print()

# A full curve report for a rational function.
report = ca.curve_report(ca.parse("(x^2-1)/(x-2)"), -6.0, 6.0)
print("curve report for (x^2-1)/(x-2) on [-6, 6]:")
print("  roots:              ", report.roots)
print("  vertical asymptotes:", report.vertical_asymptotes)
print("  oblique asymptote:  ", report.asymptote)
print("  extrema:            ", report.extrema)
print()

# Antiderivatives where a closed form exists, quadrature otherwise.
F = ca.antiderivative(ca.parse("x^2"))
print("antiderivative of x^2:", ca.to_string(F))
print("integral of x^2 over [0,3]:", ca.integrate(ca.parse("x^2"), 0.0, 3.0))
print("integral of exp(-x^2)-ish (no closed form) via quadrature:",
      round(ca.integrate(ca.parse("1/(1+x^2)"), 0.0, 1.0), 10))

# Improper endpoints are classified, not silently mis-integrated.
print("integral of 1/x^0.5 over [0,1] (integrable singularity):",
      ca.integrate(ca.parse("x^(0-0.5)"), 0.0, 1.0))
try:
    ca.integrate(ca.parse("1/x"), -1.0, 1.0)
except ca.PoleError as exc:
    print("1/x over [-1,1] is rejected:", exc)
