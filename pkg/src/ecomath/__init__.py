"""ecomath: a small quantitative-economics toolkit.

Subpackages and modules:

- ``linalg``    vectors, matrices and the shared matrix text format
- ``linsolve``  Gaussian elimination, determinants, inverses, symmetric eigenproblems
- ``leontief``  stationary input-output analysis
- ``simplex``   the simplex method for standard maximum problems
- ``finmath``   compound interest, annuities, redemption, pensions, depreciation
- ``calculus``  expression trees, differentiation, roots, curve reports, integration
- ``econ``      cost phases, profit/Cournot analysis, market equilibrium and surplus
"""

from . import calculus, econ, finmath, leontief, linalg, linsolve, simplex

__version__ = "0.1.0"

__all__ = [
    "calculus",
    "econ",
    "finmath",
    "leontief",
    "linalg",
    "linsolve",
    "simplex",
    "__version__",
]
