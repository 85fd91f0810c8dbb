"""Applied microeconomics: cost phases, profit zones, and market surplus.

A firm with cubic costs K(x) = x^3 - 6x^2 + 15x + 4 faces the demand
curve p(x) = 20 - x. Where do costs turn convex, where does profit peak,
and how is the surplus split between consumers and producers?
"""

from ecomath import calculus as ca
from ecomath import econ
from ecomath.econ import CostModel, MarketModel

cost = CostModel(1, -6, 15, 40)
analysis = econ.cost_analysis(cost)
print("cost phases for K = x^3 - 6x^2 + 15x + 40:")
print("  inflection (law of diminishing returns kicks in): x_W =", analysis.x_W)
print("  minimal variable unit cost:                       x_g1 =", analysis.x_g1)
print("  minimum efficient scale (min total unit cost):    x_g2 =",
      round(analysis.x_g2, 4))
print("  elasticity of K at the MES (should be 1):",
      round(ca.elasticity(cost.expr(), analysis.x_g2), 9))
print()

market = MarketModel(ca.parse("20-x"), CostModel(1, -6, 15, 4), 10.0)
profit = econ.profit_analysis(market)
print("profit zone for p = 20 - x:")
print("  break-even threshold x_S =", round(profit.x_S, 4))
print("  profit maximum      x_M =", round(profit.x_M, 4),
      " G_max =", round(profit.G_max, 4))
print("  profit limit        x_G =", round(profit.x_G, 4))

point = econ.cournot(market)
print("Cournot point: (x_M, p_M) =",
      (round(point.x_M, 4), round(point.p_M, 4)))
print("Amoroso-Robinson residual:", point.amoroso_robinson_residual)
print()

strategies = econ.market_strategies(ca.parse("10-x"), ca.parse("x"), 0.0, 10.0)
print("market N(p) = 10 - p, A(p) = p on [0, 10]:")
print("  equilibrium price p_M =", strategies.equilibrium.p_M)
print("  equilibrium turnover U1 =", strategies.U1)
print("  consumer surplus =", strategies.consumer_surplus,
      " producer surplus =", strategies.producer_surplus)
print("  perfect price discrimination U2 =", strategies.U2)
print("  cost-only pricing           U3 =", strategies.U3)
print()

print("psychological value of money, v(x) = a*log10(1+x):")
print("  a gain of 9 feels like:", econ.psych_value(9.0, 1.0))
print("  a loss of 9 feels like:", econ.psych_value(-9.0, 1.0),
      "(losses weigh double)")
