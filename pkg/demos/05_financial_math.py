"""Financial mathematics: one growth law, many products.

Compound interest, installment savings, loan redemption, pensions, and
depreciation are all instances of K_n = K0 q^n + R (q^n - 1)/(q - 1).
"""

from ecomath import finmath

# 100 at 5% for two years.
print("compound:  K_2 =", finmath.compound_solve(K0=100, q=1.05, n=2))
# Which rate doubles capital in 10 years? Solve for the missing quantity.
print("required q for doubling in 10y:",
      round(finmath.compound_solve(K0=100, Kn=200, n=10), 6))

# Saving 100 at the start of each year, 5%:
print("savings:   K_2 =", finmath.installment_solve(E=100, q=1.05, n=2))
print()

# A 100000 loan at 5%, repaid with 5% of the principal each year plus
# interest. The annuity and the payoff horizon:
plan = finmath.redemption_plan(100000, 5, t=5)
print("redemption annuity A =", plan.meta["A"])
print("duration (exact)     =", round(plan.meta["duration_exact"], 4), "years")
print("first rows of the schedule:")
print("\n".join(plan.to_csv().splitlines()[:4]))
print()

# A pension: 100000 at 5%, withdrawing 500 at the start of each month.
pension = finmath.pension_plan(100000, 5, 12, 500, horizon=3)
print("pension schedule (monthly withdrawals of 500):")
print(pension.to_csv())
print("largest everlasting monthly payment:",
      round(finmath.everlasting_pension(100000, 1.05, 12), 2))
print()

# Declining-balance depreciation is the same law with q < 1 and R = 0.
residual, schedule = finmath.depreciation_declining(10000, p=20, n=3)
print("book value after 3 years at 20% declining balance:", residual)
print("master formula agrees:",
      finmath.master_formula(10000, 0.8, 0.0, 3) == residual)
