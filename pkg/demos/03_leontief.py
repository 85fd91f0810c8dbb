"""Input-output analysis: who delivers what to whom.

Two agents (say, a farm and a power plant) deliver goods to each other and
to final consumers. From one observed year of deliveries we estimate the
technology matrix, then forecast the production needed for any future
demand.
"""

from ecomath.leontief import (DeliveriesTable, LeontiefModel, final_demand,
                              forecast, model_from_table, total_output)
from ecomath.linalg import Matrix, Vector, format_matrix_text

# Observed deliveries: n[i][j] = what agent j received from agent i.
deliveries = Matrix.from_rows([[0, 2], [1, 0]])
consumption = Vector((2.0, 1.0))  # final (outside) demand

model, q, y = model_from_table(DeliveriesTable(deliveries, consumption))
print("total output q =", q)
print("input coefficients P:\n" + format_matrix_text(model.P))
print("technology matrix I - P:\n" + format_matrix_text(model.technology_matrix()))
print()

# Forward question: given production q, what is left for consumers?
y_check, _ = final_demand(model, q)
print("final demand recovered from q:", y_check)

# Backward question: to consume y' = (3, 2), how much must be produced?
target = Vector((3.0, 2.0))
q_needed, _ = total_output(model, target)
print("output needed for demand", target, "->", q_needed)
print()

# A full forecast, including primary-resource requirements when each unit
# of output consumes labor at the given rates.
labored = LeontiefModel(model.P, R=Matrix.from_rows([[0.5, 2.0]]))
q_plan, labor = forecast(labored, target)
print("forecast output:", q_plan, " labor requirement:", labor)
