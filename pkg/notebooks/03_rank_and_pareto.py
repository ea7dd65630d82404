# %% [markdown]
# # Ranking rows and checking Pareto optimality
#
# Any strictly positive weight vector turns the multi-objective problem into
# a single score; the best-scoring row is then never dominated.

# %%
import numpy as np

from evoweights import WeightVector, certify_scalarization, column_means, fixed_point, normalize, pareto_front, rank
from evoweights.io import load_office

data, spec = load_office()
phi = normalize(data, spec)
star = fixed_point(column_means(phi))

for name, gamma in (("uniform", WeightVector.uniform(4)), ("learned", star)):
    report = rank(phi, gamma)
    print(f"-- {name} weights")
    for pos, i in enumerate(report.order[:5], start=1):
        print(f"{pos}. {report.scores[i]:.6f}  {data.values[i]}  pareto={report.pareto_flags[i]}")

# %%
front = sorted(pareto_front(phi))
print("non-dominated rows:", front)
print("certificate (max):", certify_scalarization(phi, star))

# %% [markdown]
# Minimizing every normalized column flips the dominance direction; the
# lowest score is then the certified row.

# %%
low = rank(phi, star, maximize=False)
print("lowest score row:", low.order[0], np.round(low.scores[low.order[0]], 6))
print("certificate (min):", certify_scalarization(phi, star, maximize=False))
