# %% [markdown]
# # A two-row, two-feature family
#
# Rows (1, 0) and (0.5 + xi, 0.5 - xi).  As xi grows the first feature's
# mean rises and its equilibrium weight falls linearly, 0.375 - xi / 4.

# %%
import numpy as np

from evoweights import NormalizedMatrix, WeightVector, column_means, fixed_point, iterate

for xi in np.linspace(0.0, 0.5, 6):
    phi = NormalizedMatrix([[1.0, 0.0], [0.5 + xi, 0.5 - xi]])
    means = column_means(phi)
    star = fixed_point(means).weights
    limit = iterate(WeightVector.uniform(2), means).final.weights
    print(f"xi={xi:.1f}  closed form {np.round(star, 3)}  iterated {np.round(limit, 6)}")

# %% [markdown]
# At xi = 0.5 both columns are constant (all ones and all zeros), yet the
# weights stay unequal: the rule only looks at column means.
