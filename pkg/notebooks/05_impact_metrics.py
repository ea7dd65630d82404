# %% [markdown]
# # How far the learned weights move away from uniform

# %%
import numpy as np

from evoweights import column_means, feature_impact, fixed_point, impact_norm, normalize, qualified_impact_norm, top_cohort
from evoweights.io import load_office

data, spec = load_office()
phi = normalize(data, spec)
means = column_means(phi)
star = fixed_point(means)

print(f"impact norm:           {impact_norm(means, star):.4f}")
print(f"qualified impact norm: {qualified_impact_norm(phi, star):.4f}")
for i in top_cohort(phi):
    print("  top row:", data.row_labels[i])

# %% [markdown]
# Feature impact multiplies each weight by the column's spread; a binary
# column spans the full unit interval and keeps its whole weight.

# %%
print(dict(zip(data.column_names, np.round(feature_impact(phi, star), 5))))
