# %% [markdown]
# # Per-row view of the update indices
#
# Each row contributes a gene term g_j (phi_ij - 1/2) and an organism term
# that penalizes rows leaning on few features.  Their averages over the rows
# are exactly the dominance and balance indices driving the update.

# %%
import numpy as np

from evoweights import column_means, delta_bal, delta_dom, dependence, fixed_point, normalize
from evoweights.io import load_office
from evoweights.strategies import gene_strategy, organism_strategy

data, spec = load_office()
phi = normalize(data, spec)
means = column_means(phi)
gamma = fixed_point(means)

gene = gene_strategy(phi, gamma)
org = organism_strategy(phi, gamma)
print("gene average - dominance:", np.abs(gene.mean(axis=0) - delta_dom(gamma, means)).max())
print("organism average - balance:", np.abs(org.mean(axis=0) - delta_bal(gamma, means)).max())

# %% [markdown]
# How much does each listing depend on each feature at equilibrium?  The
# two listings with a balcony lean on it heavily.

# %%
mu = dependence(phi, gamma).mu
for i in np.argsort(-mu[:, 3])[:3]:
    print(np.round(mu[i], 3), data.row_labels[i][:50])
