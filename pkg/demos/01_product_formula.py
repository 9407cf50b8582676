# %% [markdown]
# # Motives of nested Quot schemes on a curve
#
# The class of Quot_C(O^r, n) for a nested tuple n = (n_1 <= ... <= n_d)
# lives in the free ring Z[L, s1, s2, ...] where s_k stands for [Sym^k C].
# We compute the whole generating series two ways and compare.

# %%
from nestedquot import (QuotSeriesConfig, enumerate_decompositions, main_series,
                        nested_coefficient, oracle_series, stratum_class)

cfg = QuotSeriesConfig(r=2, d=2, cap=3)
Z = main_series(cfg)

for n, c in Z.items():
    print(n, c)

# %% [markdown]
# Every nonzero coefficient sits at a non-decreasing exponent vector.
# Rank 2, depth 1, n = 2: three torus-fixed components, each with its own
# affine-bundle weight.

# %%
for dec in enumerate_decompositions((2,), 2):
    print(dec, "->", stratum_class(dec))
print("sum:", nested_coefficient(QuotSeriesConfig(2, 1, 2), (2,)))

# %% [markdown]
# Summing over all strata reproduces the product of shifted zeta functions.

# %%
print("strata sum == product:", oracle_series(cfg) == Z)
