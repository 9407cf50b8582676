# %% [markdown]
# # The same series as a motivic exponential
#
# Exp_+ turns sums into products.  On a term [C] L^a q^m it gives
# zeta_C(L^a q^m), so the generating series is the exponential of
# [C x P^(r-1)] (q_1...q_d + q_2...q_d + ... + q_d).

# %%
from nestedquot import (BivariatePoly, QuotSeriesConfig, curve_projective_argument,
                        e_sym_power, exp_plus, main_series, power_structure_pow)

r, d = 3, 2
arg = curve_projective_argument(r, d)
for term in arg:
    print(term)

cfg = QuotSeriesConfig(r, d, 3)
print("Exp_+ == product:", exp_plus(arg, cfg.cap) == main_series(cfg))

# %% [markdown]
# On Z[u, v] the power structure (1-q)^(-f) is a product of linear factors.
# For f = E(C) it generates the E-polynomials of the symmetric powers.

# %%
g = 2
u, v = BivariatePoly.monomial(1, 0), BivariatePoly.monomial(0, 1)
series = power_structure_pow(1 - g * u - g * v + u * v, 4)
for (k,), e in series.items():
    print(k, e, e == e_sym_power(k, g))
