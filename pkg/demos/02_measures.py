# %% [markdown]
# # Hodge-Deligne, Poincare and Euler specializations
#
# A motivic measure sends L to uv and [Sym^k C] to the E-polynomial of the
# symmetric power of a genus g curve.

# %%
from nestedquot import (MeasureSpec, QuotSeriesConfig, e_sym_power, euler_closed_form,
                        hodge_deligne_closed_form, lift_measure_to_series, main_series)

for k in range(4):
    print(f"E(Sym^{k} C), g=2:", e_sym_power(k, 2))

# %%
cfg = QuotSeriesConfig(r=2, d=2, cap=2)
Z = main_series(cfg)
for g in (0, 1):
    hd = lift_measure_to_series(Z, MeasureSpec("hodge_deligne", g))
    print(f"genus {g}, closed form agrees:", hd == hodge_deligne_closed_form(2, 2, g, cfg.cap))
    for n, e in hd.items():
        print("  ", n, e)

# %% [markdown]
# Setting u = v = t gives signed Poincare polynomials; u = v = 1 gives Euler
# characteristics, which only depend on r and e(C) = 2 - 2g.

# %%
print(lift_measure_to_series(Z, MeasureSpec("signed_poincare", 0)).coefficient((1, 2)))
eu = lift_measure_to_series(Z, MeasureSpec("euler", 0))
print("Euler numbers, P^1:", dict(eu.items()))
print("closed form agrees:", eu == euler_closed_form(2, 2, 0, cfg.cap))
