"""Exact generating series for motives of nested Quot schemes of points on a curve."""
from .exponential import ExpTerm, curve_projective_argument, exp_plus, power_structure_pow, sigma_n
from .measures import MeasureSpec, apply_measure, e_sym_power, lift_measure_to_series
from .polys import BivariatePoly, UniPoly, UniversalMotive
from .series import (BIVARIATE, INTEGERS, MOTIVES, UNIVARIATE, Ring, TruncatedSeries, add,
                     coefficient, invert, monomial, mul, product_of, substitute)
from .strata import (enumerate_decompositions, enumerate_nested, euler_count, from_diffs,
                     hilb_class, oracle_series, stratum_class, to_diffs)
from .zeta import (QuotSeriesConfig, euler_closed_form, hodge_deligne_closed_form,
                   kapranov_zeta, main_series, nested_coefficient, shifted_zeta)

__version__ = "0.1.0"
