"""Generating series of nested Quot schemes on a curve via the product formula.

``Z_{r,d}(q_1..q_d) = prod_{alpha=1..r} prod_{i=1..d} zeta_C(L^(alpha-1) q_i q_{i+1} ... q_d)``

together with the closed forms of its Hodge-Deligne and Euler
specializations, which are expanded directly (never through the universal
ring) so they can serve as independent checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .measures import binomial_series_coefficient
from .polys import BivariatePoly, UniversalMotive
from .series import (BIVARIATE, INTEGERS, MOTIVES, DimensionError, TruncatedSeries,
                     coefficient, monomial, product_of, substitute)


@dataclass(frozen=True)
class QuotSeriesConfig:
    """Rank ``r`` of the bundle, nesting depth ``d`` and per-variable cap."""

    r: int
    d: int
    cap: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1 or self.d < 1:
            raise ValueError(f"need r >= 1 and d >= 1, got r={self.r}, d={self.d}")
        cap = (self.cap,) * self.d if isinstance(self.cap, int) else tuple(self.cap)
        if len(cap) != self.d:
            raise DimensionError(f"cap {cap} does not have length d={self.d}")
        if any(c < 0 for c in cap):
            raise ValueError(f"negative cap {cap}")
        object.__setattr__(self, "cap", cap)


def suffix_exponent(i: int, d: int) -> Tuple[int, ...]:
    """Exponent vector of ``q_i q_{i+1} ... q_d`` (``i`` is 1-based)."""
    if not 1 <= i <= d:
        raise ValueError(f"index {i} outside 1..{d}")
    return (0,) * (i - 1) + (1,) * (d - i + 1)


def kapranov_zeta(cap: int) -> TruncatedSeries:
    """``1 + s1 q + s2 q^2 + ... + s_cap q^cap`` over the universal ring."""
    return TruncatedSeries(MOTIVES, (cap,),
                           {(n,): UniversalMotive.s(n) for n in range(cap + 1)})


def shifted_zeta(alpha: int, i: int, cfg: QuotSeriesConfig) -> TruncatedSeries:
    """``zeta_C(L^(alpha-1) q_i ... q_d)`` truncated to ``cfg.cap``."""
    if not 1 <= alpha <= cfg.r:
        raise ValueError(f"alpha={alpha} outside 1..{cfg.r}")
    target = suffix_exponent(i, cfg.d)
    src_cap = min(cfg.cap[i - 1:])
    return substitute(kapranov_zeta(src_cap), UniversalMotive.L(alpha - 1), target, cfg.cap)


def main_series(cfg: QuotSeriesConfig) -> TruncatedSeries:
    """The full product over ``alpha = 1..r`` (outer) and ``i = 1..d`` (inner)."""
    factors = (shifted_zeta(a, i, cfg) for a in range(1, cfg.r + 1) for i in range(1, cfg.d + 1))
    return product_of(factors, MOTIVES, cfg.cap)


def nested_coefficient(cfg: QuotSeriesConfig, n: Sequence[int],
                       series: TruncatedSeries | None = None) -> UniversalMotive:
    """Universal class of ``Quot_C(E, n)``; pass ``series`` to reuse a computed product."""
    if series is None:
        series = main_series(cfg)
    return coefficient(series, n)


def suffix_restriction(s: TruncatedSeries) -> TruncatedSeries:
    """Univariate series in ``q_d`` from the exponents ``(0, ..., 0, n)``."""
    return TruncatedSeries(s.ring, (s.cap[-1],),
                           {(e[-1],): c for e, c in s.terms.items() if not any(e[:-1])})


def single_depth_product(r: int, cap: int) -> TruncatedSeries:
    """``prod_alpha zeta_C(L^(alpha-1) q)``: the depth-one rank-``r`` series."""
    return main_series(QuotSeriesConfig(r, 1, (cap,)))


def hodge_deligne_closed_form(r: int, d: int, g: int, cap) -> TruncatedSeries:
    """Expansion of the rational product for ``E_{C,r,d}`` with ``C`` of genus ``g``.

    Each ``(alpha, i)`` factor is
    ``(1 - u^a v^(a-1) m)^g (1 - u^(a-1) v^a m)^g / ((1 - (uv)^(a-1) m)(1 - (uv)^a m))``
    with ``m = q_i ... q_d``.
    """
    cfg = QuotSeriesConfig(r, d, cap)
    one = TruncatedSeries.one(BIVARIATE, cfg.cap)

    def lin(i, j, m):
        return one - monomial(BivariatePoly.monomial(i, j), m, cfg.cap, BIVARIATE)

    factors = []
    for a in range(1, r + 1):
        for i in range(1, d + 1):
            m = suffix_exponent(i, d)
            factors.append(lin(a, a - 1, m) ** g)
            factors.append(lin(a - 1, a, m) ** g)
            factors.append(lin(a - 1, a - 1, m) ** -1)
            factors.append(lin(a, a, m) ** -1)
    return product_of(factors, BIVARIATE, cfg.cap)


def euler_closed_form(r: int, d: int, g: int, cap) -> TruncatedSeries:
    """``prod_i (1 - q_i ... q_d)^(-r (2 - 2g))`` over the integers.

    Each factor is written down from binomial coefficients directly.
    """
    cfg = QuotSeriesConfig(r, d, cap)
    m = r * (2 - 2 * g)
    factors = []
    for i in range(1, d + 1):
        e = suffix_exponent(i, d)
        src = TruncatedSeries(INTEGERS, (min(cfg.cap[i - 1:]),),
                              {(k,): binomial_series_coefficient(m, k)
                               for k in range(min(cfg.cap[i - 1:]) + 1)})
        factors.append(substitute(src, 1, e, cfg.cap))
    return product_of(factors, INTEGERS, cfg.cap)
