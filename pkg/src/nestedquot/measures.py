"""Motivic measures on the universal ring Z[L, s1, s2, ...].

A measure is a ring homomorphism fixed by the images of ``L`` and of every
``s_n = [Sym^n C]`` for a smooth projective curve ``C`` of genus ``g``:

============== ===================== ===================================
kind           L                     s_n
============== ===================== ===================================
universal      L                     s_n
hodge_deligne  u*v                   E(Sym^n C; u, v)
signed_poincare t^2                  E(Sym^n C; t, t)
euler          1                     coefficient of q^n in (1-q)^(2g-2)
============== ===================== ===================================
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .polys import BivariatePoly, UniPoly, UniversalMotive
from .series import BIVARIATE, INTEGERS, MOTIVES, UNIVARIATE, Ring, TruncatedSeries

KINDS = ("universal", "hodge_deligne", "signed_poincare", "euler")


@dataclass(frozen=True)
class MeasureSpec:
    kind: str = "universal"
    genus: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown measure {self.kind!r}; expected one of {KINDS}")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")

    @property
    def ring(self) -> Ring:
        return {"universal": MOTIVES, "hodge_deligne": BIVARIATE,
                "signed_poincare": UNIVARIATE, "euler": INTEGERS}[self.kind]


def binomial_series_coefficient(m: int, n: int) -> int:
    """Coefficient of ``q^n`` in ``(1 - q)^(-m)`` for any integer ``m``."""
    if n < 0:
        return 0
    if m > 0:
        return math.comb(m + n - 1, n)
    return (-1) ** n * math.comb(-m, n)


@lru_cache(maxsize=None)
def e_sym_power(n: int, g: int) -> BivariatePoly:
    """Hodge-Deligne polynomial of ``Sym^n C`` for a genus ``g`` curve.

    This is the ``q^n`` coefficient of
    ``(1-uq)^g (1-vq)^g / ((1-q)(1-uvq))``: the numerator is expanded with
    binomials and the denominator as ``sum_k (1 + uv + ... + (uv)^k) q^k``.

    >>> print(e_sym_power(1, 1))
    1 - u - v + u*v
    """
    if n < 0 or g < 0:
        raise ValueError("n and g must be non-negative")
    terms = {}
    for a in range(min(g, n) + 1):
        for b in range(min(g, n - a) + 1):
            num = math.comb(g, a) * math.comb(g, b) * (-1) ** (a + b)
            # times (uv)^j for 0 <= j <= n - a - b
            for j in range(n - a - b + 1):
                key = (a + j, b + j)
                terms[key] = terms.get(key, 0) + num
    return BivariatePoly(terms)


def euler_sym_power(n: int, g: int) -> int:
    """Topological Euler characteristic of ``Sym^n C``, genus ``g``."""
    return binomial_series_coefficient(2 - 2 * g, n)


_UV = BivariatePoly.monomial(1, 1)
_T2 = UniPoly({2: 1})


def apply_measure(m: UniversalMotive, spec: MeasureSpec):
    """Image of ``m`` under the measure described by ``spec``.

    The signed Poincare and Euler images are computed from their own
    generator images, not by specializing the Hodge-Deligne image, so the
    factorization through ``E(u, v)`` is something the tests can check.
    """
    g = spec.genus
    if spec.kind == "universal":
        return m
    if spec.kind == "hodge_deligne":
        return BivariatePoly() + m.evaluate(_UV, lambda n: e_sym_power(n, g))
    if spec.kind == "signed_poincare":
        return UniPoly() + m.evaluate(_T2, lambda n: e_sym_power(n, g).diagonal())
    return int(m.evaluate(1, lambda n: euler_sym_power(n, g)))


def lift_measure_to_series(s: TruncatedSeries, spec: MeasureSpec) -> TruncatedSeries:
    """Apply a measure coefficientwise; the cap is unchanged."""
    cache = {}

    def f(c):
        if c not in cache:
            cache[c] = apply_measure(c, spec)
        return cache[c]

    return s.map_coefficients(f, spec.ring)
