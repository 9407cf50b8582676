"""Motivic exponential on a restricted class grammar, and the power structure on Z[u, v].

``Exp_+`` is defined on sums of terms ``mult * [Y] * q^mono`` where ``[Y]`` is
either ``L^a`` or ``[C] * L^a``.  On such a term it is the series of
symmetric powers, ``sum_n [Sym^n Y] q^(n * mono)``, raised to ``mult``.  We use

* ``Sym^n(A^a) = L^(a n)``
* ``Sym^n(C x A^a) = s_n * L^(a n)``

and nothing else; arbitrary classes would need a full lambda-ring structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .polys import BivariatePoly, UniversalMotive
from .series import BIVARIATE, MOTIVES, SeriesError, TruncatedSeries, _check_cap, product_of

LEFSCHETZ = "lefschetz_power"
CURVE = "curve_times_lefschetz"


class AugmentationError(SeriesError):
    """Raised for a term with zero q-exponent: Exp_+ needs the augmentation ideal."""


@dataclass(frozen=True)
class ExpTerm:
    class_kind: str
    a: int
    mult: int
    mono: Tuple[int, ...]

    def __post_init__(self):
        if self.class_kind not in (LEFSCHETZ, CURVE):
            raise ValueError(f"unsupported class kind {self.class_kind!r}")
        if self.a < 0:
            raise ValueError("L-exponent must be non-negative")
        object.__setattr__(self, "mono", tuple(self.mono))
        if any(x < 0 for x in self.mono):
            raise ValueError(f"negative exponent in {self.mono}")
        if not any(self.mono):
            raise AugmentationError(f"term {self} has no positive q-exponent")


def sigma_n(term: ExpTerm, n: int) -> Tuple[UniversalMotive, Tuple[int, ...]]:
    """The ``n``-th symmetric power of a single term, as ``(class, exponent)``."""
    if term.mult != 1:
        raise ValueError("sigma_n is only defined here for multiplicity-one terms")
    if n < 0:
        raise ValueError("n must be non-negative")
    cls = UniversalMotive.L(term.a * n)
    if term.class_kind == CURVE:
        cls = cls * UniversalMotive.s(n)
    return cls, tuple(n * x for x in term.mono)


def _symmetric_series(term: ExpTerm, cap) -> TruncatedSeries:
    top = min(c // x for c, x in zip(cap, term.mono) if x > 0)
    unit = ExpTerm(term.class_kind, term.a, 1, term.mono)
    return TruncatedSeries(MOTIVES, cap, dict(sigma_n(unit, n)[::-1] for n in range(top + 1)))


def exp_plus(arg: Iterable[ExpTerm], cap: Sequence[int]) -> TruncatedSeries:
    """``Exp_+`` of a formal sum of terms, truncated to ``cap``.

    Additivity is built in: the result is the product over terms, with
    negative multiplicities handled by series inversion.
    """
    cap = _check_cap(cap)
    factors = []
    for term in arg:
        if len(term.mono) != len(cap):
            raise SeriesError(f"term {term} does not match cap {cap}")
        factors.append(_symmetric_series(term, cap) ** term.mult)
    return product_of(factors, MOTIVES, cap)


def curve_projective_argument(r: int, d: int) -> List[ExpTerm]:
    """``[C] * (1 + L + ... + L^(r-1)) * sum_i q_i ... q_d`` as a list of terms."""
    terms = []
    for alpha in range(1, r + 1):
        for i in range(1, d + 1):
            mono = (0,) * (i - 1) + (1,) * (d - i + 1)
            terms.append(ExpTerm(CURVE, alpha - 1, 1, mono))
    return terms


def power_structure_pow(f: BivariatePoly, cap: int) -> TruncatedSeries:
    """``(1 - q)^(-f)`` in Z[u, v][[q]], i.e. ``prod (1 - u^i v^j q)^(-p_ij)``."""
    one = TruncatedSeries.one(BIVARIATE, (cap,))
    factors = []
    for (i, j), p in f.items():
        lin = one - TruncatedSeries(BIVARIATE, (cap,), {(1,): BivariatePoly.monomial(i, j)})
        factors.append(lin ** (-p))
    return product_of(factors, BIVARIATE, (cap,))
