"""Direct summation over Bialynicki-Birula strata.

For ``E = O^r`` on a curve the torus-fixed components of ``Quot_C(E, n)``
are indexed by decompositions ``n = n_1 + ... + n_r`` into nested tuples.
The component for a decomposition is ``prod_alpha Hilb^{n_alpha}(C)``, and
its attracting cell is an affine bundle of rank
``sum_alpha (alpha - 1) * n_{alpha,d}``.  On a curve ``Hilb^{m}(C)`` is the
product of ``Sym^{l_i} C`` over the difference tuple ``l`` of ``m``.

Nothing here touches :mod:`nestedquot.zeta`; the sum is meant to be
compared against the product formula.
"""
from __future__ import annotations

import math
from typing import Iterator, Sequence, Tuple

from .polys import UniversalMotive, grlex_key
from .series import MOTIVES, TruncatedSeries, within
from .zeta import QuotSeriesConfig

Nested = Tuple[int, ...]
Decomposition = Tuple[Nested, ...]


def is_nested(n: Sequence[int]) -> bool:
    return all(x >= 0 for x in n) and all(a <= b for a, b in zip(n, n[1:]))


def to_diffs(n: Sequence[int]) -> Tuple[int, ...]:
    """``(n1, n2 - n1, ..., nd - n_{d-1})``."""
    if not is_nested(n):
        raise ValueError(f"{tuple(n)} is not a non-decreasing tuple of non-negative integers")
    return tuple(b - a for a, b in zip((0,) + tuple(n[:-1]), n))


def from_diffs(l: Sequence[int]) -> Nested:
    if any(x < 0 for x in l):
        raise ValueError(f"difference tuple {tuple(l)} has a negative entry")
    out, acc = [], 0
    for x in l:
        acc += x
        out.append(acc)
    return tuple(out)


def compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``k`` into ``parts`` non-negative summands."""
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


def enumerate_nested(d: int, bound: int) -> Iterator[Nested]:
    """All nested ``d``-tuples with last entry at most ``bound``, graded-lex."""
    if d < 1 or bound < 0:
        raise ValueError("need d >= 1 and bound >= 0")
    found = []
    for total in range(bound + 1):
        for l in compositions(total, d):
            found.append(from_diffs(l))
    return iter(sorted(found, key=grlex_key))


def enumerate_decompositions(n: Sequence[int], r: int) -> Iterator[Decomposition]:
    """All ``r``-tuples of nested tuples summing to ``n``.

    Built from difference tuples: each coordinate of ``to_diffs(n)`` is split
    independently into ``r`` parts, so every part is nested by construction.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    diffs = to_diffs(n)

    def rec(i, acc):
        if i == len(diffs):
            yield tuple(from_diffs(col) for col in zip(*acc)) if acc else ((),) * r
            return
        for comp in compositions(diffs[i], r):
            yield from rec(i + 1, acc + [comp])

    return rec(0, [])


def hilb_class(n: Sequence[int]) -> UniversalMotive:
    """``[Hilb^n(C)] = prod_i s_{l_i}`` with ``l`` the difference tuple."""
    out = UniversalMotive.one()
    for l in to_diffs(n):
        if l:
            out = out * UniversalMotive.s(l)
    return out


def stratum_weight(dec: Decomposition) -> int:
    return sum(alpha * part[-1] for alpha, part in enumerate(dec))


def stratum_class(dec: Decomposition) -> UniversalMotive:
    out = UniversalMotive.L(stratum_weight(dec))
    for part in dec:
        out = out * hilb_class(part)
    return out


def oracle_coefficient(n: Sequence[int], r: int) -> UniversalMotive:
    total = UniversalMotive()
    for dec in enumerate_decompositions(n, r):
        total = total + stratum_class(dec)
    return total


def oracle_series(cfg: QuotSeriesConfig) -> TruncatedSeries:
    """The strata sum, one coefficient per nested tuple inside ``cfg.cap``."""
    terms = {}
    for n in enumerate_nested(cfg.d, cfg.cap[-1]):
        if within(n, cfg.cap):
            terms[n] = oracle_coefficient(n, cfg.r)
    return TruncatedSeries(MOTIVES, cfg.cap, terms)


def euler_count(cfg: QuotSeriesConfig, n: Sequence[int], g: int = 0) -> int:
    """Euler characteristic of ``Quot_{P^1}(O^r, n)`` by pure counting.

    Each fixed component is a product of ``Sym^l P^1 = P^l``, contributing
    ``l + 1``; affine cells contribute 1.
    """
    if g != 0:
        raise ValueError("euler_count only covers genus 0; use a measure for other genera")
    total = 0
    for dec in enumerate_decompositions(n, cfg.r):
        total += math.prod(l + 1 for part in dec for l in to_diffs(part))
    return total
