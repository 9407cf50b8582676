"""Truncated multivariate formal power series over an exact coefficient ring.

A series in ``q_1, ..., q_d`` keeps only exponent vectors ``e`` with
``e_i <= cap_i`` for every ``i``.  Dropping the rest is a quotient by a
monomial ideal, so every ring operation below is exact modulo that ideal.

Exponent vectors and caps are plain tuples of ints.  Coefficients are any
values supporting ``+``, ``-``, ``*`` and ``==``; the :class:`Ring` attached
to a series supplies zero, one, and a parser for serialized output.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, Sequence, Tuple

from .polys import BivariatePoly, UniPoly, UniversalMotive, grlex_key

Exps = Tuple[int, ...]


class SeriesError(ValueError):
    pass


class DimensionError(SeriesError):
    pass


class OutOfCapError(SeriesError):
    pass


class InvertibilityError(SeriesError):
    pass


class SubstitutionError(SeriesError):
    pass


@dataclass(frozen=True)
class Ring:
    """An exact commutative coefficient ring.

    Units are detected as elements squaring to one, which covers every ring
    used here (their only units are +1 and -1).
    """

    name: str
    zero: Any
    one: Any
    parse: Callable[[str], Any]

    def is_unit(self, c) -> bool:
        return c * c == self.one

    def unit_inverse(self, c):
        if not self.is_unit(c):
            raise InvertibilityError(f"{c} is not a unit of {self.name}")
        return c


INTEGERS = Ring("ZZ", 0, 1, int)
MOTIVES = Ring("ZZ[L,s1,s2,...]", UniversalMotive(), UniversalMotive.one(), UniversalMotive.parse)
BIVARIATE = Ring("ZZ[u,v]", BivariatePoly(), BivariatePoly.one(), BivariatePoly.parse)
UNIVARIATE = Ring("ZZ[t]", UniPoly(), UniPoly.one(), UniPoly.parse)


def _check_cap(cap) -> Exps:
    cap = tuple(int(c) for c in cap)
    if len(cap) < 1:
        raise DimensionError("series need at least one variable")
    if any(c < 0 for c in cap):
        raise DimensionError(f"negative cap {cap}")
    return cap


def within(e: Exps, cap: Exps) -> bool:
    return all(x <= c for x, c in zip(e, cap))


def cap_box(cap: Exps) -> Iterator[Exps]:
    """Every exponent vector under ``cap``, in graded-lex order."""
    return iter(sorted(itertools.product(*(range(c + 1) for c in cap)), key=grlex_key))


class TruncatedSeries:
    """Immutable sparse truncated power series.

    ``terms`` maps exponent tuples to nonzero coefficients.  Out-of-cap and
    zero entries passed to the constructor are dropped.
    """

    __slots__ = ("ring", "cap", "_terms")

    def __init__(self, ring: Ring, cap: Sequence[int], terms: Dict[Exps, Any] | None = None):
        self.ring = ring
        self.cap = _check_cap(cap)
        d = len(self.cap)
        clean: Dict[Exps, Any] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != d:
                raise DimensionError(f"exponent {e} has wrong length for cap {self.cap}")
            if any(x < 0 for x in e):
                raise DimensionError(f"negative exponent {e}")
            if within(e, self.cap) and c != ring.zero:
                clean[e] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring, cap, terms):
        obj = cls.__new__(cls)
        obj.ring, obj.cap, obj._terms = ring, cap, terms
        return obj

    @classmethod
    def one(cls, ring: Ring, cap) -> "TruncatedSeries":
        cap = _check_cap(cap)
        return cls._raw(ring, cap, {(0,) * len(cap): ring.one})

    @classmethod
    def zero(cls, ring: Ring, cap) -> "TruncatedSeries":
        return cls(ring, cap)

    @property
    def dim(self) -> int:
        return len(self.cap)

    @property
    def terms(self) -> Dict[Exps, Any]:
        return dict(self._terms)

    def items(self):
        """Nonzero terms in graded-lex order of exponents."""
        return sorted(self._terms.items(), key=lambda ec: grlex_key(ec[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self._terms == other._terms

    def __repr__(self):
        body = " + ".join(f"({c})*q^{e}" for e, c in self.items()) or "0"
        return f"TruncatedSeries[{self.ring.name}, cap={self.cap}]({body})"

    def _same_shape(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if self.cap != other.cap:
            raise DimensionError(f"cap mismatch: {self.cap} vs {other.cap}")

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return TruncatedSeries._raw(self.ring, self.cap, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** (-n)
        result = TruncatedSeries.one(self.ring, self.cap)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result

    def scale(self, c) -> "TruncatedSeries":
        zero = self.ring.zero
        out = {}
        for e, a in self._terms.items():
            p = a * c
            if p != zero:
                out[e] = p
        return TruncatedSeries._raw(self.ring, self.cap, out)

    def restrict(self, cap: Sequence[int]) -> "TruncatedSeries":
        """Re-truncate to a smaller cap of the same length."""
        cap = _check_cap(cap)
        if len(cap) != self.dim:
            raise DimensionError(f"cannot restrict cap {self.cap} to {cap}")
        if not within(cap, self.cap):
            raise OutOfCapError(f"{cap} exceeds the known cap {self.cap}")
        return TruncatedSeries._raw(self.ring, cap,
                                    {e: c for e, c in self._terms.items() if within(e, cap)})

    def map_coefficients(self, f: Callable[[Any], Any], ring: Ring) -> "TruncatedSeries":
        """Apply ``f`` to every coefficient, landing in ``ring``."""
        return TruncatedSeries(ring, self.cap, {e: f(c) for e, c in self._terms.items()})

    def coefficient(self, e: Sequence[int]):
        return coefficient(self, e)


def monomial(coeff, e: Sequence[int], cap: Sequence[int], ring: Ring = MOTIVES) -> TruncatedSeries:
    """``coeff * q^e``, or the zero series if ``e`` lies outside ``cap``."""
    cap = _check_cap(cap)
    e = tuple(e)
    if len(e) != len(cap):
        raise DimensionError(f"exponent {e} does not match cap {cap}")
    return TruncatedSeries(ring, cap, {e: coeff})


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._same_shape(b)
    zero = a.ring.zero
    out = dict(a._terms)
    for e, c in b._terms.items():
        if e in out:
            s = out[e] + c
            if s != zero:
                out[e] = s
            else:
                del out[e]
        else:
            out[e] = c
    return TruncatedSeries._raw(a.ring, a.cap, out)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, discarding exponents beyond the cap."""
    a._same_shape(b)
    cap = a.cap
    zero = a.ring.zero
    out: Dict[Exps, Any] = {}
    bt = list(b._terms.items())
    for ea, ca in a._terms.items():
        for eb, cb in bt:
            e = tuple(x + y for x, y in zip(ea, eb))
            if not within(e, cap):
                continue
            p = ca * cb
            if e in out:
                out[e] = out[e] + p
            else:
                out[e] = p
    return TruncatedSeries._raw(a.ring, cap, {e: c for e, c in out.items() if c != zero})


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse, solved degree by degree over the cap box."""
    origin = (0,) * a.dim
    c0 = a._terms.get(origin, a.ring.zero)
    if c0 == a.ring.zero or not a.ring.is_unit(c0):
        raise InvertibilityError(f"constant term {c0} is not a unit")
    inv0 = a.ring.unit_inverse(c0)
    zero = a.ring.zero
    rest = [(e, c) for e, c in a._terms.items() if e != origin]
    out: Dict[Exps, Any] = {}
    for e in cap_box(a.cap):
        if e == origin:
            out[e] = inv0
            continue
        acc = None
        for f, c in rest:
            g = tuple(x - y for x, y in zip(e, f))
            if min(g) < 0:
                continue
            bg = out.get(g)
            if bg is None:
                continue
            acc = c * bg if acc is None else acc + c * bg
        if acc is not None:
            val = -(acc * inv0)
            if val != zero:
                out[e] = val
    return TruncatedSeries._raw(a.ring, a.cap, out)


def substitute(src: TruncatedSeries, coeff_scale, target_exp: Sequence[int],
               cap: Sequence[int]) -> TruncatedSeries:
    """Substitute ``q -> coeff_scale * q^target_exp`` into a univariate series.

    The terms of ``src`` are taken as given; callers that need the full
    target cap must supply a source truncated at a high enough degree.
    """
    if src.dim != 1:
        raise DimensionError("substitution source must be univariate")
    cap = _check_cap(cap)
    target = tuple(int(x) for x in target_exp)
    if len(target) != len(cap):
        raise DimensionError(f"target exponent {target} does not match cap {cap}")
    if not any(target):
        raise SubstitutionError("cannot substitute a constant into a power series")
    ring = src.ring
    out = {}
    for (k,), c in src._terms.items():
        e = tuple(k * t for t in target)
        if within(e, cap):
            val = c * coeff_scale ** k if k else c
            if val != ring.zero:
                out[e] = val
    return TruncatedSeries._raw(ring, cap, out)


def product_of(factors: Iterable[TruncatedSeries], ring: Ring | None = None,
               cap: Sequence[int] | None = None) -> TruncatedSeries:
    """Left fold of :func:`mul`.  An empty product needs ``ring`` and ``cap``."""
    result = None
    for f in factors:
        result = f if result is None else mul(result, f)
    if result is None:
        if ring is None or cap is None:
            raise DimensionError("empty product needs an explicit ring and cap")
        return TruncatedSeries.one(ring, cap)
    return result


def coefficient(a: TruncatedSeries, e: Sequence[int]):
    e = tuple(e)
    if len(e) != a.dim:
        raise DimensionError(f"exponent {e} does not match cap {a.cap}")
    if not within(e, a.cap):
        raise OutOfCapError(f"exponent {e} lies beyond cap {a.cap}; coefficient unknown")
    return a._terms.get(e, a.ring.zero)
