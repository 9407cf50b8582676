"""Sparse polynomials with unbounded integer coefficients.

Three concrete rings live here:

* :class:`UniversalMotive` -- the free commutative ring Z[L, s1, s2, ...],
  where ``L`` is the Lefschetz class and ``s_n`` stands for ``[Sym^n C]``.
* :class:`BivariatePoly` -- Z[u, v], target of the Hodge-Deligne measure.
* :class:`UniPoly` -- Z[t], target of the signed Poincare measure.

All of them share :class:`SparsePoly`, which stores a ``{monomial_key: int}``
dict in canonical form (no zero coefficients).  Values are immutable.
"""
from __future__ import annotations

import re
from typing import Dict, Hashable, Iterable, Iterator, Tuple


def grlex_key(exps: Tuple[int, ...]) -> tuple:
    """Sort key: ascending total degree, then lexicographically descending."""
    return (sum(exps), tuple(-e for e in exps))


class SparsePoly:
    """Base class for sparse integer polynomials.

    Subclasses define how monomial keys multiply (``_mul_keys``), what the
    unit monomial is (``_one_key``), and how a key is printed.
    """

    __slots__ = ("_terms", "_hash")
    _one_key: Hashable = ()

    def __init__(self, terms: Dict[Hashable, int] | Iterable | None = None):
        clean: Dict[Hashable, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = int(c)
                if c:
                    clean[k] = clean.get(k, 0) + c
                    if not clean[k]:
                        del clean[k]
        self._terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def constant(cls, c: int):
        return cls({cls._one_key: c})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return NotImplemented

    # -- monomial arithmetic, overridden --------------------------------
    @staticmethod
    def _mul_keys(a, b):
        raise NotImplementedError

    @staticmethod
    def _exps(key) -> Tuple[int, ...]:
        raise NotImplementedError

    @staticmethod
    def _render_key(key) -> str:
        raise NotImplementedError

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)()
            return self._from_clean({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Hashable, int] = {}
        mk = self._mul_keys
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = mk(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._from_clean({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- comparisons -----------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> Dict[Hashable, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Hashable, int]]:
        """Terms in deterministic graded-lex order."""
        return iter(sorted(self._terms.items(), key=lambda kc: grlex_key(self._exps(kc[0]))))

    def coefficients(self) -> list:
        return [c for _, c in self.items()]

    def is_constant(self) -> bool:
        return all(k == self._one_key for k in self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for key, c in self.items():
            mono = self._render_key(key)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    # -- parsing ---------------------------------------------------------
    _factor_re = re.compile(r"^([A-Za-z]+\d*)(?:\^(\d+))?$")

    @classmethod
    def _key_from_factors(cls, factors):
        raise NotImplementedError

    @classmethod
    def parse(cls, text: str):
        """Inverse of ``str``: reads sums of ``c*x^a*y^b`` monomials."""
        text = text.strip()
        if text == "0":
            return cls()
        tokens = text.replace(" - ", " + -").split(" + ")
        out = cls()
        for tok in tokens:
            tok = tok.strip()
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            coeff = 1
            factors = []
            for part in tok.split("*"):
                if part.isdigit():
                    coeff *= int(part)
                    continue
                m = cls._factor_re.match(part)
                if not m:
                    raise ValueError(f"cannot parse factor {part!r} in {text!r}")
                factors.append((m.group(1), int(m.group(2) or 1)))
            out = out + cls({cls._key_from_factors(factors): sign * coeff})
        return out


class UniversalMotive(SparsePoly):
    """Element of the free ring Z[L, s1, s2, ...].

    A monomial key is ``(a, ((n1, m1), (n2, m2), ...))`` meaning
    ``L^a * s_{n1}^{m1} * s_{n2}^{m2} ...`` with ``n1 < n2 < ...``.
    No relation among the generators is imposed, so ``s1*s1`` stays ``s1^2``.

    >>> print(UniversalMotive.s(1) * (1 + UniversalMotive.L()))
    s1 + L*s1
    """

    __slots__ = ()
    _one_key = (0, ())

    @classmethod
    def L(cls, power: int = 1) -> "UniversalMotive":
        return cls({(power, ()): 1})

    @classmethod
    def s(cls, n: int, power: int = 1) -> "UniversalMotive":
        if n < 0:
            raise ValueError("symmetric power index must be non-negative")
        if n == 0 or power == 0:
            return cls.one()
        return cls({(0, ((n, power),)): 1})

    @staticmethod
    def _mul_keys(a, b):
        if not a[1]:
            return (a[0] + b[0], b[1])
        if not b[1]:
            return (a[0] + b[0], a[1])
        merged = dict(a[1])
        for n, m in b[1]:
            merged[n] = merged.get(n, 0) + m
        return (a[0] + b[0], tuple(sorted(merged.items())))

    @staticmethod
    def _exps(key):
        a, sm = key
        top = sm[-1][0] if sm else 0
        vec = [0] * (top + 1)
        vec[0] = a
        for n, m in sm:
            vec[n] = m
        return tuple(vec)

    @staticmethod
    def _render_key(key):
        a, sm = key
        parts = []
        if a:
            parts.append("L" if a == 1 else f"L^{a}")
        for n, m in sm:
            parts.append(f"s{n}" if m == 1 else f"s{n}^{m}")
        return "*".join(parts)

    @classmethod
    def _key_from_factors(cls, factors):
        key = cls._one_key
        for name, p in factors:
            if name == "L":
                k = (p, ())
            elif name.startswith("s") and name[1:].isdigit():
                k = (0, ((int(name[1:]), p),)) if int(name[1:]) else cls._one_key
            else:
                raise ValueError(f"unknown generator {name!r}")
            key = cls._mul_keys(key, k)
        return key

    def l_degree(self) -> int:
        """Largest power of L appearing; -1 for the zero element."""
        return max((k[0] for k in self._terms), default=-1)

    def evaluate(self, L, s):
        """Image under the ring map ``L -> L``, ``s_n -> s(n)``.

        ``L`` may be any ring element and ``s`` any callable returning ring
        elements; integers act through ``int * element``.
        """
        total = None
        for (a, sm), c in self.items():
            term = L ** a if a else None
            for n, m in sm:
                f = s(n) ** m
                term = f if term is None else term * f
            term = c if term is None else term * c
            total = term if total is None else total + term
        return 0 if total is None else total


class BivariatePoly(SparsePoly):
    """Element of Z[u, v]; keys are ``(i, j)`` for ``u^i v^j``."""

    __slots__ = ()
    _one_key = (0, 0)

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivariatePoly":
        return cls({(i, j): c})

    @staticmethod
    def _mul_keys(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _exps(key):
        return key

    @staticmethod
    def _render_key(key):
        i, j = key
        parts = []
        if i:
            parts.append("u" if i == 1 else f"u^{i}")
        if j:
            parts.append("v" if j == 1 else f"v^{j}")
        return "*".join(parts)

    @classmethod
    def _key_from_factors(cls, factors):
        i = j = 0
        for name, p in factors:
            if name == "u":
                i += p
            elif name == "v":
                j += p
            else:
                raise ValueError(f"unknown variable {name!r}")
        return (i, j)

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def swap(self) -> "BivariatePoly":
        """Exchange u and v."""
        return self._from_clean({(j, i): c for (i, j), c in self._terms.items()})

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def diagonal(self) -> "UniPoly":
        """Set ``u = v = t``."""
        return UniPoly(_collect((i + j, c) for (i, j), c in self._terms.items()))

    def at_one(self) -> int:
        """Set ``u = v = 1``."""
        return sum(self._terms.values())


def _collect(pairs):
    out: Dict[int, int] = {}
    for k, c in pairs:
        out[k] = out.get(k, 0) + c
    return out


class UniPoly(SparsePoly):
    """Element of Z[t]; keys are integer exponents."""

    __slots__ = ()
    _one_key = 0

    @staticmethod
    def _mul_keys(a, b):
        return a + b

    @staticmethod
    def _exps(key):
        return (key,)

    @staticmethod
    def _render_key(key):
        if key == 0:
            return ""
        return "t" if key == 1 else f"t^{key}"

    @classmethod
    def _key_from_factors(cls, factors):
        k = 0
        for name, p in factors:
            if name != "t":
                raise ValueError(f"unknown variable {name!r}")
            k += p
        return k

    def at_one(self) -> int:
        return sum(self._terms.values())
