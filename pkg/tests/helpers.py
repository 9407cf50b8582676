"""Reference oracles and random generators shared by the test modules."""
import itertools
import random

from nestedquot.polys import BivariatePoly, UniversalMotive
from nestedquot.series import INTEGERS, MOTIVES, TruncatedSeries


def brute_force_decompositions(n, r):
    """Every r-tuple of nested tuples summing to n, by generate-and-filter.

    Each column n_i is split into r parts independently; tuples whose parts
    are not all non-decreasing are discarded.
    """
    def splits(k):
        return [c for c in itertools.product(range(k + 1), repeat=r) if sum(c) == k]

    found = set()
    for cols in itertools.product(*(splits(k) for k in n)):
        parts = tuple(tuple(col[a] for col in cols) for a in range(r))
        if all(all(x <= y for x, y in zip(p, p[1:])) for p in parts):
            found.add(parts)
    return found


def dense_product(a, b):
    """Cauchy product by scanning the whole cap box; no sparsity tricks."""
    out = {}
    for e in itertools.product(*(range(c + 1) for c in a.cap)):
        acc = a.ring.zero
        for f in itertools.product(*(range(x + 1) for x in e)):
            g = tuple(x - y for x, y in zip(e, f))
            acc = acc + a.coefficient(f) * b.coefficient(g)
        out[e] = acc
    return TruncatedSeries(a.ring, a.cap, out)


def random_motive(rng: random.Random, max_terms=3, max_l=2, max_s=3):
    out = UniversalMotive()
    for _ in range(rng.randint(0, max_terms)):
        mono = UniversalMotive.L(rng.randint(0, max_l))
        for _ in range(rng.randint(0, 2)):
            mono = mono * UniversalMotive.s(rng.randint(1, max_s))
        out = out + mono * rng.randint(-3, 3)
    return out


def random_bivariate(rng: random.Random, max_terms=4, max_deg=3):
    return BivariatePoly({(rng.randint(0, max_deg), rng.randint(0, max_deg)): rng.randint(-4, 4)
                          for _ in range(rng.randint(0, max_terms))})


def random_series(rng: random.Random, ring, cap, density=0.4, unit_constant=False):
    terms = {}
    for e in itertools.product(*(range(c + 1) for c in cap)):
        if rng.random() < density:
            terms[e] = random_motive(rng) if ring is MOTIVES else rng.randint(-5, 5)
    if unit_constant:
        terms[(0,) * len(cap)] = ring.one if rng.random() < 0.5 else -ring.one
    return TruncatedSeries(ring, cap, terms)


def assert_canonical(s):
    for e, c in s.terms.items():
        assert all(0 <= x <= k for x, k in zip(e, s.cap)), (e, s.cap)
        assert c != s.ring.zero
