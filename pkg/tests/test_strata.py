import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nestedquot.measures import MeasureSpec, apply_measure
from nestedquot.polys import UniversalMotive
from nestedquot.strata import (enumerate_decompositions, enumerate_nested, euler_count,
                               from_diffs, hilb_class, oracle_coefficient, oracle_series,
                               stratum_class, to_diffs)
from nestedquot.zeta import QuotSeriesConfig, main_series

from helpers import brute_force_decompositions

L = UniversalMotive.L()
s = UniversalMotive.s

nested = st.lists(st.integers(0, 4), min_size=1, max_size=4).map(lambda xs: tuple(sorted(xs)))


def test_diffs_examples():
    assert to_diffs((1, 1, 3)) == (1, 0, 2)
    assert to_diffs((0, 0, 0)) == (0, 0, 0)
    assert from_diffs((1, 0, 2)) == (1, 1, 3)


def test_diffs_reject_bad_input():
    with pytest.raises(ValueError):
        to_diffs((2, 1))
    with pytest.raises(ValueError):
        from_diffs((1, -1))


@given(nested)
def test_diffs_round_trip(n):
    assert from_diffs(to_diffs(n)) == n


def test_enumerate_nested_examples():
    assert list(enumerate_nested(1, 2)) == [(0,), (1,), (2,)]
    assert list(enumerate_nested(2, 1)) == [(0, 0), (0, 1), (1, 1)]
    assert len(list(enumerate_nested(2, 2))) == 6


@pytest.mark.parametrize("d,bound", [(1, 4), (2, 3), (3, 3), (4, 2)])
def test_enumerate_nested_is_exhaustive(d, bound):
    brute = {e for e in itertools.product(range(bound + 1), repeat=d)
             if all(a <= b for a, b in zip(e, e[1:]))}
    got = list(enumerate_nested(d, bound))
    assert len(got) == len(set(got)) and set(got) == brute
    assert len(got) == math.comb(bound + d, d)


def test_decompositions_examples():
    assert set(enumerate_decompositions((1,), 2)) == {((1,), (0,)), ((0,), (1,))}
    assert list(enumerate_decompositions((0, 0, 0), 4)) == [((0, 0, 0),) * 4]


def test_decompositions_of_one_one():
    # generate-and-filter reference finds exactly two: (1,0)+(0,1) is not nested
    assert brute_force_decompositions((1, 1), 2) == {((1, 1), (0, 0)), ((0, 0), (1, 1))}
    assert set(enumerate_decompositions((1, 1), 2)) == brute_force_decompositions((1, 1), 2)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("n", list(enumerate_nested(3, 3)))
def test_decompositions_match_brute_force(n, r):
    got = list(enumerate_decompositions(n, r))
    assert len(got) == len(set(got))
    assert set(got) == brute_force_decompositions(n, r)


def test_hilb_class_examples():
    assert hilb_class((1, 2)) == s(1) ** 2
    assert hilb_class((0, 0, 0)) == 1
    assert hilb_class((2, 2)) == s(2)


def test_stratum_class_examples():
    assert stratum_class(((1,), (0,))) == s(1)
    assert stratum_class(((0,), (1,))) == L * s(1)
    assert stratum_class(((0, 0), (0, 0), (0, 0))) == 1


@pytest.mark.parametrize("n", list(enumerate_nested(2, 3)))
def test_strata_are_single_monomials(n):
    for dec in enumerate_decompositions(n, 3):
        assert list(stratum_class(dec).terms.values()) == [1]


def test_oracle_rank_one_is_hilbert():
    cfg = QuotSeriesConfig(1, 3, 3)
    o = oracle_series(cfg)
    for n in enumerate_nested(3, 3):
        assert o.coefficient(n) == hilb_class(n)


def test_oracle_rank_two_point():
    assert oracle_coefficient((1,), 2) == s(1) * (1 + L)


@pytest.mark.parametrize("r,d", [(1, 2), (2, 2), (3, 1), (2, 3)])
def test_oracle_equals_product(r, d):
    cfg = QuotSeriesConfig(r, d, 3)
    assert oracle_series(cfg) == main_series(cfg)


@pytest.mark.parametrize("r,d", [(2, 2), (3, 2), (2, 3)])
def test_component_count(r, d):
    # L -> 1, s_n -> 1 counts fixed components
    for n in enumerate_nested(d, 3):
        c = oracle_coefficient(n, r)
        assert c.evaluate(1, lambda k: 1) == len(list(enumerate_decompositions(n, r)))


def test_euler_count_examples():
    for n in range(6):
        assert euler_count(QuotSeriesConfig(1, 1, 6), (n,)) == n + 1
    assert euler_count(QuotSeriesConfig(2, 1, 2), (2,)) == 10
    assert euler_count(QuotSeriesConfig(3, 2, 2), (0, 0)) == 1
    with pytest.raises(ValueError):
        euler_count(QuotSeriesConfig(1, 1, 1), (1,), g=1)


@pytest.mark.parametrize("r,d", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_euler_count_matches_measure(r, d):
    cfg = QuotSeriesConfig(r, d, 3)
    z = main_series(cfg)
    for n in enumerate_nested(d, 3):
        assert euler_count(cfg, n) == apply_measure(z.coefficient(n), MeasureSpec("euler", 0))
