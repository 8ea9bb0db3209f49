from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ttlink.errors import InvalidArgument, ReducibleToSatellite
from ttlink.reduction import ReducedModel, reconstruct, reduce


def _subtractive_oracle(p, q, r):
    """Literal one-subtraction-per-step reference."""
    a, b = p, q
    while not (a < r and b < r):
        if a >= b:
            a -= b
        else:
            b -= a
    return a, b


def test_figure_example():
    m = reduce(3, 7, 5, 0)
    assert (m.n, m.m, m.s_prime) == (3, 4, 0)
    assert m.cf == (0, 1)
    assert m.ratio() == Fraction(3, 7)


def test_worked_example():
    m = reduce(9, 7, 5, 3)
    assert m.slot_pair == (2, 3) and m.s_prime == 3
    assert reconstruct(m.cf, m.m, m.n) == Fraction(9, 7)


def test_already_reduced():
    m = reduce(4, 3, 5, 7)
    assert m.slot_pair == (4, 3) and m.s_prime == 2 and m.cf == ()


def test_reconstruct_examples():
    assert reconstruct([0, 1], 4, 3) == Fraction(3, 7)
    assert reconstruct([], 5, 2) == Fraction(5, 2)


def test_errors():
    with pytest.raises(ReducibleToSatellite) as err:
        reduce(6, 9, 3, 1)
    assert err.value.details["companion"] == [2, 3]
    with pytest.raises(InvalidArgument):
        reduce(3, 2, 6, 0)
    with pytest.raises(InvalidArgument):
        reduce(0, 2, 2, 0)
    with pytest.raises(InvalidArgument):
        reduce(3, 2, 1, 0)


def test_mirror_flag():
    m = reduce(9, -7, 5, 3)
    assert m.mirrored and m.slot_pair == reduce(9, 7, 5, 3).slot_pair
    assert m.s_prime == reduce(9, 7, 5, -3).s_prime == 2


def test_model_invariants_checked():
    with pytest.raises(InvalidArgument):
        ReducedModel(n=1, m=1, r=5, s_prime=0, cf=(), swapped=False)


def test_dict_round_trip():
    m = reduce(1000003, 999, 17, -5)
    assert ReducedModel.from_dict(m.to_dict()) == m


@given(st.integers(1, 400), st.integers(1, 400), st.data())
def test_matches_subtractive_oracle(p, q, data):
    d = gcd(p, q)
    assume(d + 1 <= p + q)
    r = data.draw(st.integers(d + 1, p + q))
    m = reduce(p, q, r, 0)
    assert m.slot_pair == _subtractive_oracle(p, q, r)


@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6), st.integers(-10 ** 6, 10 ** 6), st.data())
def test_properties(p, q, s, data):
    d = gcd(p, q)
    assume(d + 1 <= p + q)
    r = data.draw(st.integers(d + 1, min(p + q, d + 2000)))
    m = reduce(p, q, r, s)
    assert 0 < m.n < r and 0 < m.m < r and m.n + m.m >= r
    assert m.s_prime == s % r
    assert m.ratio() == Fraction(p, q)
    key = (sorted((m.n, m.m)), m.s_prime)
    for other in (reduce(p, q + p, r, s), reduce(q, p, r, s)):
        assert (sorted((other.n, other.m)), other.s_prime) == key


def test_large_inputs_are_fast():
    m = reduce(10 ** 18 + 9, 10 ** 18 - 11, 7, 3)
    assert m.ratio() == Fraction(10 ** 18 + 9, 10 ** 18 - 11)
