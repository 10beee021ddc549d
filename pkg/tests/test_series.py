from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweight.series import NonInvertibleConstantTerm, Series


def test_exp_t():
    e = Series.exp_t(4)
    assert [e[k] for k in range(5)] == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
    assert e * Series.exp_t(4, -1) == Series.constant(Fraction(1), 4)


def test_bernoulli_generating_inverse():
    g = Series([Fraction(1, factorial(j + 1)) for j in range(3)], 2)
    inv = g.inverse()
    assert [inv[k] for k in range(3)] == [1, Fraction(-1, 2), Fraction(1, 12)]


def test_noninvertible():
    with pytest.raises(NonInvertibleConstantTerm):
        Series([Fraction(0), Fraction(1)], 3).inverse()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=4, max_size=4))
def test_exp_log_round_trip(tail):
    f = Series([Fraction(1)] + tail, 4)
    assert f.log().exp() == f
    assert (f ** 3) * (f ** -3) == Series.constant(Fraction(1), 4)
