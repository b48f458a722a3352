from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from zalpha import poly

polys = st.lists(st.integers(-50, 50), min_size=1, max_size=7)
nonzero_polys = polys.filter(lambda p: any(p))


def test_basic_ops():
    assert poly.trim([1, 2, 0, 0]) == [1, 2]
    assert poly.degree(poly.trim([0])) == -1 and poly.degree([3, 0, 1]) == 2
    assert poly.mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert poly.derivative([5, 3, 2]) == [3, 4]
    assert poly.content([6, -9, 12]) == 3


def test_sturm_counts():
    f = [-2, 0, 1]
    assert poly.count_roots_closed(f, Fraction(1), Fraction(2)) == 1
    assert poly.count_roots_closed(f, Fraction(-2), Fraction(2)) == 2
    assert poly.count_roots_closed([-2, -1, 1], Fraction(2), Fraction(3)) == 1  # root on the endpoint
    assert poly.count_roots_closed([-1, -1, 0, 0, 0, 1], Fraction(-10), Fraction(10)) == 1


def test_exact_quo():
    assert poly.exact_quo([-1, 0, 1], [1, 1]) == [-1, 1]
    with pytest.raises(ArithmeticError):
        poly.exact_quo([1, 0, 1], [1, 1])


@settings(max_examples=200, deadline=None)
@given(polys, nonzero_polys)
def test_exact_quo_inverts_mul(p, q):
    assert poly.exact_quo(poly.mul(p, q), q) == poly.trim(p)


@settings(max_examples=200, deadline=None)
@given(polys, nonzero_polys)
def test_pseudo_divmod_identity(p, q):
    p, q = poly.trim(p), poly.trim(q)
    dp, dq = poly.degree(p), poly.degree(q)
    assume(dp >= dq)
    quo, rem = poly.pseudo_divmod(p, q)
    lhs = poly.scale(p, q[-1] ** (dp - dq + 1))
    assert poly.trim(lhs) == poly.add(poly.mul(quo, q), rem)
    assert poly.degree(rem) < dq


@settings(max_examples=200, deadline=None)
@given(polys, st.fractions(min_value=-5, max_value=5, max_denominator=50))
def test_eval_sign_matches_fraction_eval(p, t):
    v = poly.eval_q(p, t)
    assert poly.eval_sign_at(p, t) == (v > 0) - (v < 0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4, unique=True))
def test_sturm_counts_known_roots(roots):
    f = [1]
    for r in roots:
        f = poly.mul(f, [-r, 1])
    assert poly.count_roots_closed(f, Fraction(-6), Fraction(6)) == len(roots)
    assert poly.count_roots_closed(f, Fraction(0), Fraction(6)) == sum(r >= 0 for r in roots)
    assert poly.gcd_degree(f, poly.derivative(f)) == 0
