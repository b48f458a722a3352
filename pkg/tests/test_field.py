from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zalpha import arith
from zalpha.errors import FieldMismatch, IntervalNotIsolating, NotMonic, NotSquarefree, ZeroDivisor
from zalpha.field import field_from_polynomial, field_new, opc, reduction_table
from zalpha.oracles import interval_eval

from helpers import FIELDS, PLASTIC, SQRT2, Z, fields, elements


def test_sqrt2_descriptor():
    assert SQRT2.degree == 2
    assert SQRT2.reduction_table == ((2, 0),)
    assert SQRT2.const_M == 6
    assert (SQRT2.const_P, SQRT2.const_Q, SQRT2.const_S) == (64, 8, 6)


def test_plastic_reduction_table():
    assert reduction_table([-1, -1, 0]) == ((1, 1, 0), (0, 1, 1))


def test_integer_field_is_minimal():
    F = field_new([-5], (0, 10))
    assert F.degree == 1 and F.alpha_exact == 5
    assert (Z.const_M, Z.const_P, Z.const_Q, Z.const_S) == (1, 1, 1, 1)


def test_reducible_field_accepted_until_a_zero_divisor_shows_up():
    F = field_new([-4, 0], (1, 3))
    a = F.element([-2, 1])  # alpha - 2
    with pytest.raises(ZeroDivisor):
        arith.inverse(a)


def test_not_squarefree():
    with pytest.raises(NotSquarefree):
        field_new([1, 2], (-2, 0))


def test_interval_must_isolate():
    with pytest.raises(IntervalNotIsolating):
        field_new([-2, 0], (-2, 2))
    with pytest.raises(IntervalNotIsolating):
        field_new([-2, 0], (2, 3))
    with pytest.raises(IntervalNotIsolating):
        field_new([-2, 0], (2, 1))


def test_not_monic():
    with pytest.raises(NotMonic):
        field_from_polynomial([-2, 0, 3], (0, 1))
    assert field_from_polynomial([-2, 0, 1], (1, 2)) == SQRT2


def test_root_on_endpoint_is_exact():
    F = field_new([-2, -1], (2, 3))  # x^2 - x - 2 = (x-2)(x+1)
    assert F.alpha_exact == 2


def test_field_equality_ignores_derived_fields():
    assert field_new([-2, 0], ("1", "2")) == SQRT2
    assert field_new([-2, 0], (1, Fraction(3, 2))) != SQRT2


def test_opc():
    assert opc(SQRT2.element([3, -2])) == 3
    assert opc(SQRT2.zero) == 0
    assert opc(SQRT2.from_int(-7)) == 7


def test_mixing_fields_rejected():
    with pytest.raises(FieldMismatch):
        SQRT2.alpha + PLASTIC.alpha


def test_str():
    assert str(SQRT2.element([3, -2])) == "3 - 2*a"
    assert str(PLASTIC.element([0, 0, 1])) == "a^2"
    assert str(SQRT2.element([0, -1])) == "-a"
    assert str(SQRT2.zero) == "0"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=6))
def test_reduction_table_bound(f):
    r = reduction_table(f)
    fi = max(abs(c) for c in f)
    for k, row in enumerate(r):
        assert all(abs(x) <= fi * (1 + fi) ** k for x in row)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=6))
def test_reduction_table_reduces_powers(f):
    # alpha^(m+k) = sum_l r[k][l] alpha^l, checked as polynomial identity mod f
    from zalpha import poly

    m = len(f)
    full = list(f) + [1]
    for k, row in enumerate(reduction_table(f)):
        x = [0] * (m + k) + [1]
        _, rem = poly.divmod_q(x, full)
        assert poly.trim(rem) == poly.trim(list(row))


@pytest.mark.parametrize("F", list(FIELDS.values()), ids=list(FIELDS))
def test_root_bound_soundness(F):
    a = interval_eval(F.alpha, 128)
    assert a.abs_hi() <= 1 + F.f_inf_norm
    s = sum(interval_eval(F.element([0] * k + [1]), 128).abs_hi() for k in range(F.degree))
    assert s <= F.const_S


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_zero_iff_opc_zero(data):
    F = data.draw(fields)
    a = data.draw(elements(F, 32))
    # 512 bits is far below the magnitude lower bound for 32-bit coefficients
    iv = interval_eval(a, 512)
    if opc(a) == 0:
        assert iv.sign() == 0
    else:
        assert iv.sign() in (-1, 1)
