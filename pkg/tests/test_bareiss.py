import pytest
from hypothesis import given, settings, strategies as st

from zalpha.bareiss import MatrixZA, determinant, fraction_free_det, size_bound, triangularize
from zalpha.errors import NotSquare
from zalpha.oracles import brute_det

from helpers import FIELDS, SQRT2, Z, matrices, small_fields

A = SQRT2.alpha


def M(F, rows):
    return MatrixZA.from_ints(F, rows)


def test_examples():
    assert determinant(M(SQRT2, [[1, A], [A, 1]])) == SQRT2.from_int(-1)
    assert determinant(M(Z, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == Z.one
    assert determinant(M(Z, [[2, 1], [1, 2]])) == Z.from_int(3)
    one_plus, one_minus = SQRT2.element([1, 1]), SQRT2.element([1, -1])
    assert determinant(M(SQRT2, [[one_plus, 1], [1, one_minus]])) == SQRT2.from_int(-2)


def test_identity_needs_no_pivoting():
    _, trace = triangularize(M(Z, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert trace.swaps == 0 and trace.pivot_rows == [0, 1, 2]


def test_permutation_matrices():
    assert determinant(M(Z, [[0, 1], [1, 0]])) == Z.from_int(-1)
    assert determinant(M(Z, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])) == Z.one
    assert determinant(M(SQRT2, [[0, A], [A, 0]])) == SQRT2.from_int(-2)


def test_repeated_row_is_singular():
    r = [SQRT2.element([1, 2]), A, 3]
    m = M(SQRT2, [r, [4, 5, A], r])
    assert determinant(m) == SQRT2.zero


def test_zero_column_exits_early():
    m = M(Z, [[0, 1, 2], [0, 3, 4], [0, 5, 6]])
    _, trace = triangularize(m)
    assert trace.singular and determinant(m) == Z.zero


def test_not_square():
    with pytest.raises(NotSquare):
        determinant(M(Z, [[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(NotSquare):
        brute_det(M(Z, [[1, 2, 3], [4, 5, 6]]))


def test_generic_over_python_ints():
    # the same recurrence works for any exact-division ring
    assert fraction_free_det([[2, 3, 1], [4, 1, 5], [7, 2, 2]], lambda x, y: x // y) == 66


@settings(max_examples=150, deadline=None)
@given(st.data(), st.integers(1, 5))
def test_matches_cofactor_expansion(data, n):
    F = data.draw(small_fields)
    m = MatrixZA(F, data.draw(matrices(F, n)))
    # exact divisions would raise InexactDivision and fail the test
    upper, trace = triangularize(m)
    assert determinant(m) == brute_det(m)
    assert trace.max_opc <= size_bound(m)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_multiplicative(data):
    F = data.draw(small_fields)
    a = MatrixZA(F, data.draw(matrices(F, 3, 6)))
    b = MatrixZA(F, data.draw(matrices(F, 3, 6)))
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=60, deadline=None)
@given(st.data(), st.integers(2, 4))
def test_row_swap_flips_sign(data, n):
    F = data.draw(small_fields)
    rows = data.draw(matrices(F, n))
    swapped = (rows[1], rows[0]) + rows[2:]
    assert determinant(MatrixZA(F, swapped)) == -determinant(MatrixZA(F, rows))


@pytest.mark.parametrize("F", list(FIELDS.values()), ids=list(FIELDS))
def test_upper_triangular_output(F):
    import random

    from zalpha.suites import random_matrix

    m = random_matrix(F, 4, random.Random(3), 10, zero_prob=0)
    upper, trace = triangularize(m)
    for i, r in enumerate(upper.rows):
        assert all(not x for x in r[:i])
    assert trace.sign * upper.rows[-1][-1] == determinant(m)
