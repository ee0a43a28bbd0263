from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wschub.simplex import solve_nonneg_linear

scipy_optimize = pytest.importorskip("scipy.optimize")


def check(A, b):
    res = solve_nonneg_linear(A, b)
    if res.feasible:
        assert all(x >= 0 for x in res.x)
        assert all(sum(a * x for a, x in zip(row, res.x)) == bi for row, bi in zip(A, b))
    else:
        y = res.witness
        n = len(A[0])
        # Farkas: y A >= 0 and y b < 0
        assert all(sum(y[i] * A[i][j] for i in range(len(A))) >= 0 for j in range(n))
        assert sum(yi * bi for yi, bi in zip(y, b)) < 0
    return res


def test_trivial():
    assert check([[1]], [3]).x == [3]
    assert not check([[1]], [-1]).feasible


def test_square_free_remark_example():
    # beta2^2 + beta2 beta3 over square-free products of two negative A4 roots,
    # restricted to the relevant columns: beta2*beta3, beta2*(beta2+beta3), beta3*(beta2+beta3)
    # monomials: b2^2, b2 b3, b3^2
    A = [[0, 1, 0], [1, 1, 1], [0, 0, 1]]
    res = check(A, [1, 1, 0])
    assert res.x == [0, 1, 0]


mat = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4)


@settings(max_examples=80, deadline=None)
@given(mat, st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_feasible_by_construction(A, x0):
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    assert check(A, b).feasible


@settings(max_examples=80, deadline=None)
@given(mat, st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_agrees_with_scipy(A, b):
    b = b[: len(A)]
    res = check(A, b)
    ref = scipy_optimize.linprog([0] * 4, A_eq=A, b_eq=b, bounds=[(0, None)] * 4, method="highs")
    assert res.feasible == (ref.status == 0)


def test_fraction_input_and_empty():
    res = check([[Fraction(1, 2), Fraction(1, 3)]], [Fraction(5, 6)])
    assert res.feasible
    assert solve_nonneg_linear([], []).feasible
