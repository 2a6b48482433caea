from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from raddepth.linalg import (AmbientMismatch, Mat, Subspace, image, inverse, kernel, rank, rref,
                             solve)

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    return Mat([[draw(rationals) for _ in range(c)] for _ in range(r)], r, c)


@st.composite
def subspace_triples(draw, n=4):
    def sub():
        k = draw(st.integers(0, n))
        return Subspace(n, [[draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(k)])
    u, v, w = sub(), sub(), sub()
    return u.intersect(w), v, w


def test_rref_reduces_to_identity_on_invertible():
    m = Mat([[2, 1], [1, 1]])
    red, pivots = rref(m)
    assert red == Mat.identity(2)
    assert list(pivots) == [0, 1]


def test_fractions_stay_exact():
    m = Mat([[Fraction(1, 3), 1], [1, 3]])
    assert rank(m) == 1
    assert inverse(m) is None
    x = solve(Mat([[3, 0], [0, 7]]), [1, 1])
    assert x == (Fraction(1, 3), Fraction(1, 7))


def test_subspace_equality_is_canonical():
    a = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace(3, [[1, 2, 1], [1, 0, -1]])
    assert a == b and hash(a) == hash(b)
    assert a.contains([2, 3, 1])
    assert not a.contains([1, 0, 0])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace(2, [[1, 0]]) + Subspace(3, [[1, 0, 0]])


def test_solve_inconsistent():
    assert solve(Mat([[1, 1], [1, 1]]), [1, 2]) is None


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols
    assert image(m).dim == rank(m)
    for v in kernel(m).rows:
        assert not any(m.apply(v))


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.T)


@given(subspace_triples())
def test_modular_law(t):
    u, v, w = t
    assert u.issubset(w)
    assert u + v.intersect(w) == (u + v).intersect(w)


@given(subspace_triples())
def test_dimension_formula(t):
    _, v, w = t
    assert (v + w).dim + v.intersect(w).dim == v.dim + w.dim


@given(matrices(4, 4), st.lists(rationals, min_size=4, max_size=4))
def test_solve_is_a_solution(m, x):
    x = x[:m.cols]
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None and m.apply(y) == b
