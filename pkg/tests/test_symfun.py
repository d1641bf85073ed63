from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from pfaffian_lab.combinat import enumerate_partitions
from pfaffian_lab.errors import IndexOutOfRange, LengthMismatch
from pfaffian_lab.exactring import Poly
from pfaffian_lab.linalg import Matrix, det
from pfaffian_lab.symfun import (
    alternant,
    complete_homogeneous,
    is_symmetric,
    schur,
    schur_jacobi_trudi,
    schur_tableaux,
    sundquist_factors,
    vandermonde,
    var_block,
)

x1, x2, x3 = var_block(3)
a, b, c = Poly.var("a"), Poly.var("b"), Poly.var("c")


def test_vandermonde_examples():
    assert vandermonde(1) == 1
    assert vandermonde(2) == x1 - x2
    v3 = vandermonde(3)
    assert len(v3) == 6 and all(abs(coef) == 1 for _, coef in v3.items())


def test_schur_examples():
    assert schur((1,), 2) == x1 + x2
    assert schur((2, 1), 2) == x1**2 * x2 + x1 * x2**2
    assert str(schur((2, 1), 2)) == "x1^2*x2 + x1*x2^2"
    assert schur((), 3) == 1
    assert schur((1, 1, 1), 2) == 0


def test_complete_homogeneous_examples():
    assert complete_homogeneous(0, 2) == 1
    assert complete_homogeneous(2, 2) == x1**2 + x1 * x2 + x2**2
    assert complete_homogeneous(-1, 2) == 0


def test_jacobi_trudi_spot_check():
    lam = (2, 1)
    M = Matrix.from_function(2, 2, lambda i, j: complete_homogeneous(lam[i - 1] - i + j, 3))
    assert det(M) == schur(lam, 3)
    assert schur_jacobi_trudi(lam, 3) == schur(lam, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tableaux_oracle(n):
    for lam in enumerate_partitions(6, n):
        assert schur(lam, n) == schur_tableaux(lam, n), lam


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symmetric_and_homogeneous(n):
    xs = var_block(n)
    for lam in enumerate_partitions(5, n):
        s = schur(lam, n)
        assert is_symmetric(s, n)
        for i in range(n):
            for j in range(i + 1, n):
                swapped = s.subs({str(xs[i]): xs[j], str(xs[j]): xs[i]})
                assert swapped == s
        assert {Poly._raw({m: 1}).degree() for m, _ in s.items()} == {sum(lam)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stability(n):
    for lam in enumerate_partitions(5, n - 1):
        assert schur(lam, n).subs({f"x{n}": 0}) == schur(lam, n - 1)


def test_sundquist_factor_examples():
    d, j, y_of = sundquist_factors([1], 4, a, b, c)
    assert d == 1 and j == 1
    d, j, y_of = sundquist_factors([1, 2], 4, 1, 0, 1)
    assert j == 1 + x1 * x2 and d == x1 - x2
    assert y_of(4) == Poly.var("y1") * Poly.var("y2")
    _, j4, _ = sundquist_factors([1, 2, 3, 4], 4, a, b, c)
    assert j4.degree(["a", "b", "c"]) == 6
    with pytest.raises(IndexOutOfRange):
        sundquist_factors([5], 4, a, b, c)


def test_alternant_examples():
    y1, y2 = Poly.var("y1"), Poly.var("y2")
    assert alternant([0], [0], 2, 2) == y1 - y2
    assert len(alternant([2, 1], [1, 0], 4, 4)) == 24
    with pytest.raises(LengthMismatch):
        alternant([1], [1, 0], 4, 4)


@given(
    st.lists(st.integers(0, 3), min_size=2, max_size=2),
    st.lists(st.integers(0, 3), min_size=2, max_size=2),
    st.sampled_from([(1, 2), (1, 3), (2, 4), (3, 4)]),
)
def test_alternant_antisymmetry(alpha, beta, swap):
    # sigma acts on x and y indices together, so the swap moves both blocks
    xs, ys = var_block(4), var_block(4, "y")
    order = [1, 2, 3, 4]
    i, j = swap
    order[i - 1], order[j - 1] = order[j - 1], order[i - 1]
    A = alternant(alpha, beta, xs, ys)
    assert alternant(alpha, beta, [xs[k - 1] for k in order], [ys[k - 1] for k in order]) == -A
