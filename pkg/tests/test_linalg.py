from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pfaffian_lab.errors import IndexOutOfRange, NotAMatching, NotSquare, OddSize, ParseError
from pfaffian_lab.exactring import Poly
from pfaffian_lab.linalg import (
    K_matrix,
    L_matrix,
    Matrix,
    P_matrix,
    S_matrix,
    SkewMatrix,
    T_matrix,
    block_pfaffian_msf,
    cofactor_matrix,
    copfaffian,
    copfaffian_matrix,
    det,
    det_laplace,
    det_permutations,
    matching_sign,
    matchings,
    pfaffian,
    pfaffian_combinatorial,
    submatrix,
)

s, t = Poly.var("s"), Poly.var("t")


@st.composite
def skew_matrices(draw, sizes=(2, 4, 6, 8, 10)):
    n = draw(st.sampled_from(sizes))
    vals = draw(st.lists(st.integers(-3, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return SkewMatrix.from_upper_list(n, vals)


@st.composite
def int_matrices(draw, n):
    vals = draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))
    return Matrix.from_function(n, n, lambda i, j: vals[(i - 1) * n + j - 1])


def perm_sign(p) -> int:
    return (-1) ** sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def test_submatrix_examples():
    assert submatrix(Matrix.identity(2), [1], [2]) == Matrix([[0]])
    T = Matrix.from_function(3, 3, lambda i, j: 10 * i + j)
    assert submatrix(T, [1, 3], [2]) == Matrix([[12], [32]])
    assert submatrix(T, [1, 2, 3], [1, 2, 3]) == T
    with pytest.raises(IndexOutOfRange):
        submatrix(T, [4], [1])


def test_det_examples():
    c = Poly.var("c")
    assert det(Matrix([[c]])) == c
    assert det(Matrix([[0, 1], [-1, 0]])) == 1
    with pytest.raises(NotSquare):
        det(Matrix([[1, 2]]))


@given(int_matrices(5))
def test_det_matches_cofactor_expansion(M):
    assert det(M) == det_laplace(M) == det_permutations(M)


def test_pfaffian_examples():
    assert str(pfaffian(SkewMatrix.symbolic(4))) == "a12*a34 - a13*a24 + a14*a23"
    assert pfaffian_combinatorial(SkewMatrix.symbolic(4)) == pfaffian(SkewMatrix.symbolic(4))
    assert pfaffian(SkewMatrix.from_upper_list(2, [7])) == 7
    assert pfaffian_combinatorial(SkewMatrix.from_upper_list(4, [1, 2, 3, 4, 5, 6])) == 8
    assert pfaffian(SkewMatrix.from_upper_list(4, [1, 2, 3, 4, 5, 6])) == 8
    assert pfaffian(SkewMatrix.from_upper_list(0, [])) == 1


def test_odd_size_is_an_error():
    A = SkewMatrix.from_upper_list(3, [1, 2, 3])
    for f in (pfaffian, pfaffian_combinatorial, copfaffian_matrix):
        with pytest.raises(OddSize):
            f(A)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_named_pfaffians(n):
    m = n // 2
    assert pfaffian(K_matrix(n)) == 1
    assert pfaffian(L_matrix(n)) == (-1) ** (m * (m - 1) // 2)


def test_matching_sign_examples():
    assert matching_sign([(1, 4), (2, 5), (3, 6)]) == (-1, -1)
    assert matching_sign([(1, 2), (3, 4)]) == (1, 1)
    with pytest.raises(NotAMatching):
        matching_sign([(1, 2), (2, 3)])


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_matching_signs_agree_exhaustively(n):
    count = 0
    for m in matchings(range(1, n + 1)):
        perm, cross = matching_sign(m)
        assert perm == cross
        count += 1
    assert count == {2: 1, 4: 3, 6: 15, 8: 105}[n]


def test_copfaffian_examples():
    assert copfaffian_matrix(T_matrix(4)) == SkewMatrix.from_upper(4, lambda i, j: int(j == i + 1))
    assert copfaffian_matrix(S_matrix(4)) == SkewMatrix.from_upper(4, lambda i, j: (-1) ** (i + j - 1))
    P = P_matrix(4)
    for i, j in combinations(range(1, 5), 2):
        want = (-1) ** (j - i - 1) * s ** (j - i - 1) * t ** ((i - 1) % 2 + j % 2)
        assert copfaffian(P, i, j) == want


def test_block_pfaffian_examples():
    A = SkewMatrix.from_upper_list(2, [1])
    assert block_pfaffian_msf(Matrix.identity(2), A) == 1
    rng = random.Random(7)
    for m, N in ((2, 4), (4, 6)):
        for _ in range(5):
            A = SkewMatrix.from_upper(N, lambda i, j: rng.randint(-3, 3))
            T = Matrix.from_function(m, N, lambda i, j: rng.randint(-3, 3))
            subset_sum = sum(
                pfaffian(submatrix(A, I, I)) * det(submatrix(T, list(range(1, m + 1)), I))
                for I in combinations(range(1, N + 1), m)
            )
            assert block_pfaffian_msf(T, A) == subset_sum


@given(skew_matrices())
def test_pfaffian_square_is_det(A):
    assert pfaffian(A) ** 2 == det(A)


@given(skew_matrices())
def test_memoized_matches_combinatorial(A):
    assert pfaffian(A) == pfaffian_combinatorial(A)


@given(skew_matrices((2, 4, 6, 8)), st.randoms(use_true_random=False))
def test_permutation_covariance(A, rng):
    p = list(range(1, A.rows + 1))
    rng.shuffle(p)
    assert pfaffian(A.permuted(p)) == perm_sign(p) * pfaffian(A)


@given(skew_matrices((2, 4, 6)), st.data())
def test_congruence(A, data):
    B = data.draw(int_matrices(A.rows))
    assert pfaffian(B @ A @ B.transpose()) == det(B) * pfaffian(A)


@given(skew_matrices((2, 4, 6, 8)))
def test_row_expansion(A):
    n, pf = A.rows, pfaffian(A)
    hat = copfaffian_matrix(A)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total = sum(A.entry(k, j) * copfaffian(A, k, i) for k in range(1, n + 1))
            assert total == (pf if i == j else 0)
    assert hat.transpose() @ A == Matrix.identity(n).scale(pf)
    assert A @ hat.transpose() == Matrix.identity(n).scale(pf)


@given(skew_matrices((2, 4, 6)))
def test_cofactor_is_copfaffian_times_pfaffian(A):
    pf, cof = pfaffian(A), cofactor_matrix(A)
    for i in range(1, A.rows + 1):
        for j in range(1, A.rows + 1):
            assert cof.entry(i, j) == copfaffian(A, j, i) * pf


def test_text_round_trip():
    A = SkewMatrix.symbolic(4)
    text = A.to_text()
    assert text.splitlines()[0] == "skew 4"
    assert SkewMatrix.from_text(text) == A
    M = Matrix([[1, Poly.var("x1") ** 2 * Poly.var("q")], [0, -3]])
    assert Matrix.from_text(M.to_text()) == M
    with pytest.raises(ParseError):
        Matrix.from_text("2 2\n1 2 3")


def test_full_matching_counts():
    assert sum(1 for _ in matchings(range(1, 11))) == 945

