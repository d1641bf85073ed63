"""Random integer instances shared by the verifiers."""

from __future__ import annotations

import random

from ..linalg import Matrix, PfaffianMemo, SkewMatrix, copfaffian_matrix, det, pfaffian

LO, HI = -3, 3


def sign(k: int) -> int:
    return -1 if k % 2 else 1


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([[rng.randint(LO, HI) for _ in range(cols)] for _ in range(rows)], cols)


def random_skew(rng: random.Random, n: int) -> SkewMatrix:
    return SkewMatrix.from_upper_list(n, [rng.randint(LO, HI) for _ in range(n * (n - 1) // 2)])


def nonsingular_skew(rng: random.Random, n: int) -> SkewMatrix:
    """Random even-size skew matrix, redrawn until its Pfaffian is nonzero."""
    while True:
        A = random_skew(rng, n)
        if pfaffian(A) != 0:
            return A


def nonsingular_matrix(rng: random.Random, n: int) -> Matrix:
    while True:
        B = random_matrix(rng, n, n)
        if det(B) != 0:
            return B


def cop(A: Matrix) -> SkewMatrix:
    return copfaffian_matrix(A, PfaffianMemo(A))
