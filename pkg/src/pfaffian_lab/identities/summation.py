"""Minor summation formulas: subset sums of Pfaffian-weighted minors against block Pfaffians.

Blocks carrying a 1/Pf factor are verified in cleared form: every block of the
matrix is multiplied by ``c`` (a product of the relevant Pfaffians), so a block
``X / d`` becomes the integer multiple ``X * (c // d)``; a Pfaffian of size 2k
then picks up ``c**k``, which is moved to the subset-sum side.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from ..exactring import Poly
from ..linalg import (
    J_matrix,
    Matrix,
    PfaffianMemo,
    block,
    det,
    identity,
    pfaffian,
    submatrix,
    zeros,
)
from ._instances import cop, nonsingular_skew, random_matrix, random_skew
from .registry import register

Z = Poly.var("z")


class Over(NamedTuple):
    """The block ``mat / den``."""

    mat: Matrix
    den: int


def cleared(rows, c: int) -> Matrix:
    out = []
    for row in rows:
        new = []
        for b in row:
            if b is None:
                new.append(None)
            elif isinstance(b, Over):
                if c % b.den:
                    raise ValueError("clearing factor is not a multiple of the block denominator")
                new.append(b.mat.scale(c // b.den))
            else:
                new.append(b.scale(c))
        out.append(new)
    return block(out)


def check_cleared(chk, lhs, rows, c: int, case: str) -> None:
    """Check ``lhs == c * Pf(M)`` for the block matrix ``M`` as ``lhs * c^(k-1) == Pf(cM)``, size 2k."""
    M = cleared(rows, c)
    chk.equal(lhs * c ** (M.rows // 2 - 1), pfaffian(M), case)


def cols(T: Matrix, J) -> Matrix:
    return submatrix(T, range(1, T.rows + 1), J)


def rows_of(T: Matrix, I) -> Matrix:
    return submatrix(T, I, range(1, T.cols + 1))


def minor(T: Matrix, I, J):
    if len(I) != len(J):
        return 0
    if not I:
        return 1
    return det(submatrix(T, I, J))


def _r(a, b):
    return list(range(a, b + 1))


# msf


@register(
    "msf",
    "Minor summation formula",
    "sum_I Pf(A_I) det(T_I) = Pf(T A tT) = Pf(A) Pf([[O, T J], [-J tT, J tÂ J / Pf A]]) = Pf(A) Pf([[O, J T], [-tT J, Â / Pf A]])",
    form="cleared by c = Pf(A)",
    trials=20,
)
def _msf(p, rng, chk):
    menu = ((2, 4), (4, 6))
    for t in range(p["trials"]):
        m, N = menu[t % 2]
        A = nonsingular_skew(rng, N)
        T = random_matrix(rng, m, N)
        memo = PfaffianMemo(A)
        c = memo.pf()
        Ah = cop(A)
        lhs = sum(memo.pf(I) * det(cols(T, I)) for I in combinations(_r(1, N), m))
        case = f"(m,N)=({m},{N}), trial {t}"
        Q = T @ A @ T.T
        chk.equal(lhs, pfaffian(Q), case + ", Pf(T A tT)")
        Qkl = Matrix.from_function(
            m, m, lambda i, j: sum(A.entry(k, l) * minor(T, [i, j], [k, l]) for k, l in combinations(_r(1, N), 2))
        )
        chk.true(Qkl == Q, case + ", entries of T A tT as minor sums")
        JN, Jm = J_matrix(N), J_matrix(m)
        check_cleared(chk, lhs, [[zeros(m), T @ JN], [-(JN @ T.T), Over(JN @ Ah.T @ JN, c)]], c, case + ", second form")
        check_cleared(chk, lhs, [[zeros(m), Jm @ T], [-(T.T @ Jm), Over(Ah, c)]], c, case + ", third form")
    for N in (2, 4):
        A = random_skew(rng, N)
        chk.equal(pfaffian(A), pfaffian(identity(N) @ A @ identity(N)), f"T = identity, N={N}")


@register(
    "msf.cauchy-binet",
    "Cauchy-Binet formula",
    "sum_K det(X_K) det(Y_K) = det(X tY); also as the minor summation with a hyperbolic A",
    trials=20,
)
def _cauchy_binet(p, rng, chk):
    m, N = 2, 4
    for t in range(p["trials"]):
        X, Y = random_matrix(rng, m, N), random_matrix(rng, m, N)
        lhs = sum(det(cols(X, K)) * det(cols(Y, K)) for K in combinations(_r(1, N), m))
        chk.equal(lhs, det(X @ Y.T), f"trial {t}")
        # minor summation with T = [[X, 0], [0, Y]] J-paired columns gives the same sum up to sign
        T = block([[X, None], [None, Y]])
        A = block([[None, identity(N)], [-identity(N), None]])
        pf = pfaffian(T @ A @ T.T)
        sgn = -1 if (m * (m - 1) // 2) % 2 else 1
        chk.equal(pf, sgn * det(X @ Y.T), f"trial {t}, block form")


@register(
    "msf.cauchy-binet-general",
    "Generalized Cauchy-Binet formula",
    "sum_{I,J} det(A^I_J) det(X_I) det(Y_J) = det(X A tY)",
    trials=20,
)
def _cauchy_binet_general(p, rng, chk):
    m, N = 3, 4
    for t in range(p["trials"]):
        X, Y, A = random_matrix(rng, m, N), random_matrix(rng, m, N), random_matrix(rng, N, N)
        subsets = list(combinations(_r(1, N), m))
        dx = {I: det(cols(X, I)) for I in subsets}
        dy = {J: det(cols(Y, J)) for J in subsets}
        lhs = sum(det(submatrix(A, I, J)) * dx[I] * dy[J] for I in subsets for J in subsets)
        chk.equal(lhs, det(X @ A @ Y.T), f"trial {t}")


@register(
    "msf2",
    "Minor summation with a fixed column set",
    "sum_{I in C(R, m-n)} Pf(A^I_I) det(T_{R0+I}) = Pf([[T_R A tT_R, T_R0 J], [-J tT_R0, O]]) = Pf(A) Pf(3x3 block with Â / Pf A)",
    form="cleared by c = Pf(A)",
    trials=20,
)
def _msf2(p, rng, chk):
    menu = ((3, 1, 2), (4, 2, 4))
    for t in range(p["trials"]):
        m, n, N = menu[t % 2]
        A = nonsingular_skew(rng, N)
        T = random_matrix(rng, m, n + N)
        memo = PfaffianMemo(A)
        c = memo.pf()
        R0, R = _r(1, n), _r(n + 1, n + N)
        lhs = sum(memo.pf([i - n for i in I]) * det(cols(T, R0 + list(I))) for I in combinations(R, m - n))
        TR, T0 = cols(T, R), cols(T, R0)
        Jn, JN = J_matrix(n), J_matrix(N)
        case = f"(m,n,N)=({m},{n},{N}), trial {t}"
        chk.equal(lhs, pfaffian(block([[TR @ A @ TR.T, T0 @ Jn], [-(Jn @ T0.T), zeros(n)]])), case + ", first form")
        rows = [
            [zeros(m), TR @ JN, T0 @ Jn],
            [-(JN @ TR.T), Over(JN @ cop(A).T @ JN, c), zeros(N, n)],
            [-(Jn @ T0.T), zeros(n, N), zeros(n)],
        ]
        check_cleared(chk, lhs, rows, c, case + ", second form")


def _double_sum(memoA, memoB, T, M, N, shiftA=0, shiftB=0):
    """sum_r z^(2r) sum_{|I|=|J|=2r} Pf(A_I) Pf(B_J) det T^I_J."""
    out = Poly.const(0)
    for k in range(0, min(M, N) + 1, 2):
        acc = 0
        for I in combinations(_r(1, M), k):
            a = memoA.pf([i + shiftA for i in I])
            if not a:
                continue
            for J in combinations(_r(1, N), k):
                b = memoB.pf([j + shiftB for j in J])
                if b:
                    acc += a * b * minor(T, I, J)
        out = out + Z**k * acc
    return out


@register(
    "msf3",
    "Minor summation over rows and columns",
    "sum_r z^2r sum_{I,J} Pf(A^I_I) Pf(B^J_J) det(T^I_J) in four block-Pfaffian forms with Q = T B tT",
    form="cleared by c = Pf(A) or Pf(A) Pf(B)",
    trials=20,
)
def _msf3(p, rng, chk):
    menu = ((2, 2), (2, 4))
    for t in range(p["trials"]):
        M, N = menu[t % 2]
        A, B = nonsingular_skew(rng, M), nonsingular_skew(rng, N)
        T = random_matrix(rng, M, N)
        mA, mB = PfaffianMemo(A), PfaffianMemo(B)
        pa, pb = mA.pf(), mB.pf()
        Ah, Bh = cop(A), cop(B)
        lhs = _double_sum(mA, mB, T, M, N)
        case = f"(M,N)=({M},{N}), trial {t}"
        chk.equal(lhs.coefficient_of({"z": 0}, ["z"]), 1, case + ", z^0 term")
        Q = T @ B @ T.T
        JM, JN = J_matrix(M), J_matrix(N)
        check_cleared(chk, lhs, [[Over(Ah + Q.scale(Z**2 * pa), pa)]], pa, case + ", first form")
        chk.equal(lhs, pfaffian(block([[JM @ A.T @ JM, JM], [-JM, Q.scale(Z**2)]])), case + ", second form")
        c = pa * pb
        rows = [[Over(Ah, pa), (T @ JN).scale(Z)], [-(JN @ T.T).scale(Z), Over(JN @ Bh.T @ JN, pb)]]
        check_cleared(chk, lhs, rows, c, case + ", third form")
        rows = [[Over(JM @ Ah.T @ JM, pa), (JM @ T).scale(Z)], [-(T.T @ JM).scale(Z), Over(Bh, pb)]]
        check_cleared(chk, lhs, rows, c, case + ", fourth form")


def _cor_instance(rng, M, N, even):
    """Corollary with a bordered A (index 0 first) and B of size N+1 (index 0 first)."""
    size = M + 2 if even else M + 1
    A = nonsingular_skew(rng, size)
    B = random_skew(rng, N + 1)
    T = random_matrix(rng, M, N)
    mA, mB = PfaffianMemo(A), PfaffianMemo(B)
    pa = mA.pf()
    lhs = Poly.const(0)
    for k in range(0, M + 1):
        acc = 0
        for I in combinations(_r(1, M), k):
            pos_i = [i + 1 for i in I]
            a = mA.pf(pos_i if k % 2 == 0 else [1] + pos_i)
            if not a:
                continue
            for J in combinations(_r(1, N), k):
                pos_j = [j + 1 for j in J]
                b = mB.pf(pos_j if k % 2 == 0 else [1] + pos_j)
                if b:
                    acc += a * b * minor(T, I, J)
        lhs = lhs + Z**k * acc

    def b(i, j):
        return B.entry(i + 1, j + 1)

    def q(i, j):
        # 1-based positions; position 1 is index 0
        if i == j or i > M + 1 or j > M + 1:
            return 0
        if i == 1:
            return Z * sum(b(0, k) * T.entry(j - 1, k) for k in _r(1, N))
        if j == 1:
            return Z * sum(b(k, 0) * T.entry(i - 1, k) for k in _r(1, N))
        return Z**2 * sum(b(k, l) * minor(T, [i - 1, j - 1], [k, l]) for k, l in combinations(_r(1, N), 2))

    Q = Matrix.from_function(size, size, q)
    return lhs, pa, cop(A), Q


def _register_cor(id, parity, shapes):
    @register(
        id,
        f"Row-and-column minor summation, {parity} M, bordered by index 0",
        "sum z^2r Pf(A_I) Pf(B_J) det T^I_J + sum z^(2r+1) Pf(A_{0+I}) Pf(B_{0+J}) det T^I_J = Pf(A) Pf(Â / Pf A + Q)",
        form="cleared by c = Pf(A)",
        trials=20,
    )
    def _cor(p, rng, chk):
        for t in range(p["trials"]):
            M, N = shapes[t % len(shapes)]
            lhs, pa, Ah, Q = _cor_instance(rng, M, N, parity == "even")
            check_cleared(chk, lhs, [[Over(Ah + Q.scale(pa), pa)]], pa, f"(M,N)=({M},{N}), trial {t}")

    return _cor


_register_cor("msf4.cor-odd", "odd", ((3, 4), (1, 2)))
_register_cor("msf4.cor-even", "even", ((2, 4), (2, 2)))


def _pf_det_sum(mA, mB, T, m, n, M, N, weight):
    """sum_r z^r sum_{I subset R, J subset S} weight(I, J) det T^{R0+I}_{S0+J} over the allowed r."""
    lo, hi = max(m, n), min(m + M, n + N)
    R0, S0 = _r(1, m), _r(1, n)
    out = Poly.const(0)
    for r in range(lo, hi + 1):
        acc = 0
        for I in combinations(_r(m + 1, m + M), r - m):
            for J in combinations(_r(n + 1, n + N), r - n):
                w = weight(r - lo, [i - m for i in I], [j - n for j in J])
                if w:
                    acc += w * minor(T, R0 + list(I), S0 + list(J))
        out = out + Z**r * acc
    return out


@register(
    "msf4.thm",
    "Minor summation with fixed rows and columns",
    "sum_r z^r sum_{I,J} Pf(A^I_I) Pf(B^J_J) det T^{R0+I}_{S0+J} = Pf(A) Pf(B) Pf(4x4 block with Â / Pf A and J tB̂ J / Pf B)",
    form="cleared by c = Pf(A) Pf(B)",
    trials=20,
)
def _msf4_thm(p, rng, chk):
    menu = ((2, 0, 2, 2), (1, 1, 2, 2))
    for t in range(p["trials"]):
        m, n, M, N = menu[t % 2]
        A, B = nonsingular_skew(rng, M), nonsingular_skew(rng, N)
        T = random_matrix(rng, m + M, n + N)
        mA, mB = PfaffianMemo(A), PfaffianMemo(B)
        pa, pb = mA.pf(), mB.pf()
        lhs = _pf_det_sum(mA, mB, T, m, n, M, N, lambda d, I, J: 0 if d % 2 else mA.pf(I) * mB.pf(J))
        R0, S0, R, S = _r(1, m), _r(1, n), _r(m + 1, m + M), _r(n + 1, n + N)
        Jn, JN = J_matrix(n), J_matrix(N)
        zt = lambda I, J, Jr: (submatrix(T, I, J) @ Jr).scale(Z)  # noqa: E731
        rows = [
            [zeros(m), zeros(m, M), zt(R0, S, JN), zt(R0, S0, Jn)],
            [zeros(M, m), Over(cop(A), pa), zt(R, S, JN), zt(R, S0, Jn)],
            [-zt(R0, S, JN).T, -zt(R, S, JN).T, Over(JN @ cop(B).T @ JN, pb), zeros(N, n)],
            [-zt(R0, S0, Jn).T, -zt(R, S0, Jn).T, zeros(n, N), zeros(n)],
        ]
        c = pa * pb
        check_cleared(chk, lhs, rows, c, f"(m,n,M,N)={(m, n, M, N)}, trial {t}")


def _augmented(rng, m, n, M, N):
    even = M % 2 == 0
    size = M + 2 if even else M + 1
    A, B = nonsingular_skew(rng, size), random_skew(rng, N + 1)
    T = random_matrix(rng, m + M, n + N)
    mA, mB = PfaffianMemo(A), PfaffianMemo(B)
    pa = mA.pf()
    extra = size  # the bordering index of A

    def weight(d, I, J):
        if d % 2 == 0:
            return mA.pf(I) * mB.pf(J)
        return mA.pf(I + [extra]) * mB.pf(J + [N + 1])

    lhs = _pf_det_sum(mA, mB, T, m, n, M, N, weight)

    def b(k, l):
        return B.entry(k, l)

    def two(i, j):
        return Z**2 * sum(b(k, l) * minor(T, [i, j], [n + k, n + l]) for k, l in combinations(_r(1, N), 2))

    def one(i, flip=False):
        if flip:
            return Z * sum(b(N + 1, k) * T.entry(i, n + k) for k in _r(1, N))
        return Z * sum(b(k, N + 1) * T.entry(i, n + k) for k in _r(1, N))

    Q11 = Matrix.from_function(m, m, two)

    def q12(i, j):
        if j <= M:
            return two(i, j + m)
        return one(i) if j == size else 0

    Q12 = Matrix.from_function(m, size, q12)

    def q22(i, j):
        if i <= M and j <= M:
            return two(m + i, m + j)
        if i <= M and j == size:
            return one(m + i)
        if i == size and j <= M:
            return one(m + j, flip=True)
        return 0

    Q22 = Matrix.from_function(size, size, q22)
    Jn = J_matrix(n)
    T00 = (submatrix(T, _r(1, m), _r(1, n)) @ Jn).scale(Z)
    Tbar = Matrix.from_function(size, n, lambda i, j: T.entry(m + i, j) if i <= M else 0)
    Tb = (Tbar @ Jn).scale(Z)
    rows = [
        [Q11, Q12, T00],
        [-Q12.T, Over(cop(A) + Q22.scale(pa), pa), Tb],
        [-T00.T, -Tb.T, zeros(n)],
    ]
    return lhs, pa, rows


@register(
    "msf4.cor-augmented",
    "Minor summation with fixed rows and columns, bordered A and B",
    "odd and even M: Pf(A) Pf([[Q11, Q12, z T J], [-tQ12, Â / Pf A + Q22, z T' J], [-z J tT, -z J tT', O]])",
    form="cleared by c = Pf(A)",
    trials=20,
)
def _msf4_augmented(p, rng, chk):
    menu = ((1, 1, 1, 2), (2, 0, 1, 2), (1, 1, 2, 2), (2, 0, 2, 3))
    for t in range(p["trials"]):
        m, n, M, N = menu[t % len(menu)]
        lhs, pa, rows = _augmented(rng, m, n, M, N)
        check_cleared(chk, lhs, rows, pa, f"(m,n,M,N)={(m, n, M, N)}, trial {t}")
