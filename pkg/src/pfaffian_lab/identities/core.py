"""Pfaffian algebra: squares, covariance, expansion, copfaffians, Jacobi and Plücker relations."""

from __future__ import annotations

from itertools import combinations

from ..exactring import ONE, Poly
from ..linalg import (
    J_matrix,
    K_matrix,
    L_matrix,
    P_matrix,
    PfaffianMemo,
    S_matrix,
    SkewMatrix,
    T_matrix,
    block,
    cofactor_matrix,
    copfaffian,
    det,
    matching_crossing_sign,
    matching_permutation_sign,
    matchings,
    pfaffian,
    pfaffian_combinatorial,
    submatrix,
    zeros,
)
from ..symfun import var_block
from ._instances import cop, nonsingular_skew, random_matrix, random_skew, sign
from .registry import register

EVEN_SIZES = (2, 4, 6, 8, 10)


def _complement(I, n):
    s = set(I)
    return [i for i in range(1, n + 1) if i not in s]


@register("pf.square", "Pfaffian squared is the determinant", "Pf(A)^2 = det(A) for random integer skew A", trials=100)
def _square(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % len(EVEN_SIZES)]
        A = random_skew(rng, n)
        chk.equal(pfaffian(A) ** 2, det(A), f"size {n}, trial {t}")


@register("pf.permutation", "Permutation covariance", "Pf(a_{p(i)p(j)}) = sgn(p) Pf(A) for random p", trials=100)
def _permutation(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % 4]
        A = random_skew(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        chk.equal(pfaffian(A.permuted(perm)), sign(inv) * pfaffian(A), f"size {n}, perm {perm}")


@register("pf.congruence", "Congruence law", "Pf(B A tB) = det(B) Pf(A) for random integer B", trials=100)
def _congruence(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % 3]
        A = random_skew(rng, n)
        B = random_matrix(rng, n, n)
        chk.equal(pfaffian(SkewMatrix((B @ A @ B.T).row_list(), check=False)), det(B) * pfaffian(A), f"size {n}")


@register(
    "pf.expansion",
    "Row and column expansion",
    "delta_ij Pf(A) = sum_k a_kj gamma(k,i) = sum_k a_ik gamma(j,k) for all i, j",
    trials=100,
)
def _expansion(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % len(EVEN_SIZES)]
        A = random_skew(rng, n)
        memo = PfaffianMemo(A)
        pf = memo.pf()
        g = [[copfaffian(A, i, j, memo) for j in range(1, n + 1)] for i in range(1, n + 1)]
        for i in range(n):
            for j in range(n):
                want = pf if i == j else 0
                row = sum(A[k][j] * g[k][i] for k in range(n))
                col = sum(A[i][k] * g[j][k] for k in range(n))
                chk.equal(row, want, f"row form, size {n}, (i,j)=({i + 1},{j + 1})")
                chk.equal(col, want, f"column form, size {n}, (i,j)=({i + 1},{j + 1})")


@register("pf.delta-gamma", "Cofactors from copfaffians", "Delta(i,j) = gamma(j,i) Pf(A) for every cofactor", trials=100)
def _delta_gamma(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % len(EVEN_SIZES)]
        A = random_skew(rng, n)
        memo = PfaffianMemo(A)
        pf = memo.pf()
        D = cofactor_matrix(A)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                chk.equal(D.entry(i, j), copfaffian(A, j, i, memo) * pf, f"size {n}, (i,j)=({i},{j})")
        Ah = cop(A)
        for i in range(n):
            for j in range(n):
                # tÂ A = Pf(A) E
                chk.equal(sum(Ah[k][i] * A[k][j] for k in range(n)), pf if i == j else 0, f"tÂA, size {n}")


@register(
    "pf.memo-vs-combinatorial",
    "Memoized expansion against the matching sum",
    "memoized Pfaffian equals the signed perfect-matching sum",
    trials=100,
)
def _memo_vs_comb(p, rng, chk):
    for t in range(p["trials"]):
        n = EVEN_SIZES[t % len(EVEN_SIZES)]
        A = random_skew(rng, n)
        chk.equal(pfaffian(A), pfaffian_combinatorial(A), f"size {n}, trial {t}")
    S = SkewMatrix.symbolic(6)
    chk.equal(pfaffian(S), pfaffian_combinatorial(S), "symbolic size 6")
    a = SkewMatrix.symbolic(4)
    chk.equal(pfaffian(a), Poly.parse("a12*a34 - a13*a24 + a14*a23"), "symbolic size 4")


@register(
    "pf.matching-sign",
    "Crossing sign of a perfect matching",
    "(-1)^crossings equals the sign of the matching permutation, every matching of [2n], 2n <= 10",
    max_size=10,
)
def _matching_sign(p, rng, chk):
    total = 0
    for n in range(2, p["max_size"] + 1, 2):
        for m in matchings(range(1, n + 1)):
            chk.equal(matching_crossing_sign(m), matching_permutation_sign(m), f"matching {m}")
            total += 1
    return f"{total} matchings"


@register(
    "pf.standard-matrices",
    "Standard matrices and their copfaffians",
    "copfaffians of S_n, T_n, K_n, L_n, P_n(s,t); product formula Pf(x_i y_j); sub-Pfaffians of P_n(s,t)",
)
def _standard(p, rng, chk):
    for n in (4, 6, 8):
        m = n // 2
        Sh = cop(S_matrix(n))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                chk.equal(Sh.entry(i, j), sign(i + j - 1), f"S_{n} copfaffian ({i},{j})")
        Th = cop(T_matrix(n))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                chk.equal(Th.entry(i, j), int(j == i + 1), f"T_{n} copfaffian ({i},{j})")
        K, L = K_matrix(n), L_matrix(n)
        chk.equal(pfaffian(K), 1, f"Pf K_{n}")
        chk.equal(pfaffian(L), sign(m * (m - 1) // 2), f"Pf L_{n}")
        chk.true(cop(K) == K, f"K_{n} is its own copfaffian matrix")
        chk.true(cop(L) == L.scale(sign(m * (m - 1) // 2)), f"copfaffian of L_{n}")
    s, t = Poly.var("s"), Poly.var("t")
    for n in (4, 6):
        P = P_matrix(n)
        Ph = cop(P)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                want = sign(j - i - 1) * s ** (j - i - 1) * t ** ((i - 1) % 2 + j % 2)
                chk.equal(Ph.entry(i, j), want, f"P_{n}(s,t) copfaffian ({i},{j})")
        memo = PfaffianMemo(P)
        for r in range(1, n // 2 + 1):
            for I in combinations(range(1, n + 1), 2 * r):
                s_exp = sum((ik - k) % 2 for k, ik in enumerate(I, 1))
                t_exp = sum(sign(k) * ik for k, ik in enumerate(I, 1)) - r
                chk.equal(memo.pf(I), s**s_exp * t**t_exp, f"Pf P_{n}(s,t) on {I}")
    for n in (2, 4, 6):
        x, y = var_block(n, "x"), var_block(n, "y")
        A = SkewMatrix.from_upper(n, lambda i, j: x[i - 1] * y[j - 1])
        want = ONE
        for i in range(1, n // 2 + 1):
            want = want * x[2 * i - 2] * y[2 * i - 1]
        chk.equal(pfaffian(A), want, f"Pf(x_i y_j), n={n}")


# Jacobi


@register(
    "jacobi.lewis-carroll",
    "Jacobi's complementary minor formula",
    "det of the (I,J) minor of the cofactor matrix = (-1)^(|I|+|J|) det(A)^(r-1) det A^{J^c}_{I^c}, all I, J with r <= 3",
    trials=1,
    max_r=3,
)
def _lewis_carroll(p, rng, chk):
    for _ in range(p["trials"]):
        for n in (5, 6):
            A = random_matrix(rng, n, n)
            D = cofactor_matrix(A)
            d = det(A)
            for r in range(1, p["max_r"] + 1):
                for I in combinations(range(1, n + 1), r):
                    Ic = _complement(I, n)
                    for J in combinations(range(1, n + 1), r):
                        Jc = _complement(J, n)
                        rhs = sign(sum(I) + sum(J)) * d ** (r - 1) * det(submatrix(A, Jc, Ic))
                        chk.equal(det(submatrix(D, I, J)), rhs, f"n={n}, I={I}, J={J}")


@register("jacobi.dodgson", "Desnanot-Jacobi (Dodgson) condensation", "I = J = {1, n} case of the Jacobi formula", trials=20)
def _dodgson(p, rng, chk):
    for t in range(p["trials"]):
        n = 3 + t % 4
        M = random_matrix(rng, n, n)
        mid = list(range(2, n))
        lo, hi = list(range(1, n)), list(range(2, n + 1))
        lhs = det(M) * det(submatrix(M, mid, mid))
        rhs = det(submatrix(M, lo, lo)) * det(submatrix(M, hi, hi)) - det(submatrix(M, lo, hi)) * det(submatrix(M, hi, lo))
        chk.equal(lhs, rhs, f"n={n}")


@register(
    "jacobi.pfaffian",
    "Pfaffian Jacobi formula",
    "Pf(Â^I_I) = (-1)^(|I|-r) Pf(A)^(r-1) Pf(A^{I^c}_{I^c}) for every even I; checked multiplied by Pf(A)",
    trials=1,
)
def _jacobi_pf(p, rng, chk):
    for _ in range(p["trials"]):
        for n in (4, 6):
            A = random_skew(rng, n)
            memo = PfaffianMemo(A)
            pf = memo.pf()
            Ah = cop(A)
            hmemo = PfaffianMemo(Ah)
            for k in range(0, n + 1, 2):
                r = k // 2
                for I in combinations(range(1, n + 1), k):
                    lhs = hmemo.pf(I) * pf
                    rhs = sign(sum(I) - r) * pf**r * memo.pf(_complement(I, n))
                    chk.equal(lhs, rhs, f"n={n}, I={I}")
    for n in (6, 8):
        A = random_skew(rng, n)
        memo = PfaffianMemo(A)
        rest = list(range(5, n + 1))

        def pf(*idx):
            return memo.pf(list(idx) + rest)

        lhs = memo.pf() * memo.pf(rest)
        rhs = pf(3, 4) * pf(1, 2) - pf(2, 4) * pf(1, 3) + pf(2, 3) * pf(1, 4)
        chk.equal(lhs, rhs, f"Pfaffian Dodgson, n={n}")


@register("jacobi.hat-hat", "Double copfaffian", "copfaffian of Â equals Pf(A)^(m-2) A for size 2m", trials=10)
def _hat_hat(p, rng, chk):
    for t in range(p["trials"]):
        n = (4, 6)[t % 2]
        m = n // 2
        A = random_skew(rng, n)
        pf = pfaffian(A)
        HH = cop(cop(A))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                chk.equal(HH.entry(i, j), pf ** (m - 2) * A.entry(i, j), f"n={n}, ({i},{j})")
    A = SkewMatrix.symbolic(4)
    chk.true(cop(cop(A)) == A, "symbolic size 4")


# Plücker


@register(
    "plucker",
    "Pfaffian Plücker relations",
    "sum_j (-1)^(j-1) Pf(A_{I-i_j}) Pf(A_{i_j+I^c}) = sum_j (-1)^(j-1) Pf(A_{I+k_j}) Pf(A_{I^c-k_j}), m, n odd",
    trials=50,
)
def _plucker(p, rng, chk):
    shapes = ((1, 3), (3, 3), (3, 5))
    for t in range(p["trials"]):
        m, n = shapes[t % len(shapes)]
        N = m + n
        A = random_skew(rng, N)
        memo = PfaffianMemo(A)
        I = sorted(rng.sample(range(1, N + 1), m))
        Ic = _complement(I, N)
        # i_j leads and k_j trails: these minors are taken in the written order, not sorted
        lhs = sum(sign(j) * memo.pf([x for x in I if x != ij]) * _pf_seq(A, [ij] + Ic) for j, ij in enumerate(I))
        rhs = sum(sign(j) * _pf_seq(A, I + [kj]) * memo.pf([x for x in Ic if x != kj]) for j, kj in enumerate(Ic))
        chk.equal(lhs, rhs, f"(m,n)=({m},{n}), I={I}")


def _pf_seq(A, seq):
    return pfaffian(submatrix(A, seq, seq))


@register(
    "plucker.basic-identity",
    "Basic identity",
    "Pf(A(1..2l)) Pf(A(I,1..2l)) = sum_{j>=2} (-1)^j Pf(A(1..2l,i_1,i_j)) Pf(A(I-i_1-i_j,1..2l))",
    trials=50,
    N=8,
    k=2,
    l=1,
)
def _basic_identity(p, rng, chk):
    N, k, l = p["N"], p["k"], p["l"]
    head = list(range(1, 2 * l + 1))
    for t in range(p["trials"]):
        A = random_skew(rng, N)
        I = sorted(rng.sample(range(2 * l + 1, N + 1), 2 * k))
        lhs = _pf_seq(A, head) * _pf_seq(A, I + head)
        rhs = 0
        for j in range(2, 2 * k + 1):
            rest = [I[v - 1] for v in range(2, 2 * k + 1) if v != j]
            rhs += sign(j) * _pf_seq(A, head + [I[0], I[j - 1]]) * _pf_seq(A, rest + head)
        chk.equal(lhs, rhs, f"I={I}")


@register(
    "pf.lem3",
    "Bordered Pfaffian lemma",
    "Pf(B)^-1 Pf of the bordered T B tT matrix equals both block Pfaffians with Â / Pf(B); cleared by Pf(B)",
    trials=20,
)
def _lem3(p, rng, chk):
    shapes = ((2, 2, 2, 4), (1, 1, 2, 2))
    for t in range(p["trials"]):
        m, n, M, N = shapes[t % 2]
        A = random_skew(rng, M)
        B = nonsingular_skew(rng, N)
        T11, T12 = random_matrix(rng, m, n), random_matrix(rng, m, N)
        T21, T22 = random_matrix(rng, M, n), random_matrix(rng, M, N)
        c = pfaffian(B)
        Bh = cop(B)
        Jn, JN, JM, Jm = J_matrix(n), J_matrix(N), J_matrix(M), J_matrix(m)
        M1 = block(
            [
                [T12 @ B @ T12.T, T12 @ B @ T22.T, T11 @ Jn],
                [T22 @ B @ T12.T, A + T22 @ B @ T22.T, T21 @ Jn],
                [-(Jn @ T11.T), -(Jn @ T21.T), zeros(n)],
            ]
        )
        size2 = m + M + N + n
        # every block except the copfaffian block is multiplied by c = Pf(B)
        M2 = block(
            [
                [zeros(m), zeros(m, M), (T12 @ JN).scale(c), (T11 @ Jn).scale(c)],
                [zeros(M, m), A.scale(c), (T22 @ JN).scale(c), (T21 @ Jn).scale(c)],
                [(JN @ T12.T).scale(-c), (JN @ T22.T).scale(-c), JN @ Bh.T @ JN, zeros(N, n)],
                [(Jn @ T11.T).scale(-c), (Jn @ T21.T).scale(-c), zeros(n, N), zeros(n)],
            ]
        )
        M3 = block(
            [
                [(JM @ A.T @ JM).scale(c), zeros(M, m), (JM @ T21).scale(c), (JM @ T22).scale(c)],
                [zeros(m, M), zeros(m), (Jm @ T11).scale(c), (Jm @ T12).scale(c)],
                [(T21.T @ JM).scale(-c), (T11.T @ Jm).scale(-c), zeros(n), zeros(n, N)],
                [(T22.T @ JM).scale(-c), (T12.T @ Jm).scale(-c), zeros(N, n), Bh],
            ]
        )
        lhs = pfaffian(M1) * c ** (size2 // 2 - 1)
        chk.equal(lhs, pfaffian(M2), f"(m,n,M,N)={(m, n, M, N)}, second form")
        chk.equal(lhs, pfaffian(M3), f"(m,n,M,N)={(m, n, M, N)}, third form")
