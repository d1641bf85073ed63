"""Non-intersecting lattice paths: LGV and the path versions of the minor summation formulas."""

from __future__ import annotations

from itertools import combinations

from ..exactring import Poly
from ..lattice import grid_dag, is_compatible, lgv_determinant, nonintersecting_gf, path_gf, path_matrix, random_dag, signed_gf
from ..linalg import J_matrix, Matrix, PfaffianMemo, det, pfaffian, zeros
from ..symfun import complete_homogeneous, var_block
from ._instances import cop, nonsingular_skew, random_skew
from .registry import register
from .summation import Z, Over, check_cleared, cols


def _grid(width: int, height: int):
    return grid_dag((0, width), (0, height), lambda i, j: Poly.var(f"x{j + 1}"))


def _bottom(D, xs):
    return [D.vid((x, 0)) for x in xs]


def _top(D, xs, height):
    return [D.vid((x, height)) for x in xs]


@register(
    "lgv",
    "Lindström-Gessel-Viennot lemma",
    "sum_p sgn(p) F0(u^p, v) = det[h(u_i, v_j)] on random weighted DAGs",
    trials=50,
)
def _lgv(p, rng, chk):
    for t in range(p["trials"]):
        n = rng.randint(4, 8)
        D = random_dag(rng, n)
        m = rng.randint(1, min(3, n // 2))
        us = rng.sample(range(n), m)
        vs = rng.sample(range(n), m)
        chk.equal(signed_gf(D, us, vs), lgv_determinant(D, us, vs), f"trial {t}, {n} vertices, u={us}, v={vs}")
    D = _grid(3, 3)
    us, vs = _bottom(D, (0, 1)), _top(D, (2, 3), 3)
    chk.true(is_compatible(D, us, vs), "grid compatibility")
    chk.equal(nonintersecting_gf(D, us, vs), lgv_determinant(D, us, vs), "compatible grid, no sign")


@register(
    "lmsf",
    "Path minor summation formula",
    "sum_I Pf(A^I_I) F0(u, I) = Pf(A) Pf([[O, H(u,S) J], [-J tH(u,S), J tÂ J / Pf A]]) for u compatible with S",
    form="cleared by c = Pf(A)",
    trials=20,
)
def _lmsf(p, rng, chk):
    m, N, height = 2, 4, 2
    D = _grid(4, height)
    us, S = _bottom(D, (0, 1)), _top(D, (1, 2, 3, 4), height)
    chk.true(is_compatible(D, us, S), "u compatible with S")
    H = path_matrix(D, us, S)
    JN = J_matrix(N)
    for t in range(p["trials"]):
        A = nonsingular_skew(rng, N)
        memo = PfaffianMemo(A)
        c = memo.pf()
        lhs = sum(memo.pf(I) * nonintersecting_gf(D, us, [S[i - 1] for i in I]) for I in combinations(range(1, N + 1), m))
        rows = [[zeros(m), H @ JN], [-(JN @ H.T), Over(JN @ cop(A).T @ JN, c)]]
        check_cleared(chk, lhs, rows, c, f"trial {t}")


@register(
    "lmsf2",
    "Path minor summation with fixed sinks",
    "sum_I Pf(A^I_I) F0(u, S0+I) = Pf(A) Pf(3x3 block with H(u;S), H(u;S0) and J tÂ J / Pf A); S0 precedes S",
    form="cleared by c = Pf(A)",
    trials=20,
)
def _lmsf2(p, rng, chk):
    menu = ((3, 1, 2), (4, 2, 4))
    for t in range(p["trials"]):
        m, n, N = menu[t % 2]
        height = 2
        D = _grid(n + N + 1, height)
        us = _bottom(D, range(m))
        S0 = _top(D, range(1, n + 1), height)
        S = _top(D, range(n + 1, n + N + 1), height)
        if t < 2:
            chk.true(is_compatible(D, us, S0 + S[: m - n]), f"(m,n,N)=({m},{n},{N}) compatibility")
        A = nonsingular_skew(rng, N)
        memo = PfaffianMemo(A)
        c = memo.pf()
        lhs = sum(
            memo.pf(I) * nonintersecting_gf(D, us, S0 + [S[i - 1] for i in I])
            for I in combinations(range(1, N + 1), m - n)
        )
        HS, H0 = path_matrix(D, us, S), path_matrix(D, us, S0)
        JN, Jn = J_matrix(N), J_matrix(n)
        rows = [
            [zeros(m), HS @ JN, H0 @ Jn],
            [-(JN @ HS.T), Over(JN @ cop(A).T @ JN, c), zeros(N, n)],
            [-(Jn @ H0.T), zeros(n, N), zeros(n)],
        ]
        check_cleared(chk, lhs, rows, c, f"(m,n,N)=({m},{n},{N}), trial {t}")


def _rows_cols_sum(D, R, S, A, B, m=0, n=0, R0=(), S0=()):
    """sum over r of z^r sum_{I,J} Pf(A^I_I) Pf(B^J_J) F0(R0+I, S0+J), r - max(m,n) even."""
    mA, mB = PfaffianMemo(A), PfaffianMemo(B)
    M, N = len(R), len(S)
    lo, hi = max(m, n), min(m + M, n + N)
    out = Poly.const(0)
    for r in range(lo, hi + 1, 2):
        acc = Poly.const(0)
        for I in combinations(range(1, M + 1), r - m):
            a = mA.pf(I)
            if not a:
                continue
            for J in combinations(range(1, N + 1), r - n):
                b = mB.pf(J)
                if b:
                    src = list(R0) + [R[i - 1] for i in I]
                    dst = list(S0) + [S[j - 1] for j in J]
                    acc = acc + nonintersecting_gf(D, src, dst) * (a * b)
        out = out + Z**r * acc
    return out


def _row_col_rows(D, R, S, A, B, c_a, c_b):
    H = path_matrix(D, R, S)
    JN = J_matrix(len(S))
    return [
        [Over(cop(A), c_a), (H @ JN).scale(Z)],
        [-(JN @ H.T).scale(Z), Over(JN @ cop(B).T @ JN, c_b)],
    ]


@register(
    "lmsf3",
    "Path minor summation over sources and sinks",
    "sum_r z^r sum_{I,J} Pf(A^I_I) Pf(B^J_J) F0(I, J) = Pf(A) Pf(B) Pf([[Â / Pf A, z H J], [-z J tH, J tB̂ J / Pf B]])",
    form="cleared by c = Pf(A) Pf(B)",
    trials=20,
)
def _lmsf3(p, rng, chk):
    menu = ((2, 2), (2, 4))
    for t in range(p["trials"]):
        M, N = menu[t % 2]
        D = _grid(N, 2)
        R, S = _bottom(D, range(M)), _top(D, range(1, N + 1), 2)
        if t < 2:
            chk.true(is_compatible(D, R, S), f"(M,N)=({M},{N}) compatibility")
        A, B = nonsingular_skew(rng, M), nonsingular_skew(rng, N)
        ca, cb = pfaffian(A), pfaffian(B)
        lhs = _rows_cols_sum(D, R, S, A, B)
        check_cleared(chk, lhs, _row_col_rows(D, R, S, A, B, ca, cb), ca * cb, f"(M,N)=({M},{N}), trial {t}")


@register(
    "lmsf4",
    "Path minor summation with fixed sources and sinks",
    "sum_r z^r sum_{I,J} Pf(A^I_I) Pf(B^J_J) F0(R0+I, S0+J) = Pf(A) Pf(B) Pf(4x4 block with H in place of T)",
    form="cleared by c = Pf(A) Pf(B)",
    trials=20,
)
def _lmsf4(p, rng, chk):
    menu = ((0, 0, 2, 2), (2, 0, 2, 2), (2, 0, 2, 4))
    for t in range(p["trials"]):
        m, n, M, N = menu[t % len(menu)]
        height = 2
        D = _grid(max(m + M, n + N) + 1, height)
        R0, R = _bottom(D, range(m)), _bottom(D, range(m, m + M))
        S0, S = _top(D, range(1, n + 1), height), _top(D, range(n + 1, n + N + 1), height)
        if t < len(menu):
            chk.true(is_compatible(D, R0 + R, S0 + S), f"(m,n,M,N)={(m, n, M, N)} compatibility")
        A, B = nonsingular_skew(rng, M), nonsingular_skew(rng, N)
        ca, cb = pfaffian(A), pfaffian(B)
        lhs = _rows_cols_sum(D, R, S, A, B, m, n, R0, S0)
        case = f"(m,n,M,N)={(m, n, M, N)}, trial {t}"
        if m == n == 0:
            rows = _row_col_rows(D, R, S, A, B, ca, cb)
            check_cleared(chk, lhs, rows, ca * cb, case + ", reduced form")
        JN, Jn = J_matrix(N), J_matrix(n)

        def zh(src, dst, J):
            return (path_matrix(D, src, dst) @ J).scale(Z)

        rows = [
            [zeros(m), zeros(m, M), zh(R0, S, JN), zh(R0, S0, Jn)],
            [zeros(M, m), Over(cop(A), ca), zh(R, S, JN), zh(R, S0, Jn)],
            [-zh(R0, S, JN).T, -zh(R, S, JN).T, Over(JN @ cop(B).T @ JN, cb), zeros(N, n)],
            [-zh(R0, S0, Jn).T, -zh(R, S0, Jn).T, zeros(n, N), zeros(n)],
        ]
        check_cleared(chk, lhs, rows, ca * cb, case)


@register(
    "lattice.msf-grid",
    "Minor summation from the lattice-path version",
    "on the grid with u_i = (N i, 1), v_j = (j + N m, r): h(u_i, v_j) = h_{j+N(m-i)}(x_1..x_r) and sum_I Pf(A_I) F0(u, I) = Pf(T A tT)",
    height=6,
    trials=3,
)
def _msf_grid(p, rng, chk):
    r = p["height"]
    x = var_block(r, "x")
    for t in range(p["trials"]):
        m, N = 2, (2, 4)[t % 2]
        D = grid_dag((N, N + N * m + N), (1, r))
        us = [D.vid((N * i, 1)) for i in range(1, m + 1)]
        vs = [D.vid((j + N * m, r)) for j in range(1, N + 1)]
        T = Matrix.from_function(m, N, lambda i, k: complete_homogeneous(k + N * (m - i), x))
        for i in range(1, m + 1):
            for j in range(1, N + 1):
                chk.equal(path_gf(D, us[i - 1], vs[j - 1]), T.entry(i, j), f"h(u_{i}, v_{j}), N={N}")
        A = random_skew(rng, N)
        memo = PfaffianMemo(A)
        if N == 2:
            # small enough to enumerate the path families directly
            lhs = sum(memo.pf(I) * nonintersecting_gf(D, us, [vs[i - 1] for i in I]) for I in combinations(range(1, N + 1), m))
        else:
            lhs = sum(memo.pf(I) * lgv_determinant(D, us, [vs[i - 1] for i in I]) for I in combinations(range(1, N + 1), m))
        chk.equal(lhs, pfaffian(T @ A @ T.T), f"N={N}, trial {t}")
        chk.equal(lhs, sum(memo.pf(I) * det(cols(T, I)) for I in combinations(range(1, N + 1), m)), f"N={N}, minor sum")
