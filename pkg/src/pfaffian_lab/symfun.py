"""Schur functions, complete homogeneous polynomials, Vandermonde products and Sundquist factors."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Sequence, Union

from .combinat import Partition, as_partition
from .errors import IndexOutOfRange, LengthMismatch, NotDivisible
from .exactring import ONE, ZERO, Poly
from .linalg import Matrix, det

VarBlock = Sequence[Poly]
BlockLike = Union[int, Sequence[Poly], Sequence[str]]


def var_block(n: int, prefix: str = "x") -> list[Poly]:
    return [Poly.var(f"{prefix}{i}") for i in range(1, n + 1)]


def _block(x: BlockLike, prefix: str = "x") -> list[Poly]:
    if isinstance(x, int):
        return var_block(x, prefix)
    return [Poly.var(v) if isinstance(v, str) else v for v in x]


def vandermonde(x: BlockLike) -> Poly:
    """prod_{i<j} (x_i - x_j)."""
    xs = _block(x)
    out = ONE
    for i, j in combinations(range(len(xs)), 2):
        out = out * (xs[i] - xs[j])
    return out


def complete_homogeneous(k: int, x: BlockLike) -> Poly:
    """Sum of all monomials of total degree k (0 for negative k)."""
    xs = _block(x)
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if not xs:
        return ZERO
    return _h_cached(k, tuple(xs))


@lru_cache(maxsize=4096)
def _h_cached(k: int, xs: tuple) -> Poly:
    out = ZERO
    for combo in combinations_with_replacement(xs, k):
        term = ONE
        for v in combo:
            term = term * v
        out = out + term
    return out


def elementary(k: int, x: BlockLike) -> Poly:
    xs = _block(x)
    if k < 0 or k > len(xs):
        return ZERO
    out = ZERO
    for combo in combinations(xs, k):
        term = ONE
        for v in combo:
            term = term * v
        out = out + term
    return out


def bialternant(exps: Sequence[int], x: BlockLike) -> Poly:
    """det(x_i ** exps_j)."""
    xs = _block(x)
    if len(exps) != len(xs):
        raise LengthMismatch(f"{len(exps)} exponents for {len(xs)} variables")
    return det(Matrix([[xi**e for e in exps] for xi in xs]))


def schur(lam: Sequence[int], x: BlockLike) -> Poly:
    """Bialternant quotient det(x_i^(lam_j + n - j)) / Delta(x); 0 when the length exceeds n."""
    lam = as_partition(lam)
    xs = _block(x)
    n = len(xs)
    if len(lam) > n:
        return ZERO
    if not lam:
        return ONE
    return _schur_cached(tuple(lam), tuple(xs))


@lru_cache(maxsize=4096)
def _schur_cached(lam: tuple, xs: tuple) -> Poly:
    n = len(xs)
    padded = Partition(lam).padded(n)
    num = bialternant([padded[j] + n - 1 - j for j in range(n)], xs)
    try:
        return num.exact_div(vandermonde(xs))
    except NotDivisible as exc:  # the bialternant is always divisible
        raise AssertionError(f"bialternant not divisible by the Vandermonde product: {exc}") from exc


def schur_jacobi_trudi(lam: Sequence[int], x: BlockLike) -> Poly:
    """det(h_{lam_i - i + j})."""
    lam = as_partition(lam)
    xs = _block(x)
    l = len(lam)
    if l == 0:
        return ONE
    return det(Matrix.from_function(l, l, lambda i, j: complete_homogeneous(lam.part(i) - i + j, xs)))


def semistandard_tableaux(lam: Sequence[int], n: int):
    """All SSYT of shape lam with entries in 1..n, as dicts cell -> entry."""
    lam = as_partition(lam)
    cells = list(lam.cells())
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield dict(filling)
            return
        i, j = cells[k]
        lo = 1
        if j > 1:
            lo = max(lo, filling[(i, j - 1)])
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_tableaux(lam: Sequence[int], x: BlockLike) -> Poly:
    """Monomial sum over semistandard tableaux; an independent oracle."""
    xs = _block(x)
    out = ZERO
    for t in semistandard_tableaux(lam, len(xs)):
        term = ONE
        for v in t.values():
            term = term * xs[v - 1]
        out = out + term
    return out


def is_symmetric(p: Poly, x: BlockLike) -> bool:
    xs = _block(x)
    names = [str(v) for v in xs]
    for i in range(len(xs) - 1):
        swapped = p.subs({names[i]: xs[i + 1], names[i + 1]: xs[i]})
        if swapped != p:
            return False
    return True


# Sundquist family


def _check_subset(I: Sequence[int], n: int) -> None:
    for i in I:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside 1..{n}")


def delta_I(I: Sequence[int], x: BlockLike) -> Poly:
    xs = _block(x)
    _check_subset(I, len(xs))
    out = ONE
    for i, j in combinations(sorted(I), 2):
        out = out * (xs[i - 1] - xs[j - 1])
    return out


def sundquist_pair_factor(xi, xj, a, b, c):
    return a + b * (xi + xj) + c * xi * xj


def J_I(I: Sequence[int], x: BlockLike, a, b, c) -> Poly:
    xs = _block(x)
    _check_subset(I, len(xs))
    out = ONE
    for i, j in combinations(sorted(I), 2):
        out = out * sundquist_pair_factor(xs[i - 1], xs[j - 1], a, b, c)
    if not isinstance(out, Poly):
        out = Poly.const(out)
    return out


def sundquist_factors(I: Sequence[int], x: BlockLike, a, b, c) -> tuple[Poly, Poly, Callable[[BlockLike], Poly]]:
    """(Delta_I(x), J_I(x; a, b, c), y -> prod_{i in I} y_i)."""
    xs = _block(x)
    _check_subset(I, len(xs))

    def y_builder(y: BlockLike) -> Poly:
        ys = _block(y, "y")
        out = ONE
        for i in I:
            if not 1 <= i <= len(ys):
                raise IndexOutOfRange(f"index {i} outside 1..{len(ys)}")
            out = out * ys[i - 1]
        return out

    return delta_I(I, xs), J_I(I, xs, a, b, c), y_builder


def _perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        k, length = s, 0
        while not seen[k]:
            seen[k] = True
            k = p[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternant(alpha: Sequence[int], beta: Sequence[int], x: BlockLike, y: BlockLike) -> Poly:
    """Signed sum over S_{2n} of sigma applied to x_1^a1 y_1 ... x_n^an y_n x_{n+1}^b1 ... x_{2n}^bn.

    sigma moves the index of every variable, so y_i becomes y_{sigma(i)}; y needs 2n entries.
    """
    n = len(alpha)
    if len(beta) != n:
        raise LengthMismatch(f"alpha has length {n}, beta has length {len(beta)}")
    xs = _block(x)
    ys = _block(y, "y")
    if len(xs) != 2 * n:
        raise LengthMismatch(f"need {2 * n} x variables, got {len(xs)}")
    if len(ys) < 2 * n:
        raise LengthMismatch(f"need {2 * n} y variables, got {len(ys)}")
    exps = list(alpha) + list(beta)
    xpow = [[xs[i] ** e for e in sorted(set(exps))] for i in range(2 * n)]
    epos = {e: k for k, e in enumerate(sorted(set(exps)))}
    out = ZERO
    for p in permutations(range(2 * n)):
        term = ONE
        for slot in range(2 * n):
            term = term * xpow[p[slot]][epos[exps[slot]]]
            if slot < n:
                term = term * ys[p[slot]]
        out = out + term if _perm_sign(p) > 0 else out - term
    return out


def frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Partition with Frobenius coordinates (arms | legs)."""
    p = len(arms)
    if len(legs) != p:
        raise LengthMismatch("arms and legs must have equal length")
    if p == 0:
        return Partition()
    rows = max(p, legs[0] + 1) if p else 0
    parts = []
    for i in range(1, rows + 1):
        if i <= p:
            parts.append(arms[i - 1] + i)
        else:
            parts.append(sum(1 for k in range(p) if legs[k] + k + 1 >= i))
    return Partition(parts)
