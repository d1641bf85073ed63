"""A two-variable Pfaffian of Sundquist type, its y_I expansion and the derived corollaries."""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from ..exactring import ONE, ZERO, Poly, RationalFunction
from ..linalg import Matrix, SkewMatrix, det, pfaffian
from ..symfun import J_I, alternant, delta_I, frobenius, sundquist_factors, sundquist_pair_factor, var_block
from .registry import register
from .report import Skip

A_, B_, C_ = Poly.var("a"), Poly.var("b"), Poly.var("c")


def _pairs(m: int):
    return list(combinations(range(1, m + 1), 2))


def _complement(I, m: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, m + 1) if i not in I)


def _all_factors(x, a, b, c) -> Poly:
    out = ONE
    for i, j in _pairs(len(x)):
        out = out * sundquist_pair_factor(x[i - 1], x[j - 1], a, b, c)
    return out


def pfaffian_side(x, y, a, b, c) -> RationalFunction:
    """Pf[(y_i - y_j) / (a + b(x_i + x_j) + c x_i x_j)] times the product of all pair factors."""
    M = SkewMatrix.from_upper(
        len(x),
        lambda i, j: RationalFunction(y[i - 1] - y[j - 1], sundquist_pair_factor(x[i - 1], x[j - 1], a, b, c)),
    )
    return pfaffian(M) * _all_factors(x, a, b, c)


def _subset_term(I, x, a, b, c) -> Poly:
    Ib = _complement(I, len(x))
    dI, jI, _ = sundquist_factors(I, x, a, b, c)
    return dI * delta_I(Ib, x) * jI * J_I(Ib, x, a, b, c)


def _sign(I, n: int) -> int:
    return -1 if (sum(I) - comb(n + 1, 2)) % 2 else 1


def _y_of(I, y) -> Poly:
    out = ONE
    for i in I:
        out = out * y[i - 1]
    return out


def subset_side(n: int, x, y, a, b, c) -> Poly:
    """(ac - b^2)^C(n,2) sum_I (-1)^(|I| - C(n+1,2)) y_I Delta_I Delta_Ibar J_I J_Ibar."""
    out = ZERO
    for I in combinations(range(1, 2 * n + 1), n):
        out = out + _sign(I, n) * _y_of(I, y) * _subset_term(I, x, a, b, c)
    return (a * c - b * b) ** comb(n, 2) * out


def paired_side(n: int, x, y, a, b, c) -> Poly:
    """The same sum folded over the subsets containing 1: y_I + (-1)^n y_Ibar."""
    out = ZERO
    for I in combinations(range(1, 2 * n + 1), n):
        if I[0] != 1:
            continue
        Ib = _complement(I, 2 * n)
        ys = _y_of(I, y) + (-1) ** n * _y_of(Ib, y)
        out = out + _sign(I, n) * ys * _subset_term(I, x, a, b, c)
    return (a * c - b * b) ** comb(n, 2) * out


def _t_matrix(I, x) -> SkewMatrix:
    """(T_I)_ij for i < j: 1/(1 + x_i x_j) from I to Ibar, -1/(1 + x_i x_j) from Ibar to I, else 0."""

    def entry(i, j):
        f = ONE + x[i - 1] * x[j - 1]
        if i in I and j not in I:
            return RationalFunction(ONE, f)
        if i not in I and j in I:
            return RationalFunction(-ONE, f)
        return 0

    return SkewMatrix.from_upper(len(x), entry)


def _check_theorem(chk, n, x, y, a, b, c, label):
    lhs = pfaffian_side(x, y, a, b, c)
    chk.equal(lhs, subset_side(n, x, y, a, b, c), f"{label}, subset sum")
    chk.equal(lhs, paired_side(n, x, y, a, b, c), f"{label}, paired sum")
    return lhs


@register(
    "sundquist.variant",
    "Two-variable Pfaffian of Sundquist type",
    "Pf[(y_i - y_j)/(a + b(x_i + x_j) + c x_i x_j)] prod_{i<j}(a + b(x_i + x_j) + c x_i x_j) = (ac - b^2)^C(n,2) sum_I (-1)^(|I| - C(n+1,2)) y_I Delta_I Delta_Ibar J_I J_Ibar",
    form="rational functions compared by cross-multiplication; symbolic a, b, c, x, y",
    n=2,
)
def _sundquist(p, rng, chk):
    n = p["n"]
    if n < 1 or n > 2:
        raise Skip("symbolic runs need 1 <= n <= 2")
    m = 2 * n
    x, y = var_block(m, "x"), var_block(m, "y")
    ynames = [str(v) for v in y]

    _check_theorem(chk, n, x, y, A_, B_, C_, f"n={n}, symbolic a, b, c")
    if n != 1:
        x1, y1 = var_block(2, "x"), var_block(2, "y")
        _check_theorem(chk, 1, x1, y1, A_, B_, C_, "n=1, symbolic a, b, c")
    special = _check_theorem(chk, n, x, y, ONE, ZERO, ONE, f"n={n}, a=c=1, b=0")

    # the y_I coefficient is Pf(T_I), which factors through a Cauchy determinant
    cleared = special.to_poly()
    for I in combinations(range(1, m + 1), n):
        Ib = _complement(I, m)
        case = f"I={I}"
        coeff = cleared.coefficient_of({v: int(k + 1 in I) for k, v in enumerate(ynames)}, ynames)
        cross = [ONE + x[i - 1] * x[j - 1] for i in I for j in Ib]
        T = _t_matrix(I, x)
        chk.equal(RationalFunction(coeff, _all_factors(x, ONE, ZERO, ONE)), pfaffian(T), case + ", y_I coefficient")
        want = RationalFunction(_sign(I, n) * delta_I(I, x) * delta_I(Ib, x), cross)
        chk.equal(pfaffian(T), want, case + ", Pf(T_I) product form")
        X = Matrix.from_function(n, n, lambda k, l: RationalFunction(ONE, ONE + x[I[k - 1] - 1] * x[Ib[l - 1] - 1]))
        block = SkewMatrix.from_upper(
            m, lambda i, j: X.entry(i, j - n) if i <= n < j else 0
        )
        chk.equal(pfaffian(block), (-1) ** comb(n, 2) * det(X), case + ", block Pfaffian as a determinant")

    # ac = b^2 kills the Pfaffian once the factor (ac - b^2)^C(n,2) is nontrivial
    s, t = Poly.var("s"), Poly.var("t")
    for a, b, c, label in ((4, 2, 1, "a=4, b=2, c=1"), (t * t, s * t, s * s, "a=t^2, b=st, c=s^2")) if n >= 2 else ():
        M = SkewMatrix.from_upper(
            m,
            lambda i, j: RationalFunction(y[i - 1] - y[j - 1], sundquist_pair_factor(x[i - 1], x[j - 1], a, b, c)),
        )
        chk.equal(pfaffian(M), 0, f"ac = b^2, {label}")

    # y_i = 1, even n: the folded sum vanishes
    if n % 2 == 0:
        for a, b, c, label in ((A_, B_, C_, "symbolic a, b, c"), (ONE, ZERO, ONE, "a=c=1, b=0")):
            total = ZERO
            for I in combinations(range(1, m + 1), n):
                if I[0] == 1:
                    total = total + (-1) ** sum(I) * _subset_term(I, x, a, b, c)
            chk.equal(total, 0, f"vanishing corollary, n={n}, {label}")

    if n == 2:
        _worked_examples(chk, x, y, special)
        _alternant_form(chk, n, x, y, special)


def _worked_examples(chk, x, y, special):
    x1, x2, x3, x4 = x
    y1, y2, y3, y4 = y
    three = (
        (y1 * y2 + y3 * y4) * (x1 - x2) * (x3 - x4) * (ONE + x1 * x2) * (ONE + x3 * x4)
        - (y1 * y3 + y2 * y4) * (x1 - x3) * (x2 - x4) * (ONE + x1 * x3) * (ONE + x2 * x4)
        + (y1 * y4 + y2 * y3) * (x1 - x4) * (x2 - x3) * (ONE + x1 * x4) * (ONE + x2 * x3)
    )
    chk.equal(special, three, "n=2 three-term expansion")
    chk.equal(three.subs({str(v): 1 for v in y}), 0, "n=2 vanishing example")


def _alternant_form(chk, n, x, y, special):
    # (alpha | alpha + 1) with alpha_1 < n - 1
    shapes = [()]
    for p in range(1, n):
        for arms in combinations(range(n - 2, -1, -1), p):
            shapes.append(arms)
    lams = [frobenius(list(arms), [a + 1 for a in arms]) for arms in shapes]
    lams = [lam for lam in lams if lam.length <= n]
    total = ZERO
    for lam, mu in product(lams, lams):
        al = [part + n - 1 - i for i, part in enumerate(lam.padded(n))]
        be = [part + n - 1 - i for i, part in enumerate(mu.padded(n))]
        total = total + alternant(al, be, x, y)
    chk.equal(special, total, f"n={n} alternant sum over (alpha|alpha+1) pairs")
