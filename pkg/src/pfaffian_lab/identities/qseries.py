"""q-series identities around the Schur-Littlewood sum: kernels, hook products, Pfaffian evaluations."""

from __future__ import annotations

from itertools import combinations

from ..combinat import enumerate_partitions, n_stat, partitions_in_box
from ..exactring import INF, ONE, ZERO, Poly, RationalFunction, geometric, pochhammer, pochhammer_inverse
from ..linalg import Matrix, SkewMatrix, det, pfaffian
from ..symfun import schur, vandermonde, var_block
from ._series import Q, ell, hook_product, infinite_ratio, inverse, poch_ratio, policy
from .registry import register
from .report import Skip

A_ = Poly.var("a")
X, Y = Poly.var("x"), Poly.var("y")


@register(
    "qbinomial",
    "q-binomial formula",
    "sum_k (a;q)_k / (q;q)_k x^k = (ax;q)_inf / (x;q)_inf, symbolic a",
    form="truncated in q and x; (q;q)_k inverted as a q-series",
    q_cap=8,
    x_cap=4,
)
def _qbinomial(p, rng, chk):
    pol = policy(p["q_cap"], {p["x_cap"]: [X]})
    lhs = ZERO
    for k in range(p["x_cap"] + 1):
        lhs = lhs + poch_ratio(A_, Q, k, pol).mul(X**k, pol)
    chk.equal(lhs, infinite_ratio(A_ * X, X, pol), "symbolic a")
    chk.equal(lhs.subs({"a": 0}), pochhammer_inverse(X, INF, pol), "a = 0")


def _kernel_one(k: int, l: int, pol) -> Poly:
    """(q^l - q^k)/(q^k + q^l) as a series: -(1 - q^d)/(1 + q^d) for d = l - k."""
    d = abs(l - k)
    val = (ONE - Q**d).mul(inverse(ONE + Q**d, pol), pol)
    return -val if l >= k else val


def _two_variable_lhs(p):
    cap = p["x_cap"]
    pol = policy(p["q_cap"], {cap: [X, Y]})
    c = [poch_ratio(-Q, Q, k, pol) for k in range(cap + 1)]
    out = ZERO
    for k in range(cap + 1):
        for l in range(cap + 1 - k):
            coeff = c[k].mul(c[l], pol).mul(_kernel_one(k, l, pol), pol)
            out = out + coeff * X**k * Y**l
    return out, pol


@register(
    "kernel.two-variable",
    "Two-variable q-binomial kernel",
    "sum_{k,l} (-q)_k (-q)_l / ((q)_k (q)_l) (q^l - q^k)/(q^k + q^l) x^k y^l = (-qx)/(x) (-qy)/(y) (x - y)/(1 - xy), infinite products",
    form="truncated in q and in the total degree of x, y",
    q_cap=8,
    x_cap=4,
)
def _two_variable(p, rng, chk):
    lhs, pol = _two_variable_lhs(p)
    fx, fy = infinite_ratio(-Q * X, X, pol), infinite_ratio(-Q * Y, Y, pol)
    rhs = fx.mul(fy, pol).mul((X - Y).mul(geometric(X * Y, pol), pol), pol)
    chk.equal(lhs, rhs, "full comparison")
    chk.equal(lhs.subs({"y": 0}), (X * fx).truncate(pol), "F(x, 0) = x (-qx)/(x)")
    chk.equal(lhs.subs({"x": 0}), (-Y * fy).truncate(pol), "F(0, y) = -y (-qy)/(y)")
    swapped = lhs.subs({"x": Y, "y": X})
    chk.equal(swapped, -lhs, "antisymmetry")


def _register_hook_ids():
    @register(
        "hook.macdonald",
        "Hook product through shifted parts",
        "prod_c (1 - q^h(c)) prod_{i<j} (1 - q^(l_i - l_j)) = prod_i (q;q)_{l_i}, l_i = lam_i + n - i; also with 1 + q^h",
        form="cross-multiplied polynomial identity",
        max_size=8,
    )
    def _macdonald(p, rng, chk):
        count = 0
        for lam in enumerate_partitions(p["max_size"]):
            base = max(len(lam), 1)
            for n in (base, base + 1):
                ls = ell(lam, n)
                for sign in (-1, 1):
                    lhs = hook_product(lam, sign)
                    for i, j in combinations(range(n), 2):
                        lhs = lhs * (ONE + sign * Q ** (ls[i] - ls[j]))
                    rhs = ONE
                    for l in ls:
                        rhs = rhs * pochhammer(-sign * Q, l)
                    chk.equal(lhs, rhs, f"lam={lam}, n={n}, sign {sign:+d}")
                    count += 1
        return f"{count} partition cases"

    @register(
        "hook.key-id",
        "Hook ratio through shifted parts",
        "prod_c (1 + q^h)/(1 - q^h) = prod_i (-q)_{l_i}/(q)_{l_i} prod_{i<j} (1 - q^(l_i - l_j))/(1 + q^(l_i - l_j))",
        form="cross-multiplied polynomial identity",
        max_size=8,
    )
    def _key(p, rng, chk):
        count = 0
        for lam in enumerate_partitions(p["max_size"]):
            base = max(len(lam), 1)
            for n in (base, base + 1):
                ls = ell(lam, n)
                plus, minus = hook_product(lam, 1), hook_product(lam, -1)
                lhs, rhs = plus, minus
                for l in ls:
                    lhs = lhs * pochhammer(Q, l)
                    rhs = rhs * pochhammer(-Q, l)
                for i, j in combinations(range(n), 2):
                    d = ls[i] - ls[j]
                    lhs = lhs * (ONE + Q**d)
                    rhs = rhs * (ONE - Q**d)
                chk.equal(lhs, rhs, f"lam={lam}, n={n}")
                count += 1
        return f"{count} partition cases"


_register_hook_ids()


def _littlewood_sides(n: int, q_cap: int, x_cap: int):
    x = var_block(n)
    pol = policy(q_cap, {x_cap: x})
    lhs = ZERO
    for lam in enumerate_partitions(x_cap, n):
        coeff = hook_product(lam, 1).mul(inverse(hook_product(lam, -1), pol), pol)
        lhs = lhs + coeff.mul(schur(lam, x), pol)
    rhs = ONE
    for xi in x:
        rhs = rhs.mul(infinite_ratio(-Q * xi, xi, pol), pol)
    for i, j in combinations(range(n), 2):
        rhs = rhs.mul(geometric(x[i] * x[j], pol), pol)
    return lhs, rhs


@register(
    "kawanaka.littlewood",
    "Kawanaka q-Littlewood identity",
    "sum_lam prod_c (1 + q^h)/(1 - q^h) s_lam(x) = prod_i (-q x_i;q)_inf/(x_i;q)_inf prod_{i<j} 1/(1 - x_i x_j)",
    form="truncated in q (q_cap) and total x-degree (x_cap); hook denominators inverted as q-series",
    n=2,
    q_cap=8,
    x_cap=4,
)
def _kawanaka(p, rng, chk):
    n = p["n"]
    if n < 1:
        raise Skip("needs n >= 1")
    lhs, rhs = _littlewood_sides(n, p["q_cap"], p["x_cap"])
    chk.equal(lhs.constant_term, 1, "empty partition term")
    chk.equal(lhs, rhs, f"n={n}")
    if n == 2:
        lhs1, rhs1 = _littlewood_sides(1, 6, 3)
        chk.equal(lhs1, rhs1, "n=1 single-row case")


def _ours_sides(n: int, q_cap: int, x_cap: int):
    x = var_block(n)
    pol = policy(q_cap, {x_cap: x})
    lhs = ZERO
    for lam in enumerate_partitions(x_cap, n):
        coeff = Q ** n_stat(lam)
        for l in ell(lam, n):
            coeff = coeff.mul(pochhammer(A_, l, pol), pol)
        coeff = coeff.mul(inverse(hook_product(lam, -1), pol), pol)
        lhs = lhs + coeff.mul(schur(lam, x), pol)
    rhs = ONE
    for i in range(1, n):
        rhs = rhs.mul(pochhammer(A_, i, pol), pol)
    for xi in x:
        rhs = rhs.mul(infinite_ratio(A_ * Q ** (n - 1) * xi, xi, pol), pol)
    return lhs, rhs, x, pol


@register(
    "theorem.ours",
    "Schur expansion with (a;q) weights",
    "sum_lam q^n(lam) prod_i (a;q)_{lam_i+n-i} / prod_c (1 - q^h) s_lam(x) = prod_{i<n} (a;q)_i prod_i (a q^(n-1) x_i;q)_inf/(x_i;q)_inf",
    form="symbolic a; truncated in q and total x-degree; hook denominators inverted as q-series",
    n=2,
    q_cap=6,
    x_cap=3,
)
def _ours(p, rng, chk):
    n = p["n"]
    if n < 1:
        raise Skip("needs n >= 1")
    lhs, rhs, x, pol = _ours_sides(n, p["q_cap"], p["x_cap"])
    chk.equal(lhs, rhs, f"n={n}, symbolic a")
    classical = ZERO
    for lam in enumerate_partitions(p["x_cap"], n):
        coeff = (Q ** n_stat(lam)).mul(inverse(hook_product(lam, -1), pol), pol)
        classical = classical + coeff.mul(schur(lam, x), pol)
    chk.equal(lhs.subs({"a": 0}), classical, f"n={n}, a = 0 left side")
    prod = ONE
    for xi in x:
        prod = prod.mul(pochhammer_inverse(xi, INF, pol), pol)
    chk.equal(classical, prod, f"n={n}, a = 0 classical form")


# Pfaffian evaluations


def _rf(num, den) -> RationalFunction:
    return RationalFunction(num, den)


def _skew_rf(n, f) -> SkewMatrix:
    return SkewMatrix.from_upper(n, f)


@register(
    "pf.evaluations",
    "Closed Pfaffian and determinant evaluations",
    "Pf[(x_i-x_j)/(x_i+x_j)], Pf[(x_i-x_j)/(1-x_i x_j)], Pf[(x_i^r-x_j^r)^2/(x_i-x_j)], Pf[x_i y_j], det[1/(x_i+y_j)], det[1/(1-x_i y_j)] as products",
    form="rational functions compared by cross-multiplication",
    sizes=(2, 4, 6),
    det_sizes=(2, 3, 4),
)
def _evaluations(p, rng, chk):
    for n in p["sizes"]:
        x = var_block(n)
        pairs = list(combinations(range(n), 2))

        def prod_rf(num_f, den_f):
            num, dens = ONE, []
            for i, j in pairs:
                num = num * num_f(i, j)
                dens.append(den_f(i, j))
            return _rf(num, dens)

        A = _skew_rf(n, lambda i, j: _rf(x[i - 1] - x[j - 1], x[i - 1] + x[j - 1]))
        chk.equal(pfaffian(A), prod_rf(lambda i, j: x[i] - x[j], lambda i, j: x[i] + x[j]), f"first Stembridge form, n={n}")
        B = _skew_rf(n, lambda i, j: _rf(x[i - 1] - x[j - 1], ONE - x[i - 1] * x[j - 1]))
        chk.equal(pfaffian(B), prod_rf(lambda i, j: x[i] - x[j], lambda i, j: ONE - x[i] * x[j]), f"second Stembridge form, n={n}")
        r = n // 2
        V = SkewMatrix.from_upper(
            n, lambda i, j: ((x[i - 1] ** r - x[j - 1] ** r) ** 2).exact_div(x[i - 1] - x[j - 1])
        )
        chk.equal(pfaffian(V), vandermonde(x), f"Vandermonde Pfaffian, n={n}")
        y = var_block(n, "y")
        P = SkewMatrix.from_upper(n, lambda i, j: x[i - 1] * y[j - 1])
        want = ONE
        for i in range(0, n, 2):
            want = want * x[i] * y[i + 1]
        chk.equal(pfaffian(P), want, f"product formula, n={n}")
    for n in p["det_sizes"]:
        x, y = var_block(n), var_block(n, "y")
        num = vandermonde(x) * vandermonde(y)
        C1 = Matrix.from_function(n, n, lambda i, j: _rf(ONE, x[i - 1] + y[j - 1]))
        chk.equal(det(C1), _rf(num, [x[i] + y[j] for i in range(n) for j in range(n)]), f"Cauchy determinant, n={n}")
        C2 = Matrix.from_function(n, n, lambda i, j: _rf(ONE, ONE - x[i - 1] * y[j - 1]))
        chk.equal(det(C2), _rf(num, [ONE - x[i] * y[j] for i in range(n) for j in range(n)]), f"second Cauchy determinant, n={n}")


# Schur sum


def _alpha(k: int, l: int, L: int) -> Poly:
    if k == l or max(k, l) > L:
        return ZERO
    if k < l:
        return Poly.var(f"w{k}_{l}")
    return -Poly.var(f"w{l}_{k}")


@register(
    "schur.sum",
    "Pfaffian-weighted Schur sum",
    "Delta(x) sum_lam Pf(alpha_{l_p l_q}) s_lam(x) = Pf(beta_ij), beta_ij = sum_{k<l} alpha_kl (x_i^k x_j^l - x_i^l x_j^k), alpha free below L",
    form="exact polynomial identity in the alpha symbols and x",
    cases=((2, 2), (2, 3), (4, 5)),
)
def _schur_sum(p, rng, chk):
    for n, L in p["cases"]:
        x = var_block(n)
        lhs = ZERO
        count = 0
        for lam in partitions_in_box(L - n + 1, n):
            ls = ell(lam, n)
            weight = pfaffian(SkewMatrix.from_upper(n, lambda a, b: _alpha(ls[a - 1], ls[b - 1], L)))
            lhs = lhs + weight * schur(lam, x)
            count += 1
        lhs = lhs * vandermonde(x)

        def beta(i, j):
            out = ZERO
            for k, l in combinations(range(L + 1), 2):
                out = out + _alpha(k, l, L) * (x[i - 1] ** k * x[j - 1] ** l - x[i - 1] ** l * x[j - 1] ** k)
            return out

        chk.equal(lhs, pfaffian(SkewMatrix.from_upper(n, beta)), f"n={n}, L={L}, {count} partitions")
        zero = {f"w{k}_{l}": 0 for k, l in combinations(range(L + 1), 2)}
        chk.equal(lhs.subs(zero), 0, f"n={n}, L={L}, all alpha zero")


# g and h lemmas


def _g(n: int, x: Poly, y: Poly, a: Poly, b: Poly, q: Poly, t: Poly) -> Poly:
    r = n // 2

    def prod(lo, hi, base, var, coef):
        out = ONE
        for k in range(lo, hi + 1):
            out = out * (ONE - coef * base ** (k - 1) * var)
        return out

    out = ZERO
    for nu in range(1, r + 1):
        out = out + (
            prod(1, nu - 1, q, x, ONE) * prod(nu, n - 1, q, x, a) * prod(1, n - nu, t, y, ONE) * prod(n - nu + 1, n - 1, t, y, b)
        )
        out = out - (
            prod(1, n - nu, q, x, ONE) * prod(n - nu + 1, n - 1, q, x, a) * prod(1, nu - 1, t, y, ONE) * prod(nu, n - 1, t, y, b)
        )
    return out


def _coefficient_matrix(g: Poly, n: int) -> Matrix:
    return Matrix.from_function(n, n, lambda i, j: g.coefficient_of({"x": n - i, "y": n - j}, ["x", "y"]))


@register(
    "lemma.g-pfaffian",
    "Pfaffian of the g_n kernel",
    "Pf[g_n(x_i, x_j)] = q^(n(n-1)(n-2)/6) prod_{k<n} (a;q)_k prod_{i<j} (x_i - x_j)",
    form="exact polynomial identity in a, q, x",
    sizes=(2, 4),
)
def _g_lemma(p, rng, chk):
    for n in p["sizes"]:
        xs = var_block(n)
        g = _g(n, X, Y, A_, A_, Q, Q)
        chk.equal(g.subs({"x": Y, "y": X}), -g, f"n={n}, skew symmetry")
        M = SkewMatrix.from_upper(n, lambda i, j: g.subs({"x": xs[i - 1], "y": xs[j - 1]}))
        const = Q ** (n * (n - 1) * (n - 2) // 6)
        for k in range(1, n):
            const = const * pochhammer(A_, k)
        chk.equal(pfaffian(M), const * vandermonde(xs), f"n={n}")
        C = _coefficient_matrix(g, n)
        chk.equal(pfaffian(SkewMatrix(C.row_list(), check=False)), const, f"n={n}, coefficient Pfaffian")


@register(
    "lemma.h-determinant",
    "Determinant of the h_n coefficient matrix",
    "det[[x^(n-i) y^(n-j)] h_n] = (qt)^(n(n-1)(n-2)/6) prod_{i<n} (a;q)_i prod_{j<n} (b;t)_j",
    form="exact polynomial identity in a, b, q, t",
    sizes=(2, 4),
)
def _h_lemma(p, rng, chk):
    b, t = Poly.var("b"), Poly.var("t")
    for n in p["sizes"]:
        h = _g(n, X, Y, A_, b, Q, t)
        C = _coefficient_matrix(h, n)
        e = n * (n - 1) * (n - 2) // 6
        want = (Q * t) ** e
        for i in range(1, n):
            want = want * pochhammer(A_, i) * _poch_in(b, t, i)
        d = det(C)
        chk.equal(d, want, f"n={n}")
        g = _g(n, X, Y, A_, A_, Q, Q)
        gpf = pfaffian(SkewMatrix(_coefficient_matrix(g, n).row_list(), check=False))
        chk.equal(d.subs({"t": Q, "b": A_}), gpf**2, f"n={n}, t = q and b = a gives the squared coefficient Pfaffian")


def _poch_in(b: Poly, t: Poly, k: int) -> Poly:
    out = ONE
    for j in range(k):
        out = out * (ONE - b * t**j)
    return out
