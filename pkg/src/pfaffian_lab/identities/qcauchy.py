"""The q-Cauchy determinant identity with generalized hooks, and its supporting lemmas."""

from __future__ import annotations

from itertools import product

from ..combinat import (
    as_partition,
    hooks,
    hooks_two,
    n_two,
    partitions_in_box,
    enumerate_partitions,
    pq_pairwise,
    pq_stats,
    q_lattice,
    strange_sides,
)
from ..exactring import ONE, ZERO, Poly
from ..linalg import Matrix, det
from ..symfun import schur, var_block
from ._series import Q, infinite_ratio, inverse, poch_ratio, policy
from .registry import register

X, Y = Poly.var("x"), Poly.var("y")


def _weights(top: int, pol) -> list[Poly]:
    """(-q^2;q^2)_k / (q^2;q^2)_k for k = 0..top."""
    return [poch_ratio(-Q**2, Q**2, k, pol, step=2) for k in range(top + 1)]


def _entry(k: int, l: int, w, pol) -> Poly:
    """2 q^(k+l) / (q^2k + q^2l) times the two weights; the q^2min factor cancels first."""
    d = abs(k - l)
    kern = (2 * Q**d).mul(inverse(ONE + Q ** (2 * d), pol), pol)
    return w[k].mul(w[l], pol).mul(kern, pol)


def _shifted(lam, n: int) -> list[int]:
    return list(as_partition(lam).shifted(n))


def det_side(lam, mu, n: int, w, pol) -> Poly:
    ks, ls = _shifted(lam, n), _shifted(mu, n)
    M = Matrix.from_function(n, n, lambda i, j: _entry(ks[i - 1], ls[j - 1], w, pol))
    return det(M).truncate(pol)


def hook_side(lam, mu, n: int, pol) -> Poly:
    """q^(|lam-mu| + |mu-lam|) J(q^2) with the generalized-hook factors normalized to constant term 1 or 2."""
    st = pq_stats(lam, mu, n)
    shift = st.lam_minus_mu + st.mu_minus_lam + 2 * n_two(lam, mu) + 2 * n_two(mu, lam)
    num = ONE
    for h in hooks_two(lam, mu) + hooks_two(mu, lam):
        # 1 + q^(2h) = q^(2h) (1 + q^(-2h)) when h < 0
        if h < 0:
            shift += 2 * h
        num = num * (ONE + Q ** (2 * abs(h)))
    den = ONE
    for h in hooks(lam) + hooks(mu):
        den = den * (ONE - Q ** (2 * h))
    if shift < 0:
        raise ValueError(f"negative q-exponent {shift} for {lam}, {mu}")
    return (Q**shift).mul(num, pol).mul(inverse(den, pol), pol)


@register(
    "coeff.lemma",
    "Determinant of the q-Cauchy coefficients",
    "det[a_{k_i l_j}] = q^(|lam-mu| + |mu-lam|) J_{lam,mu}(q^2), a_kl = (-q^2;q^2)_k (-q^2;q^2)_l / ((q^2;q^2)_k (q^2;q^2)_l) 2q^(k+l)/(q^2k + q^2l)",
    form="q-series to q_cap; hook denominators inverted as series, negative generalized hooks factored out",
    n=3,
    q_cap=24,
)
def _coeff(p, rng, chk):
    pol = policy(p["q_cap"])
    w = _weights(3 + 3, pol)
    chk.equal(_entry(0, 0, w, pol), 1, "a_00 = 1")
    for n in range(1, min(p["n"], 3) + 1):
        box = partitions_in_box(3, n)
        parts = list(box)
        for lam, mu in product(parts, parts):
            chk.equal(det_side(lam, mu, n, w, pol), hook_side(lam, mu, n, pol), f"n={n}, lam={lam}, mu={mu}")
    # exponent bookkeeping for the worked example at n = 4
    lam, mu = (4, 3, 1, 1), (3, 3)
    st = pq_stats(lam, mu, 4)
    chk.equal(2 * st.P, 64, "worked example, 2P")
    chk.equal(2 * st.Q, 4, "worked example, 2Q")
    chk.equal(st.lam_minus_mu + st.mu_minus_lam, 3, "worked example, cell differences")
    chk.equal(n_two(lam, mu), 1, "worked example, n(lam, mu)")
    chk.equal(n_two(mu, lam), 0, "worked example, n(mu, lam)")
    left, right = strange_sides(lam, mu, 4)
    chk.equal(left, 65, "worked example, exponent total")
    chk.equal(right, 65, "worked example, shifted-part total")
    for got, want in zip(hooks_two(lam, mu), [5, 4, 3, 0, 3, 2, 1, 0, -1], strict=True):
        chk.equal(got, want, "worked example, generalized hooks")


@register(
    "id.strange",
    "Statistic identity behind the coefficient lemma",
    "|lam-mu| + |mu-lam| + 2n(lam,mu) + 2n(mu,lam) + 2P - 2Q = sum (2i-1) k_i + sum (2j-1) l_j",
    form="exhaustive over partitions with parts <= 3 and n <= 4",
    n=4,
)
def _strange(p, rng, chk):
    for n in range(1, p["n"] + 1):
        parts = list(partitions_in_box(3, n))
        for lam, mu in product(parts, parts):
            case = f"n={n}, lam={lam}, mu={mu}"
            left, right = strange_sides(lam, mu, n)
            chk.equal(left, right, case)
            st = pq_stats(lam, mu, n)
            chk.equal(st.P, pq_pairwise(lam, mu, n), case + ", P pairwise")
            chk.equal(st.Q, q_lattice(lam, mu, n), case + ", Q from lattice points")


@register(
    "kernel.q-cauchy",
    "Two-variable kernel of the q-Cauchy identity",
    "sum_{k,l} (-q^2;q^2)_k (-q^2;q^2)_l / ((q^2;q^2)_k (q^2;q^2)_l) 2 x^k y^l / (q^(k-l) + q^(l-k)) = (-qx;q^2)/(qx;q^2) (-qy;q^2)/(qy;q^2) / (1 - xy)",
    form="truncated in q and in the total degree of x, y",
    q_cap=10,
    x_cap=5,
)
def _kernel(p, rng, chk):
    cap = p["x_cap"]
    pol = policy(p["q_cap"], {cap: [X, Y]})
    w = _weights(cap, pol)
    lhs = ZERO
    for k in range(cap + 1):
        for l in range(cap + 1 - k):
            lhs = lhs + _entry(k, l, w, pol) * X**k * Y**l
    one_side = infinite_ratio(-Q * X, Q * X, pol, step=2)
    rhs = one_side.mul(one_side.subs({"x": Y}), pol).mul(inverse(ONE - X * Y, pol), pol)
    chk.equal(lhs, rhs, "full kernel")
    # (1 - xy) times either side has the product coefficients (-1;q^2)_k (-1;q^2)_l q^(k+l) / ((q^2;q^2)_k (q^2;q^2)_l)
    cleared = lhs.mul(ONE - X * Y, pol)
    for k in range(cap + 1):
        for l in range(cap + 1 - k):
            expect = (Q ** (k + l)).mul(poch_ratio(-ONE, Q**2, k, pol, step=2), pol).mul(poch_ratio(-ONE, Q**2, l, pol, step=2), pol)
            chk.equal(cleared.coefficient_of({"x": k, "y": l}, ["x", "y"]), expect, f"x^{k} y^{l} after clearing 1 - xy")


@register(
    "kawanaka.q-cauchy",
    "Kawanaka q-Cauchy identity",
    "sum_{lam,mu} q^(|lam-mu| + |mu-lam|) J_{lam,mu}(q^2) s_lam(x) s_mu(y) = prod_i (-q x_i;q^2)/(q x_i;q^2) prod_j (-q y_j;q^2)/(q y_j;q^2) prod_{i,j} 1/(1 - x_i y_j)",
    form="truncated in q, x-degree and y-degree; coefficients taken from the determinant side",
    n=2,
    q_cap=6,
    x_cap=3,
    y_cap=3,
)
def _q_cauchy(p, rng, chk):
    n = p["n"]
    x, y = var_block(n, "x"), var_block(n, "y")
    pol = policy(p["q_cap"], {p["x_cap"]: x}).with_block([str(v) for v in y], p["y_cap"])
    qpol = policy(p["q_cap"])
    w = _weights(max(p["x_cap"], p["y_cap"]) + n, qpol)
    lams = list(enumerate_partitions(p["x_cap"], n))
    mus = list(enumerate_partitions(p["y_cap"], n))
    sy = {mu: schur(mu, y) for mu in mus}
    lhs = ZERO
    for lam in lams:
        sx = schur(lam, x)
        for mu in mus:
            coeff = det_side(lam, mu, n, w, qpol)
            if coeff:
                lhs = lhs + coeff.mul(sx, pol).mul(sy[mu], pol)
    rhs = ONE
    for v in x + y:
        rhs = rhs.mul(infinite_ratio(-Q * v, Q * v, pol, step=2), pol)
    for xi in x:
        for yj in y:
            rhs = rhs.mul(inverse(ONE - xi * yj, pol), pol)
    chk.equal(lhs.constant_term, 1, "empty pair term")
    chk.equal(lhs, rhs, f"n={n}")
