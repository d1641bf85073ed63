"""Truncated power-series helpers: inverses and q-Pochhammer products."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import NonTerminating, NotAUnit
from .poly import ONE, Poly, TruncationPolicy, _fits

INF = math.inf


def _check_nilpotent(r: Poly, policy: TruncationPolicy) -> None:
    """Every term of ``r`` must carry positive degree in some capped block."""
    caps = policy.compiled()
    for m, _ in r.items():
        if not any(sum((m >> s) & 0xFFFF for s in shifts) > 0 for shifts, _ in caps):
            raise NonTerminating("truncation policy does not bound every variable of the series")


def series_inverse(u: Poly, policy: TruncationPolicy) -> Poly:
    """``v`` with ``truncate(u*v) == 1``; geometric iteration on the non-constant part."""
    if not isinstance(u, Poly):
        u = Poly.const(u)
    c0 = u.constant_term
    if not c0:
        raise NotAUnit("constant term is zero")
    inv0 = Fraction(1) / Fraction(c0)
    rest = u - c0
    if not rest:
        return Poly.const(inv0)
    _check_nilpotent(rest, policy)
    step = (rest * (-inv0)).truncate(policy)
    term = Poly.const(inv0)
    acc = term
    while True:
        term = term.mul(step, policy)
        if not term:
            return acc
        acc = acc + term


def geometric(u: Poly, policy: TruncationPolicy) -> Poly:
    """``1/(1-u)`` as a truncated series."""
    return series_inverse(ONE - u, policy)


def _factors(a: Poly, n, policy: TruncationPolicy, step: int = 1):
    q = Poly.var("q", step)
    if n is None or n == INF:
        if policy.q_cap is None:
            raise NonTerminating("an infinite q-product needs a q cap")
        count = policy.q_cap // step + 1
    else:
        if n < 0:
            raise ValueError("pochhammer length must be >= 0")
        count = n
    qk = ONE
    for _ in range(count):
        yield ONE - (a * qk).truncate(policy)
        qk = qk * q


def pochhammer(a: Poly, n, policy: TruncationPolicy | None = None, step: int = 1) -> Poly:
    """``(a;q^step)_n``; ``n`` may be ``math.inf`` (or None) for the infinite product."""
    if not isinstance(a, Poly):
        a = Poly.const(a)
    policy = policy or TruncationPolicy()
    result = ONE.truncate(policy)
    for f in _factors(a, n, policy, step):
        result = result.mul(f, policy)
    return result


def pochhammer_inverse(a: Poly, n, policy: TruncationPolicy, step: int = 1) -> Poly:
    """``1/(a;q)_n`` as a series: product of per-factor geometric inverses."""
    if not isinstance(a, Poly):
        a = Poly.const(a)
    result = ONE.truncate(policy)
    for f in _factors(a, n, policy, step):
        result = result.mul(series_inverse(f, policy), policy)
    return result


def q_integer_pochhammer(n: int) -> Poly:
    """``(q;q)_n`` exactly."""
    return pochhammer(Poly.var("q"), n)


def fits(p: Poly, policy: TruncationPolicy) -> bool:
    caps = policy.compiled()
    return all(_fits(m, caps) for m, _ in p.items())
