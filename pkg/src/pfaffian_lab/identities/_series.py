"""Truncated q-series building blocks shared by the q-identity verifiers."""

from __future__ import annotations

from ..combinat import hooks
from ..exactring import INF, ONE, Poly, TruncationPolicy, pochhammer, pochhammer_inverse, series_inverse

Q = Poly.var("q")


def policy(q_cap: int, blocks: dict[int, list[Poly]] | None = None) -> TruncationPolicy:
    """q capped at ``q_cap``; each ``cap -> variables`` entry bounds their total degree."""
    pol = TruncationPolicy(q_cap)
    for cap, vs in (blocks or {}).items():
        pol = pol.with_block([str(v) for v in vs], cap)
    return pol


def poch_ratio(a, b, k, pol: TruncationPolicy, step: int = 1) -> Poly:
    """``(a; q^step)_k / (b; q^step)_k`` as a truncated series."""
    return pochhammer(a, k, pol, step).mul(pochhammer_inverse(b, k, pol, step), pol)


def infinite_ratio(a, b, pol: TruncationPolicy, step: int = 1) -> Poly:
    return poch_ratio(a, b, INF, pol, step)


def hook_product(lam, sign: int, power: int = 1) -> Poly:
    """prod over cells of (1 + sign * q^(power * h))."""
    out = ONE
    for h in hooks(lam):
        out = out * (ONE + sign * Q ** (power * h))
    return out


def inverse(p: Poly, pol: TruncationPolicy) -> Poly:
    return series_inverse(p, pol)


def ell(lam, n: int) -> list[int]:
    """Shifted parts lam_i + n - i."""
    padded = list(lam) + [0] * (n - len(lam))
    return [padded[i] + n - 1 - i for i in range(n)]
