"""Verification reports, parameters and the exact comparison helper."""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Optional

from ..exactring import Poly, RationalFunction, format_coeff
from ..exactring.variables import format_monomial

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class IdentityParams:
    """Overrides for a verifier run; ``None`` fields fall back to per-identity defaults."""

    n: Optional[int] = None
    q_cap: Optional[int] = None
    x_cap: Optional[int] = None
    y_cap: Optional[int] = None
    seed: int = 0
    trials: Optional[int] = None
    size_caps: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("q_cap", "x_cap", "y_cap", "n"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")
        if self.trials is not None and self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")

    def overrides(self) -> dict:
        out = {k: getattr(self, k) for k in ("n", "q_cap", "x_cap", "y_cap", "trials") if getattr(self, k) is not None}
        out.update(self.size_caps)
        return out


@dataclass
class VerificationReport:
    id: str
    params: dict
    status: str
    witness: Optional[dict] = None
    ms: float = 0.0
    detail: str = ""

    def __post_init__(self):
        if (self.status == FAIL) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is fail")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, timing: bool = True) -> dict:
        out: dict[str, Any] = {"id": self.id, "params": _jsonable(self.params), "status": self.status, "witness": self.witness}
        if timing:
            out["ms"] = round(self.ms, 3)
        return out

    def line(self) -> str:
        text = f"{self.status.upper():7} {self.id}  ({self.ms:.0f} ms)"
        if self.witness:
            w = self.witness
            text += f"\n        first mismatch at {w['monomial']}: lhs {w['lhs']} rhs {w['rhs']}"
        if self.detail:
            text += f"\n        {self.detail}"
        return text


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


# comparison


class Mismatch(Exception):
    def __init__(self, witness: dict, case: str):
        super().__init__(f"{case}: {witness}")
        self.witness = witness
        self.case = case


class Skip(Exception):
    """Raised by a verifier whose parameters fall outside its domain."""


_PERTURB: contextvars.ContextVar[bool] = contextvars.ContextVar("perturb_rhs", default=False)


@contextlib.contextmanager
def perturbation() -> Iterator[None]:
    """Test hook: flip the sign of the leading RHS term (or add 1 to a zero RHS) in every comparison."""
    token = _PERTURB.set(True)
    try:
        yield
    finally:
        _PERTURB.reset(token)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, bool):
        return Poly.const(int(x))
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot compare values of type {type(x).__name__}")


def _cleared(lhs, rhs) -> tuple[Poly, Poly]:
    """Bring both sides to polynomials; rational functions are cross-multiplied."""
    if isinstance(lhs, RationalFunction) or isinstance(rhs, RationalFunction):
        lf, rf = RationalFunction.coerce(lhs), RationalFunction.coerce(rhs)
        _, ml, mr = lf._lcm(rf)
        return lf.num * ml, rf.num * mr
    return _as_poly(lhs), _as_poly(rhs)


def _flip(rhs: Poly) -> Poly:
    if not rhs:
        return Poly.const(1)
    m, c = rhs.leading_term()
    return rhs - Poly._raw({m: 2 * c})


class Checker:
    """Counts successful exact comparisons and raises :class:`Mismatch` on the first failure."""

    def __init__(self):
        self.count = 0
        self.perturb = _PERTURB.get()

    def equal(self, lhs, rhs, case: str = "") -> None:
        left, right = _cleared(lhs, rhs)
        if self.perturb:
            right = _flip(right)
        diff = left - right
        if diff:
            m, _ = diff.leading_term()
            witness = {
                "monomial": format_monomial(m),
                "lhs": format_coeff(left.coefficient(m)),
                "rhs": format_coeff(right.coefficient(m)),
            }
            raise Mismatch(witness, case)
        self.count += 1

    def true(self, cond: bool, case: str = "") -> None:
        """A boolean side condition; never perturbed, so mutation witnesses come from identity comparisons."""
        if not cond:
            raise Mismatch({"monomial": "1", "lhs": "0", "rhs": "1"}, case)
        self.count += 1
