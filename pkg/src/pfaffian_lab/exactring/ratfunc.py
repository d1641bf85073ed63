"""Lazy rational functions: a numerator over a multiset of polynomial factors.

No GCD is ever computed. Sums use the least common multiple of the factor
multisets (factors are matched by identity after a leading-coefficient
normalization), and equality is decided by cross-multiplication.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable

from ..errors import NotDivisible
from .poly import ONE, Poly, TruncationPolicy
from .series import series_inverse


def _monic(f: Poly) -> tuple[Poly, Fraction | int]:
    _, lc = f.leading_term()
    if lc == 1:
        return f, 1
    return f / lc, lc


class RationalFunction:
    __slots__ = ("num", "_den", "_den_poly")

    def __init__(self, num=0, den: Poly | int | Fraction | Iterable[Poly] = 1):
        num = num if isinstance(num, Poly) else Poly.const(num)
        factors: Counter = Counter()
        scale = Fraction(1)
        items = [den] if isinstance(den, (Poly, int, Fraction)) else list(den)
        for f in items:
            if not isinstance(f, Poly):
                f = Poly.const(f)
            if not f:
                raise ZeroDivisionError("zero denominator")
            if f.is_constant():
                scale /= f.constant_term
                continue
            g, lc = _monic(f)
            scale /= lc
            factors[g] += 1
        self.num = num * scale if scale != 1 else num
        self._den = factors
        self._den_poly = None

    @classmethod
    def _make(cls, num: Poly, factors: Counter) -> "RationalFunction":
        r = cls.__new__(cls)
        r.num = num
        r._den = factors if num else Counter()
        r._den_poly = None
        return r

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (Poly, int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    @property
    def den_factors(self) -> dict[Poly, int]:
        return dict(self._den)

    @property
    def den(self) -> Poly:
        if self._den_poly is None:
            d = ONE
            for f, k in self._den.items():
                d = d * f**k
            self._den_poly = d
        return self._den_poly

    def is_polynomial(self) -> bool:
        return not self._den

    def to_poly(self) -> Poly:
        """The numerator divided exactly by the denominator; NotDivisible otherwise."""
        num = self.num
        for f, k in self._den.items():
            for _ in range(k):
                num = num.exact_div(f)
        return num

    def cancel(self) -> "RationalFunction":
        """Drop denominator factors that divide the numerator exactly."""
        num = self.num
        left: Counter = Counter()
        for f, k in self._den.items():
            for i in range(k):
                try:
                    num = num.exact_div(f)
                except NotDivisible:
                    left[f] += k - i
                    break
        return RationalFunction._make(num, left)

    def expand(self, policy: TruncationPolicy) -> Poly:
        """Truncated series: numerator times the series inverse of each factor."""
        out = self.num.truncate(policy)
        for f, k in self._den.items():
            inv = series_inverse(f, policy)
            for _ in range(k):
                out = out.mul(inv, policy)
        return out

    # arithmetic

    def _lcm(self, other: "RationalFunction"):
        lcm = self._den | other._den
        return lcm, _product(lcm - self._den), _product(lcm - other._den)

    def __add__(self, other):
        if isinstance(other, (Poly, int, Fraction)):
            if not self._den:
                return RationalFunction._make(self.num + other, Counter())
            return RationalFunction._make(self.num + self.den * other, self._den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        lcm, ms, mo = self._lcm(other)
        return RationalFunction._make(self.num * ms + other.num * mo, lcm)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self.num, self._den)

    def __sub__(self, other):
        if isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Fraction)):
            return RationalFunction._make(self.num * other, self._den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if not self.num or not other.num:
            return RationalFunction._make(Poly(), Counter())
        return RationalFunction._make(self.num * other.num, self._den + other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        inv = RationalFunction(_product(other._den), [other.num])
        return self * inv

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / self ** (-k)
        out = RationalFunction(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        _, ms, mo = self._lcm(other)
        return self.num * ms == other.num * mo

    __hash__ = None

    def subs(self, mapping) -> "RationalFunction":
        den = [f.subs(mapping) for f, k in self._den.items() for _ in range(k)]
        return RationalFunction(self.num.subs(mapping), den)

    def __str__(self) -> str:
        if not self._den:
            return str(self.num)
        parts = []
        for f, k in self._den.items():
            parts.append(f"({f})" + (f"^{k}" if k > 1 else ""))
        return f"({self.num})/({'*'.join(parts)})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _product(factors: Counter) -> Poly:
    out = ONE
    for f, k in factors.items():
        if k > 0:
            out = out * f**k
    return out
