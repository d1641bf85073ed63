"""Sparse multivariate polynomials over the rationals."""

from __future__ import annotations

import ast
import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from ..errors import NotDivisible, ParseError
from . import variables as V
from .variables import MASK

Coeff = Union[int, Fraction]
Scalar = (int, Fraction)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def rational(c) -> Coeff:
    """Canonical coefficient: a Python int, or a reduced Fraction with denominator > 1."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not a rational coefficient: {c!r}")


def format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


@dataclass(frozen=True)
class TruncationPolicy:
    """Degree caps applied after every multiplication.

    ``q_cap`` bounds the exponent of ``q``; each ``block_caps`` entry bounds the
    total degree in a set of variables. ``None`` means unbounded.
    """

    q_cap: int | None = None
    block_caps: tuple[tuple[frozenset, int], ...] = field(default=())

    def __post_init__(self):
        caps = tuple((frozenset(names), int(cap)) for names, cap in self.block_caps)
        object.__setattr__(self, "block_caps", caps)
        if self.q_cap is not None and self.q_cap < 0:
            raise ValueError("q_cap must be >= 0")
        if any(cap < 0 for _, cap in caps):
            raise ValueError("block caps must be >= 0")

    def with_block(self, names: Iterable[str], cap: int) -> "TruncationPolicy":
        return TruncationPolicy(self.q_cap, self.block_caps + ((frozenset(names), cap),))

    @property
    def unbounded(self) -> bool:
        return self.q_cap is None and not self.block_caps

    def compiled(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return _compile(self, len(V.registered()))

    def bounds(self, name: str) -> bool:
        if name == "q" and self.q_cap is not None:
            return True
        return any(name in names for names, _ in self.block_caps)

    def truncate(self, p: "Poly") -> "Poly":
        return p.truncate(self)


NO_TRUNCATION = TruncationPolicy()


@lru_cache(maxsize=None)
def _compile(policy: TruncationPolicy, _nvars: int):
    caps = []
    if policy.q_cap is not None:
        caps.append(((V.shift("q"),), policy.q_cap))
    for names, cap in policy.block_caps:
        caps.append((tuple(sorted(V.shift(n) for n in names)), cap))
    return tuple(caps)


def _degrees(m: int, caps) -> tuple[int, ...]:
    return tuple(sum((m >> s) & MASK for s in shifts) for shifts, _ in caps)


@lru_cache(maxsize=1 << 16)
def _order_key(m: int, _nvars: int) -> tuple:
    deg, lex = V.order_key(m)
    return (-deg, tuple(-e for e in lex))


class Poly:
    """Immutable sparse polynomial: a map from packed monomials to rationals.

    Arithmetic mixes freely with ``int`` and ``Fraction``. Multiplication via
    ``*`` is untruncated; use :meth:`mul` with a :class:`TruncationPolicy` for
    series work.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                c = rational(c)
                if c:
                    t[m] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "Poly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c) -> "Poly":
        c = rational(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        return cls._raw({V.monomial({name: power}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "Poly":
        return cls({V.monomial(dict(exps)): coeff})

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)

    # basic accessors

    @property
    def terms(self) -> dict[int, Coeff]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    @property
    def constant_term(self) -> Coeff:
        return self._t.get(0, 0)

    def coefficient(self, exps: Mapping[str, int] | int) -> Coeff:
        m = exps if isinstance(exps, int) else V.monomial(dict(exps))
        return self._t.get(m, 0)

    def variables(self) -> set[str]:
        acc = 0
        for m in self._t:
            acc |= m
        out = set()
        i = 0
        while acc:
            if acc & MASK:
                out.add(V.var_name(i))
            acc >>= V.BITS
            i += 1
        # OR-ing fields can leave a nonzero field for absent vars only if a
        # true exponent exists there, so the set is exact.
        return out

    def degree(self, names: Iterable[str] | str | None = None) -> int:
        """Max total degree in ``names`` (all variables if None); -1 for zero."""
        if not self._t:
            return -1
        if names is None:
            return max(V.total_degree(m) for m in self._t)
        if isinstance(names, str):
            names = [names]
        shifts = [V.shift(n) for n in names]
        return max(sum((m >> s) & MASK for s in shifts) for m in self._t)

    # arithmetic

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._t.items()})

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other) -> "Poly":
        if isinstance(other, Poly):
            o = other._t
        elif isinstance(other, Scalar):
            if not other:
                return self
            o = {0: rational(other)}
        else:
            return NotImplemented
        if len(o) > len(self._t):
            big, small = o, self._t
        else:
            big, small = self._t, o
        t = dict(big)
        for m, c in small.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = _norm(s)
            else:
                t.pop(m, None)
        return Poly._raw(t)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (Poly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "Poly":
        if isinstance(other, Scalar):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return Poly._raw(_mul_plain(self._t, other._t))
        if isinstance(other, Scalar):
            c = rational(other)
            if not c:
                return Poly._raw({})
            if c == 1:
                return self
            return Poly._raw({m: _norm(v * c) for m, v in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Scalar):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        if isinstance(other, Poly) and other.is_constant():
            return self / other.constant_term
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul(self, other: "Poly", policy: TruncationPolicy | None = None) -> "Poly":
        """Product truncated by ``policy``."""
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if policy is None or policy.unbounded:
            return self * other
        caps = policy.compiled()
        return Poly._raw(_mul_trunc(self._t, other._t, caps))

    def pow(self, k: int, policy: TruncationPolicy | None = None) -> "Poly":
        result = Poly.const(1).truncate(policy)
        for _ in range(k):
            result = result.mul(self, policy)
        return result

    def truncate(self, policy: TruncationPolicy | None) -> "Poly":
        if policy is None or policy.unbounded:
            return self
        caps = policy.compiled()
        return Poly._raw({m: c for m, c in self._t.items() if _fits(m, caps)})

    def exact_div(self, d: "Poly") -> "Poly":
        return poly_exact_div(self, d)

    # comparison / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, Scalar):
            other = rational(other)
            if not other:
                return not self._t
            return len(self._t) == 1 and self._t.get(0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # substitution and coefficient extraction

    def subs(self, mapping: Mapping[str, "Poly | Coeff"]) -> "Poly":
        """Substitute variables by polynomials or scalars."""
        targets = {V.var_index(k): (v if isinstance(v, Poly) else Poly.const(v)) for k, v in mapping.items()}
        cache: dict[tuple[int, int], Poly] = {}
        keep_mask = 0
        for idx in targets:
            keep_mask |= MASK << (V.BITS * idx)
        out = Poly()
        for m, c in self._t.items():
            rest = m & ~keep_mask
            term = Poly._raw({rest: c})
            for idx, val in targets.items():
                e = (m >> (V.BITS * idx)) & MASK
                if e:
                    key = (idx, e)
                    if key not in cache:
                        cache[key] = val ** e
                    term = term * cache[key]
            out = out + term
        return out

    def collect(self, names: Iterable[str]) -> dict[int, "Poly"]:
        """Split into ``{monomial in names: coefficient poly in the rest}``."""
        mask = 0
        for n in names:
            mask |= MASK << V.shift(n)
        out: dict[int, dict] = {}
        for m, c in self._t.items():
            out.setdefault(m & mask, {})[m & ~mask] = c
        return {k: Poly._raw(v) for k, v in out.items()}

    def coefficient_of(self, exps: Mapping[str, int], names: Iterable[str] | None = None) -> "Poly":
        """Coefficient of the monomial ``exps`` regarding only ``names`` (default: keys of exps) as variables."""
        names = list(names) if names is not None else list(exps)
        return self.collect(names).get(V.monomial(dict(exps)), Poly())

    # display

    def sorted_terms(self) -> list[tuple[int, Coeff]]:
        n = len(V.registered())
        return sorted(self._t.items(), key=lambda mc: _order_key(mc[0], n))

    def leading_term(self) -> tuple[int, Coeff]:
        n = len(V.registered())
        m = min(self._t, key=lambda k: _order_key(k, n))
        return m, self._t[m]

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = V.format_monomial(m)
            if m == 0:
                body = format_coeff(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_coeff(a)}*{mono}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _fits(m: int, caps) -> bool:
    for shifts, cap in caps:
        d = 0
        for s in shifts:
            d += (m >> s) & MASK
        if d > cap:
            return False
    return True


def _clean(out: dict) -> dict:
    return {m: _norm(c) for m, c in out.items() if c}


def _mul_plain(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bi = list(b.items())
    for m1, c1 in a.items():
        for m2, c2 in bi:
            m = m1 + m2
            out[m] = get(m, 0) + c1 * c2
    return _clean(out)


def _mul_trunc(a: dict, b: dict, caps) -> dict:
    capv = tuple(cap for _, cap in caps)
    k = len(capv)

    def prep(t):
        rows = []
        for m, c in t.items():
            d = _degrees(m, caps)
            if all(d[i] <= capv[i] for i in range(k)):
                rows.append((d, m, c))
        rows.sort(key=lambda r: r[0][0])
        return rows

    A = prep(a)
    B = prep(b)
    out: dict = {}
    get = out.get
    cap0 = capv[0]
    if k == 1:
        for (d1,), m1, c1 in A:
            lim = cap0 - d1
            for (d2,), m2, c2 in B:
                if d2 > lim:
                    break
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
    else:
        rest = range(1, k)
        for d1, m1, c1 in A:
            lim = cap0 - d1[0]
            for d2, m2, c2 in B:
                if d2[0] > lim:
                    break
                ok = True
                for i in rest:
                    if d1[i] + d2[i] > capv[i]:
                        ok = False
                        break
                if ok:
                    m = m1 + m2
                    out[m] = get(m, 0) + c1 * c2
    return _clean(out)


# module-level operations named after the contract


def poly_add(p: Poly, r: Poly) -> Poly:
    return p + r


def poly_mul(p: Poly, r: Poly, policy: TruncationPolicy | None = None) -> Poly:
    return p.mul(r, policy)


def poly_exact_div(p: Poly, d: Poly) -> Poly:
    """Quotient ``g`` with ``g * d == p``; raises NotDivisible otherwise.

    Repeated leading-term reduction under graded-lex order.
    """
    if not isinstance(d, Poly):
        d = Poly.const(d)
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not isinstance(p, Poly):
        p = Poly.const(p)
    if d.is_constant():
        return p / d.constant_term
    n = len(V.registered())
    key = lambda m: _order_key(m, n)  # noqa: E731
    dm, dc = d.leading_term()
    dterms = [(m - dm, c) for m, c in d.items() if m != dm]
    rem = dict(p._t)
    heap = [(key(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        if not V.divides(dm, m):
            raise NotDivisible(f"leading monomial {V.format_monomial(m)} not divisible by {V.format_monomial(dm)}")
        qm = m - dm
        qc = _norm(Fraction(c) / dc) if (isinstance(c, Fraction) or c % dc) else c // dc
        quot[qm] = qc
        del rem[m]
        for off, c2 in dterms:
            mm = qm + dm + off
            s = rem.get(mm, 0) - qc * c2
            if s:
                if mm not in rem:
                    heapq.heappush(heap, (key(mm), mm))
                rem[mm] = _norm(s)
            else:
                rem.pop(mm, None)
    return Poly._raw(quot)


def var(name: str) -> Poly:
    return Poly.var(name)


def xvars(n: int, prefix: str = "x") -> list[Poly]:
    return [Poly.var(f"{prefix}{i}") for i in range(1, n + 1)]


ZERO = Poly()
ONE = Poly.const(1)


# parsing

_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def parse_poly(text: str) -> Poly:
    """Parse canonical text (``3/2*x1^2*q - a12*a34``) or any +,-,*,^ expression."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty polynomial text")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(tree.body, text)


def _eval(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval(node.left, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            return left ** node.right.value
        right = _eval(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if not right.is_constant() or not right:
            raise ParseError(f"division only by nonzero constants in {text!r}")
        return left / right.constant_term
    raise ParseError(f"unsupported syntax in {text!r}")
