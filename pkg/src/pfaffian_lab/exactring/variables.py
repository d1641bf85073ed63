"""Variable registry and packed-integer monomials.

A monomial is a non-negative Python int holding one ``BITS``-wide exponent
field per registered variable, so multiplying monomials is integer addition.
Field positions depend on registration order inside a process; every
user-visible ordering goes through :func:`rank_key`, which depends only on
variable names.
"""

from __future__ import annotations

import re
from functools import lru_cache

BITS = 16
MASK = (1 << BITS) - 1
MAX_EXPONENT = MASK

_FIXED = {"q": 0, "a": 1, "b": 2, "c": 3, "t": 4, "z": 5}
_INDEXED = re.compile(r"^([xy])(\d+)$")
_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

_names: list[str] = []
_index: dict[str, int] = {}
_rank_perm: list[int] | None = None


def _natural(name: str) -> tuple:
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.findall(r"\d+|\D+", name))


@lru_cache(maxsize=None)
def rank_key(name: str) -> tuple:
    """Sort key for variables: q < a < b < c < t < z < x1 < x2 < ... < y1 < ... < others."""
    if name in _FIXED:
        return (0, _FIXED[name])
    m = _INDEXED.match(name)
    if m:
        return (1 if m.group(1) == "x" else 2, int(m.group(2)))
    return (3, _natural(name))


def var_index(name: str) -> int:
    idx = _index.get(name)
    if idx is None:
        if not _NAME.match(name):
            raise ValueError(f"invalid variable name {name!r}")
        global _rank_perm
        idx = len(_names)
        _names.append(name)
        _index[name] = idx
        _rank_perm = None
    return idx


def var_name(idx: int) -> str:
    return _names[idx]


def registered() -> tuple[str, ...]:
    return tuple(_names)


def rank_order() -> list[int]:
    """Registered variable indices sorted by :func:`rank_key`."""
    global _rank_perm
    if _rank_perm is None:
        _rank_perm = sorted(range(len(_names)), key=lambda i: rank_key(_names[i]))
    return _rank_perm


def shift(name: str) -> int:
    return BITS * var_index(name)


def monomial(exps: dict[str, int] | None = None, **kw: int) -> int:
    """Pack ``{name: exponent}`` into a monomial int."""
    m = 0
    items = dict(exps or {}, **kw)
    for name, e in items.items():
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        if e:
            m += e << shift(name)
    return m


def exponents(m: int) -> dict[str, int]:
    out = {}
    i = 0
    while m:
        e = m & MASK
        if e:
            out[_names[i]] = e
        m >>= BITS
        i += 1
    return out


def exponent_vector(m: int) -> list[int]:
    vec = []
    while m:
        vec.append(m & MASK)
        m >>= BITS
    return vec


def total_degree(m: int) -> int:
    d = 0
    while m:
        d += m & MASK
        m >>= BITS
    return d


def divides(d: int, m: int) -> bool:
    """True if monomial ``d`` divides monomial ``m`` (fieldwise d <= m)."""
    while d:
        if (d & MASK) > (m & MASK):
            return False
        d >>= BITS
        m >>= BITS
    return True


def order_key(m: int) -> tuple:
    """Graded-lex key over the rank order; larger key = larger monomial."""
    vec = exponent_vector(m)
    lex = tuple(vec[i] if i < len(vec) else 0 for i in rank_order())
    return (sum(vec), lex)


def format_monomial(m: int) -> str:
    if m == 0:
        return "1"
    vec = exponent_vector(m)
    parts = []
    for i in rank_order():
        e = vec[i] if i < len(vec) else 0
        if e == 1:
            parts.append(_names[i])
        elif e:
            parts.append(f"{_names[i]}^{e}")
    return "*".join(parts)
