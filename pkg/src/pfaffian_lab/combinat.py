"""Partitions, hooks, two-partition statistics, matchings and shuffle signs."""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterator, NamedTuple, Sequence

from .errors import CellOutsidePartition, LengthExceedsN, NotASubset, OddSize, ParseError
from .linalg import matching_crossing_sign, matching_permutation_sign, matchings


class Partition(tuple):
    """Non-increasing tuple of positive parts; trailing zeros are dropped."""

    def __new__(cls, parts: Sequence[int] = ()):
        t = [int(p) for p in parts]
        while t and t[-1] == 0:
            t.pop()
        if any(p <= 0 for p in t):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(t, t[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, t)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        s = text.strip()
        if not re.fullmatch(r"\[\s*(\d+\s*(,\s*\d+\s*)*)?\]", s):
            raise ParseError(f"malformed partition {text!r}; expected e.g. [4,3,1,1]")
        body = s[1:-1].strip()
        parts = [int(p) for p in body.split(",")] if body else []
        try:
            return cls(parts)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition([sum(1 for p in self if p >= j) for j in range(1, self[0] + 1)])

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self, 1):
            for j in range(1, p + 1):
                yield (i, j)

    def __contains__(self, cell) -> bool:
        if isinstance(cell, tuple) and len(cell) == 2:
            i, j = cell
            return 1 <= i <= len(self) and 1 <= j <= self[i - 1]
        return super().__contains__(cell)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise LengthExceedsN(f"length {len(self)} exceeds {n}")
        return tuple(self) + (0,) * (n - len(self))

    def shifted(self, n: int) -> tuple[int, ...]:
        """``(lambda_i + n - i)_{i=1..n}``."""
        return tuple(p + n - i for i, p in enumerate(self.padded(n), 1))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def hook(lam: Sequence[int], i: int, j: int) -> int:
    lam = as_partition(lam)
    if (i, j) not in lam:
        raise CellOutsidePartition(f"({i},{j}) not in {lam}")
    return lam.part(i) + lam.conjugate().part(j) - i - j + 1


def hook_two(lam: Sequence[int], mu: Sequence[int], i: int, j: int) -> int:
    """Generalized hook: row i of lam against column j of mu (may be <= 0)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if (i, j) not in lam:
        raise CellOutsidePartition(f"({i},{j}) not in {lam}")
    return lam.part(i) + mu.conjugate().part(j) - i - j + 1


def hooks(lam: Sequence[int]) -> list[int]:
    lam = as_partition(lam)
    conj = lam.conjugate()
    return [lam.part(i) + conj.part(j) - i - j + 1 for i, j in lam.cells()]


def hooks_two(lam: Sequence[int], mu: Sequence[int]) -> list[int]:
    lam, mu = as_partition(lam), as_partition(mu)
    conj = mu.conjugate()
    return [lam.part(i) + conj.part(j) - i - j + 1 for i, j in lam.cells()]


def n_stat(lam: Sequence[int]) -> int:
    return sum((i - 1) * p for i, p in enumerate(as_partition(lam), 1))


def cell_difference(lam: Sequence[int], mu: Sequence[int]) -> list[tuple[int, int]]:
    lam, mu = as_partition(lam), as_partition(mu)
    return [c for c in lam.cells() if c not in mu]


def n_two(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Sum over cells of lam - mu of (lam'_j - i)."""
    conj = as_partition(lam).conjugate()
    return sum(conj.part(j) - i for i, j in cell_difference(lam, mu))


def n_two_alt(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Sum over cells of lam - mu of (i - mu'_j - 1); equals :func:`n_two`."""
    conj = as_partition(mu).conjugate()
    return sum(i - conj.part(j) - 1 for i, j in cell_difference(lam, mu))


class PQStats(NamedTuple):
    P: int
    Q: int
    lam_minus_mu: int
    mu_minus_lam: int


def _tri(k: int) -> int:
    return k * (k + 1) // 2 if k > 0 else 0


def pq_stats(lam: Sequence[int], mu: Sequence[int], n: int) -> PQStats:
    lam, mu = as_partition(lam), as_partition(mu)
    lp, mp = lam.padded(n), mu.padded(n)
    k = lam.shifted(n)
    ell = mu.shifted(n)
    nn = [sum(1 for r in mp if r > li) for li in lp]
    mm = [sum(1 for r in lp if r >= mj) for mj in mp]
    P = sum(nn[i] * k[i] for i in range(n)) + sum(mm[j] * ell[j] for j in range(n))
    # total of the negative generalized-hook exponents, row by row
    Q = 0
    for i in range(1, n + 1):
        if lp[i - 1] >= mp[i - 1]:
            Q += _tri(i - 1 - nn[i - 1])
        else:
            Q += _tri(i - 1 - mm[i - 1])
    return PQStats(P, Q, len(cell_difference(lam, mu)), len(cell_difference(mu, lam)))


def pq_pairwise(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """P computed from its pairwise definition; an independent check on :func:`pq_stats`."""
    lp, mp = as_partition(lam).padded(n), as_partition(mu).padded(n)
    k = as_partition(lam).shifted(n)
    ell = as_partition(mu).shifted(n)
    return sum(ell[j] if lp[i] >= mp[j] else k[i] for i in range(n) for j in range(n))


def q_lattice(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """Q as the sum of |negative| labels over the two lattice-point sets."""
    lam, mu = as_partition(lam), as_partition(mu)
    lp, mp = lam.padded(n), mu.padded(n)
    total = 0
    for i in range(1, n + 1):
        ni = sum(1 for r in mp if r > lp[i - 1])
        total += sum(i - 1 - y for y in range(ni, lp[i - 1] + n) if y < i - 1)
    for j in range(1, n + 1):
        mj = sum(1 for r in lp if r >= mp[j - 1])
        total += sum(j - 1 - x for x in range(mj, mp[j - 1] + n) if x < j - 1)
    return total


def strange_sides(lam: Sequence[int], mu: Sequence[int], n: int) -> tuple[int, int]:
    """Both sides of the statistic identity linking P, Q, n(.,.) and the shifted parts."""
    st = pq_stats(lam, mu, n)
    left = st.lam_minus_mu + st.mu_minus_lam + 2 * n_two(lam, mu) + 2 * n_two(mu, lam) + 2 * st.P - 2 * st.Q
    k = as_partition(lam).shifted(n)
    ell = as_partition(mu).shifted(n)
    right = sum((2 * i - 1) * k[i - 1] for i in range(1, n + 1)) + sum(
        (2 * j - 1) * ell[j - 1] for j in range(1, n + 1)
    )
    return left, right


# enumeration


def _partitions_of(n: int, max_part: int, max_len: int | None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    for p in _partitions_of(n, n if max_part is None else max_part, max_length):
        yield Partition(p)


def enumerate_partitions(max_size: int, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions with |lam| <= max_size and length <= max_length, size then reverse-lex."""
    for s in range(max_size + 1):
        yield from partitions_of(s, max_length)


def partitions_in_box(max_part: int, max_length: int) -> Iterator[Partition]:
    for s in range(max_part * max_length + 1):
        yield from partitions_of(s, max_length, max_part)


PerfectMatching = tuple


def enumerate_matchings(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    if n % 2:
        raise OddSize(f"no perfect matchings of odd n={n}")
    yield from matchings(range(1, n + 1))


def matching_signs(blocks) -> tuple[int, int]:
    return matching_permutation_sign(blocks), matching_crossing_sign(blocks)


def shuffle_sign(I: Sequence[int], S: Sequence[int]) -> int:
    """(-1)**s with s = #{(i, j): i in I, j in S - I, j < i}."""
    sset = set(S)
    iset = set(I)
    if not iset <= sset:
        raise NotASubset(f"{sorted(iset - sset)} not in S")
    rest = [j for j in S if j not in iset]
    s = sum(1 for i in iset for j in rest if j < i)
    return -1 if s % 2 else 1


def hook_multiset(lam: Sequence[int]) -> Counter:
    return Counter(hooks(lam))
