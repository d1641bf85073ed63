"""Dense matrices over exact rings: determinants, Pfaffians, copfaffians.

Entries may be ``int``, ``Fraction``, :class:`Poly` or :class:`RationalFunction`.
Python indexing (``M[i][j]``, ``M.at(i, j)``) is 0-based; :class:`IndexSet`
and every function taking one use the 1-based convention, since sign rules
such as ``(-1)**(|I|+|J|)`` depend on it.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotAMatching,
    NotSkewSymmetric,
    NotSquare,
    OddSize,
    ParseError,
)
from .exactring import Poly, RationalFunction, parse_poly


# ring helpers


def exact_div(a, b):
    """``a / b`` where the quotient is known to lie in the ring of ``a``."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} not divisible by {b}")
        return q
    if isinstance(a, Poly) or isinstance(b, Poly):
        if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
            return a / b
        if not isinstance(a, Poly):
            a = Poly.const(a)
        return a.exact_div(b)
    return a / b


def is_zero(x) -> bool:
    return not x


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


# index sets


class IndexSet(tuple):
    """Strictly increasing tuple of 1-based indices."""

    def __new__(cls, items: Iterable[int] = (), n: int | None = None):
        t = tuple(int(i) for i in items)
        for a, b in zip(t, t[1:]):
            if a >= b:
                raise ValueError(f"index set must be strictly increasing: {t}")
        if t and t[0] < 1:
            raise IndexOutOfRange(f"indices are 1-based: {t}")
        if n is not None and t and t[-1] > n:
            raise IndexOutOfRange(f"index {t[-1]} exceeds {n}")
        return super().__new__(cls, t)

    @classmethod
    def of(cls, items: Iterable[int]) -> "IndexSet":
        return cls(sorted(set(items)))

    @property
    def weight(self) -> int:
        """Sum of the indices."""
        return sum(self)

    def complement(self, n: int) -> "IndexSet":
        s = set(self)
        return IndexSet(i for i in range(1, n + 1) if i not in s)

    def __repr__(self) -> str:
        return f"IndexSet({list(self)})"


def subsets(n: int, k: int) -> Iterator[IndexSet]:
    """All k-subsets of [n] in lexicographic order."""
    for c in combinations(range(1, n + 1), k):
        yield IndexSet(c)


def full(n: int) -> IndexSet:
    return IndexSet(range(1, n + 1))


# matrices


class Matrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: Sequence[Sequence], cols: int | None = None):
        data = [list(r) for r in rows]
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        for r in data:
            if len(r) != self.cols:
                raise DimensionMismatch("ragged rows")
        self._e = data

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], object]) -> "Matrix":
        """Entries ``f(i, j)`` with 1-based ``i, j``."""
        return cls([[f(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)], cols)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    def __getitem__(self, i: int) -> list:
        return self._e[i]

    def at(self, i: int, j: int):
        return self._e[i][j]

    def entry(self, i: int, j: int):
        """1-based access."""
        return self._e[i - 1][j - 1]

    def row_list(self) -> list[list]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix([[self._e[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    T = property(transpose)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self._e], self.cols)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: x * c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other._e)) if other.rows else [() for _ in range(other.cols)]
        out = []
        for r in self._e:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, other.cols)

    __mul__ = __matmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._e, other._e) for a, b in zip(r, s)
        )

    __hash__ = None

    def permuted(self, perm: Sequence[int]) -> "Matrix":
        """``(a_{perm(i) perm(j)})`` for a 1-based permutation."""
        p = [k - 1 for k in perm]
        return type(self)._wrap([[self._e[i][j] for j in p] for i in p])

    @classmethod
    def _wrap(cls, rows):
        return cls(rows)

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        for r in self._e:
            lines.append(" ".join(_entry_text(x) for x in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        toks = text.split()
        if len(toks) < 2:
            raise ParseError("missing 'rows cols' header")
        try:
            r, c = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("header must be two integers") from None
        body = toks[2:]
        if len(body) != r * c:
            raise ParseError(f"expected {r * c} entries, found {len(body)}")
        vals = [_parse_entry(t) for t in body]
        return Matrix([vals[i * c:(i + 1) * c] for i in range(r)], c)

    def __str__(self) -> str:
        cells = [[fmt(x) for x in r] for r in self._e]
        w = max((len(s) for r in cells for s in r), default=1)
        return "\n".join("[" + " ".join(s.rjust(w) for s in r) + "]" for r in cells)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.row_list()!r})"


def _entry_text(x) -> str:
    return fmt(x).replace(" ", "")


def _parse_entry(tok: str):
    p = parse_poly(tok)
    if p.is_constant():
        return p.constant_term
    return p


class SkewMatrix(Matrix):
    """Square skew-symmetric matrix."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence], check: bool = True):
        super().__init__(rows)
        if self.rows != self.cols:
            raise NotSquare(f"{self.rows}x{self.cols}")
        if check:
            for i in range(self.rows):
                if self._e[i][i]:
                    raise NotSkewSymmetric(f"nonzero diagonal at {i + 1}")
                for j in range(i + 1, self.rows):
                    if self._e[j][i] != -self._e[i][j]:
                        raise NotSkewSymmetric(f"a[{j + 1},{i + 1}] != -a[{i + 1},{j + 1}]")

    @classmethod
    def _wrap(cls, rows):
        return cls(rows, check=False)

    @classmethod
    def from_upper(cls, n: int, f: Callable[[int, int], object]) -> "SkewMatrix":
        """Build from ``f(i, j)``, ``1 <= i < j <= n``."""
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = f(i + 1, j + 1)
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows, check=False)

    @classmethod
    def from_upper_list(cls, n: int, values: Sequence) -> "SkewMatrix":
        """Upper-triangle entries in row-major order ``a12, a13, ..., a_{n-1,n}``."""
        if len(values) != n * (n - 1) // 2:
            raise DimensionMismatch(f"need {n * (n - 1) // 2} upper entries for size {n}")
        it = iter(values)
        pos = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos[(i, j)] = next(it)
        return cls.from_upper(n, lambda i, j: pos[(i, j)])

    @classmethod
    def from_matrix(cls, m: Matrix) -> "SkewMatrix":
        return cls(m.row_list())

    @classmethod
    def symbolic(cls, n: int, prefix: str = "a") -> "SkewMatrix":
        """Generic skew matrix with entries ``a12, a13, ...`` (``a1_10`` style beyond 9)."""
        sep = "" if n < 10 else "_"
        return cls.from_upper(n, lambda i, j: Poly.var(f"{prefix}{i}{sep}{j}"))

    @property
    def size(self) -> int:
        return self.rows

    def upper(self) -> list:
        return [self._e[i][j] for i in range(self.rows) for j in range(i + 1, self.rows)]

    def to_text(self) -> str:
        return f"skew {self.rows}\n" + " ".join(_entry_text(x) for x in self.upper()) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SkewMatrix":
        toks = text.split()
        if len(toks) < 2 or toks[0] != "skew":
            raise ParseError("missing 'skew N' header")
        try:
            n = int(toks[1])
        except ValueError:
            raise ParseError("size must be an integer") from None
        if n < 0:
            raise ParseError("size must be non-negative")
        body = toks[2:]
        if len(body) != n * (n - 1) // 2:
            raise ParseError(f"expected {n * (n - 1) // 2} upper entries, found {len(body)}")
        return cls.from_upper_list(n, [_parse_entry(t) for t in body])


def read_matrix(text: str) -> Matrix:
    if text.lstrip().startswith("skew"):
        return SkewMatrix.from_text(text)
    return Matrix.from_text(text)


# submatrices and blocks


def submatrix(T: Matrix, I: Sequence[int], J: Sequence[int]) -> Matrix:
    """Rows ``I`` and columns ``J`` (1-based) in the given order."""
    for i in I:
        if not 1 <= i <= T.rows:
            raise IndexOutOfRange(f"row {i} outside 1..{T.rows}")
    for j in J:
        if not 1 <= j <= T.cols:
            raise IndexOutOfRange(f"column {j} outside 1..{T.cols}")
    return Matrix([[T[i - 1][j - 1] for j in J] for i in I], len(J))


def principal(A: Matrix, I: Sequence[int]) -> SkewMatrix:
    """``A^I_I`` as a skew matrix."""
    return SkewMatrix(submatrix(A, I, I).row_list(), check=False)


def block(rows: Sequence[Sequence[Matrix | None]]) -> Matrix:
    """Assemble a block matrix; ``None`` blocks are zero of the implied shape."""
    heights = []
    for r in rows:
        h = {b.rows for b in r if b is not None}
        if len(h) != 1:
            raise DimensionMismatch(f"inconsistent block heights {h}")
        heights.append(h.pop())
    ncols = len(rows[0])
    widths = []
    for c in range(ncols):
        w = {r[c].cols for r in rows if r[c] is not None}
        if len(w) != 1:
            raise DimensionMismatch(f"inconsistent block widths {w}")
        widths.append(w.pop())
    out = []
    for r, h in zip(rows, heights):
        for i in range(h):
            line = []
            for b, w in zip(r, widths):
                line.extend(b[i] if b is not None else [0] * w)
            out.append(line)
    return Matrix(out, sum(widths))


# standard matrices


def J_matrix(m: int) -> Matrix:
    """Anti-diagonal reversal matrix of size m."""
    return Matrix.from_function(m, m, lambda i, j: int(i + j == m + 1))


def zeros(r: int, c: int | None = None) -> Matrix:
    return Matrix.zeros(r, c)


def identity(n: int) -> Matrix:
    return Matrix.identity(n)


def K_matrix(n: int) -> SkewMatrix:
    if n % 2:
        raise OddSize(f"size {n} must be even")
    m = n // 2
    return SkewMatrix(block([[zeros(m), J_matrix(m)], [-J_matrix(m), zeros(m)]]).row_list())


def L_matrix(n: int) -> SkewMatrix:
    if n % 2:
        raise OddSize(f"size {n} must be even")
    m = n // 2
    return SkewMatrix(block([[zeros(m), identity(m)], [-identity(m), zeros(m)]]).row_list())


def P_matrix(n: int, s=None, t=None) -> SkewMatrix:
    """Entries ``s**((i-1)%2 + j%2) * t**(j-i-1)`` for ``i < j``; symbolic s, t by default."""
    s = Poly.var("s") if s is None else s
    t = Poly.var("t") if t is None else t
    return SkewMatrix.from_upper(n, lambda i, j: _pow(s, (i - 1) % 2 + j % 2) * _pow(t, j - i - 1))


def _pow(x, k: int):
    # 0**0 == 1 for plain ints; keep Poly results as Poly
    return x**k


def S_matrix(n: int) -> SkewMatrix:
    return P_matrix(n, 1, 1)


def T_matrix(n: int) -> SkewMatrix:
    return P_matrix(n, 0, 1)


# determinants


def det(M: Matrix):
    """Determinant; Bareiss with exact division, cofactor expansion for small or rational-function input."""
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols}")
    n = M.rows
    if n == 0:
        return 1
    if n <= 4 or any(isinstance(x, RationalFunction) for r in M for x in r):
        return det_laplace(M)
    return det_bareiss(M)


def det_bareiss(M: Matrix):
    n = M.rows
    a = M.row_list()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = piv * a[i][j] - aik * a[k][j]
                a[i][j] = exact_div(num, prev) if prev != 1 else num
            a[i][k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_laplace(M: Matrix):
    """Cofactor expansion along rows, memoized on the set of remaining columns."""
    n = M.rows
    a = M.row_list()
    memo: dict[int, object] = {}

    def rec(row: int, mask: int):
        if row == n:
            return 1
        if mask in memo:
            return memo[mask]
        acc = 0
        pos = 0
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                continue
            x = a[row][j]
            if not is_zero(x):
                sub = rec(row + 1, mask | bit)
                if not is_zero(sub):
                    term = x * sub
                    acc = acc - term if pos & 1 else acc + term
            pos += 1
        memo[mask] = acc
        return acc

    return rec(0, 0)


def det_permutations(M: Matrix):
    """Leibniz sum; an independent oracle for small sizes."""
    from itertools import permutations

    n = M.rows
    acc = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = 1
        for i in range(n):
            term = term * M[i][p[i]]
            if is_zero(term):
                break
        if not is_zero(term):
            acc = acc - term if inv & 1 else acc + term
    return acc


def cofactor_matrix(M: Matrix) -> Matrix:
    """``(Delta(i,j))`` with ``Delta(i,j) = (-1)**(i+j) det(M; j, i)``."""
    n = M.rows
    full_ = list(range(1, n + 1))
    return Matrix.from_function(
        n,
        n,
        lambda i, j: _sign(i + j) * det(submatrix(M, [r for r in full_ if r != j], [c for c in full_ if c != i])),
    )


# pfaffians


class PfaffianMemo:
    """Shared cache for Pfaffians of principal submatrices of one matrix."""

    def __init__(self, A: Matrix):
        if A.rows != A.cols:
            raise NotSquare(f"{A.rows}x{A.cols}")
        self.n = A.rows
        self.a = A.row_list()
        self.cache: dict[int, object] = {0: 1}

    def pf_mask(self, mask: int):
        cache = self.cache
        if mask in cache:
            return cache[mask]
        # iterative-safe recursion depth is n/2, fine for desk sizes
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        row = self.a[i]
        acc = 0
        pos = 0
        r = rest
        while r:
            bit = r & -r
            j = bit.bit_length() - 1
            x = row[j]
            if not is_zero(x):
                sub = self.pf_mask(rest ^ bit)
                if not is_zero(sub):
                    term = x * sub
                    acc = acc - term if pos & 1 else acc + term
            pos += 1
            r ^= bit
        cache[mask] = acc
        return acc

    def pf(self, I: Iterable[int] | None = None):
        """Pfaffian of ``A^I_I`` (1-based I, any order treated as sorted); full matrix by default."""
        if I is None:
            mask = (1 << self.n) - 1
            size = self.n
        else:
            mask = 0
            size = 0
            for i in I:
                if not 1 <= i <= self.n:
                    raise IndexOutOfRange(f"index {i} outside 1..{self.n}")
                mask |= 1 << (i - 1)
                size += 1
        if size % 2:
            raise OddSize(f"Pfaffian of odd size {size}")
        return self.pf_mask(mask)


def pfaffian(A: Matrix, memo: PfaffianMemo | None = None):
    """Pfaffian by expansion along the least surviving row, memoized by surviving index set."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.rows}x{A.cols}")
    if A.rows % 2:
        raise OddSize(f"Pfaffian of odd size {A.rows}")
    return (memo or PfaffianMemo(A)).pf()


def matchings(items: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of ``items`` (sorted); blocks sorted by first element."""
    items = list(items)
    if not items:
        yield ()
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for m in matchings(rest):
            yield ((first, items[k]),) + m


def matching_permutation_sign(blocks: Sequence[tuple[int, int]]) -> int:
    word = [v for b in blocks for v in b]
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return _sign(inv)


def matching_crossing_sign(blocks: Sequence[tuple[int, int]]) -> int:
    cross = 0
    for (a, b), (c, d) in combinations(blocks, 2):
        if a < c < b < d or c < a < d < b:
            cross += 1
    return _sign(cross)


def _validate_matching(blocks, n: int | None = None) -> list[tuple[int, int]]:
    blocks = [tuple(sorted(b)) for b in blocks]
    if any(len(b) != 2 for b in blocks):
        raise NotAMatching("blocks must be pairs")
    seen = sorted(v for b in blocks for v in b)
    n = len(seen) if n is None else n
    if seen != list(range(1, n + 1)):
        raise NotAMatching(f"blocks do not partition [1..{n}]")
    return sorted(blocks)


def matching_sign(blocks: Sequence[tuple[int, int]], n: int | None = None) -> tuple[int, int]:
    """(permutation sign, crossing-count sign) of a perfect matching of [n]."""
    b = _validate_matching(blocks, n)
    return matching_permutation_sign(b), matching_crossing_sign(b)


def pfaffian_combinatorial(A: Matrix):
    """Signed sum over all perfect matchings."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.rows}x{A.cols}")
    if A.rows % 2:
        raise OddSize(f"Pfaffian of odd size {A.rows}")
    acc = 0
    for m in matchings(range(1, A.rows + 1)):
        term = 1
        for i, j in m:
            term = term * A[i - 1][j - 1]
            if is_zero(term):
                break
        if not is_zero(term):
            acc = acc + term if matching_permutation_sign(m) > 0 else acc - term
    return acc


def copfaffian(A: Matrix, i: int, j: int, memo: PfaffianMemo | None = None):
    """``gamma(i, j)`` (1-based), skew in (i, j)."""
    if i == j:
        return 0
    memo = memo or PfaffianMemo(A)
    lo, hi = min(i, j), max(i, j)
    rest = [k for k in range(1, A.rows + 1) if k != lo and k != hi]
    g = memo.pf(rest)
    if (lo + hi - 1) & 1:
        g = -g
    return g if i < j else -g


def copfaffian_matrix(A: Matrix, memo: PfaffianMemo | None = None) -> SkewMatrix:
    if A.rows % 2:
        raise OddSize(f"copfaffian matrix of odd size {A.rows}")
    if A.rows < 2:
        raise OddSize("copfaffian matrix needs size >= 2")
    memo = memo or PfaffianMemo(A)
    return SkewMatrix.from_upper(A.rows, lambda i, j: copfaffian(A, i, j, memo))


def block_pfaffian_msf(T: Matrix, A: Matrix):
    """``Pf(T A tT)``."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.rows}x{A.cols}")
    if T.cols != A.rows:
        raise DimensionMismatch(f"T is {T.rows}x{T.cols}, A is {A.rows}x{A.cols}")
    if T.rows % 2:
        raise OddSize(f"m = {T.rows} must be even")
    Q = T @ A @ T.transpose()
    return pfaffian(Q)
