"""Weighted acyclic digraphs, path enumeration and non-intersecting path families."""

from __future__ import annotations

import random
from graphlib import CycleError, TopologicalSorter
from itertools import permutations
from typing import Hashable, Iterable, Sequence

from .errors import ExplosionGuard, NotAcyclic, ParseError
from .exactring import ONE, ZERO, Poly, parse_poly
from .linalg import Matrix, det

DEFAULT_GUARD = 10**7


class WeightedDag:
    """Finite acyclic digraph on vertices ``0..n-1`` with polynomial edge weights."""

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int, object]] = (), labels: Sequence[Hashable] | None = None):
        self.n = n_vertices
        self.out: list[list[tuple[int, Poly]]] = [[] for _ in range(n_vertices)]
        self.inc: list[list[tuple[int, Poly]]] = [[] for _ in range(n_vertices)]
        seen = set()
        for u, v, w in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u},{v}) outside 0..{n_vertices - 1}")
            if (u, v) in seen:
                raise ValueError(f"multiple edge ({u},{v})")
            seen.add((u, v))
            w = w if isinstance(w, Poly) else Poly.const(w)
            self.out[u].append((v, w))
            self.inc[v].append((u, w))
        for lst in self.out:
            lst.sort(key=lambda e: e[0])
        ts = TopologicalSorter({v: [u for u, _ in self.inc[v]] for v in range(n_vertices)})
        try:
            self.order = list(ts.static_order())
        except CycleError as exc:
            raise NotAcyclic(f"cycle through {exc.args[1]}") from None
        self.labels = list(labels) if labels is not None else list(range(n_vertices))
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self._gf: dict[int, list[Poly]] = {}
        self._paths: dict[tuple[int, int], list] = {}

    def vid(self, label) -> int:
        return self.index[label]

    def edges(self) -> list[tuple[int, int, Poly]]:
        return [(u, v, w) for u in range(self.n) for v, w in self.out[u]]

    # generating functions

    def _from(self, u: int) -> list[Poly]:
        if u not in self._gf:
            h = [ZERO] * self.n
            h[u] = ONE
            pos = {v: k for k, v in enumerate(self.order)}
            for v in self.order[pos[u]:]:
                if not h[v]:
                    continue
                for w_, wt in self.out[v]:
                    h[w_] = h[w_] + h[v] * wt
            self._gf[u] = h
        return self._gf[u]

    def paths(self, u: int, v: int) -> list[tuple[tuple[int, ...], Poly]]:
        """All u -> v paths with their weights, in deterministic order."""
        key = (u, v)
        if key not in self._paths:
            good = self._ancestors(v)
            out = []

            def rec(x: int, trail: list[int], wt: Poly):
                if x == v:
                    out.append((tuple(trail), wt))
                    return
                for y, w in self.out[x]:
                    if y in good:
                        trail.append(y)
                        rec(y, trail, wt * w)
                        trail.pop()

            if u == v:
                out.append(((u,), ONE))
            else:
                rec(u, [u], ONE)
            self._paths[key] = out
        return self._paths[key]

    def _ancestors(self, v: int) -> set[int]:
        """Vertices with a path to v, including v."""
        stack, seen = [v], {v}
        while stack:
            x = stack.pop()
            for y, _ in self.inc[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def to_text(self) -> str:
        lines = [f"vertex {self.n}"]
        for u, v, w in self.edges():
            lines.append(f"edge {u} {v} {str(w).replace(' ', '')}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "WeightedDag":
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or lines[0][0] != "vertex" or len(lines[0]) != 2:
            raise ParseError("missing 'vertex N' header")
        n = int(lines[0][1])
        edges = []
        for parts in lines[1:]:
            if parts[0] != "edge" or len(parts) < 4:
                raise ParseError(f"bad edge line: {' '.join(parts)}")
            edges.append((int(parts[1]), int(parts[2]), parse_poly("".join(parts[3:]))))
        return cls(n, edges)


def path_gf(D: WeightedDag, u: int, v: int) -> Poly:
    """Sum of weights of all directed u -> v paths (1 when u == v)."""
    return D._from(u)[v]


def path_matrix(D: WeightedDag, us: Sequence[int], vs: Sequence[int]) -> Matrix:
    return Matrix([[path_gf(D, u, v) for v in vs] for u in us], len(vs))


def lgv_determinant(D: WeightedDag, us: Sequence[int], vs: Sequence[int]) -> Poly:
    return det(path_matrix(D, us, vs))


def _guard(D: WeightedDag, us, vs, guard: int) -> list[list]:
    lists = [D.paths(u, v) for u, v in zip(us, vs)]
    total = 1
    for lst in lists:
        total *= len(lst)
        if total > guard:
            raise ExplosionGuard(f"more than {guard} path tuples")
    return lists


def nonintersecting_gf(D: WeightedDag, us: Sequence[int], vs: Sequence[int], guard: int = DEFAULT_GUARD) -> Poly:
    """Weight sum of vertex-disjoint path tuples (u_i -> v_i)."""
    if len(us) != len(vs):
        raise ValueError("source and sink tuples differ in length")
    lists = _guard(D, us, vs, guard)
    out = ZERO
    m = len(lists)

    def rec(k: int, used: set, wt: Poly):
        nonlocal out
        if k == m:
            out = out + wt
            return
        for path, w in lists[k]:
            if used.isdisjoint(path):
                rec(k + 1, used | set(path), wt * w)

    rec(0, set(), ONE)
    return out


def signed_gf(D: WeightedDag, us: Sequence[int], vs: Sequence[int], guard: int = DEFAULT_GUARD) -> Poly:
    """sum over pi of sgn(pi) F0(u^pi, v)."""
    out = ZERO
    m = len(us)
    for p in permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])
        f = nonintersecting_gf(D, [us[k] for k in p], vs, guard)
        out = out - f if inv % 2 else out + f
    return out


def is_compatible(D: WeightedDag, us: Sequence[int], vs: Sequence[int], guard: int = DEFAULT_GUARD) -> bool:
    """Every u_i -> v_l path meets every u_j -> v_k path whenever i < j and k < l.

    The tuples may differ in length (sources against a larger sink set).
    """
    m, n = len(us), len(vs)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(n):
                for l in range(k + 1, n):
                    P = D.paths(us[i], vs[l])
                    Q = D.paths(us[j], vs[k])
                    if len(P) * len(Q) > guard:
                        raise ExplosionGuard(f"more than {guard} path pairs")
                    for p, _ in P:
                        sp = set(p)
                        for q, _ in Q:
                            if sp.isdisjoint(q):
                                return False
    return True


def grid_dag(x_range: tuple[int, int], y_range: tuple[int, int], weight=None) -> WeightedDag:
    """Lattice points (i, j) with steps (1,0) weighted ``weight(i, j)`` (default x_j) and (0,1) weighted 1."""
    weight = weight or (lambda i, j: Poly.var(f"x{j}"))
    x0, x1 = x_range
    y0, y1 = y_range
    labels = [(i, j) for j in range(y0, y1 + 1) for i in range(x0, x1 + 1)]
    idx = {lab: k for k, lab in enumerate(labels)}
    edges = []
    for (i, j), k in idx.items():
        if (i + 1, j) in idx:
            edges.append((k, idx[(i + 1, j)], weight(i, j)))
        if (i, j + 1) in idx:
            edges.append((k, idx[(i, j + 1)], 1))
    return WeightedDag(len(labels), edges, labels)


def random_dag(rng: random.Random, n_vertices: int, edge_prob: float = 0.45, variables: Sequence[str] = ("x1", "x2", "x3")) -> WeightedDag:
    """Random DAG on vertices ordered 0..n-1; weights are 1 or a single variable."""
    edges = []
    for u in range(n_vertices):
        for v in range(u + 1, n_vertices):
            if rng.random() < edge_prob:
                w = 1 if rng.random() < 0.4 else Poly.var(rng.choice(list(variables)))
                edges.append((u, v, w))
    return WeightedDag(n_vertices, edges)


__all__ = [
    "DEFAULT_GUARD",
    "WeightedDag",
    "grid_dag",
    "is_compatible",
    "lgv_determinant",
    "nonintersecting_gf",
    "path_gf",
    "path_matrix",
    "random_dag",
    "signed_gf",
]
