from __future__ import annotations

import random

import pytest

from pfaffian_lab.errors import ExplosionGuard, NotAcyclic, ParseError
from pfaffian_lab.exactring import Poly
from pfaffian_lab.lattice import (
    WeightedDag,
    grid_dag,
    is_compatible,
    lgv_determinant,
    nonintersecting_gf,
    path_gf,
    random_dag,
    signed_gf,
)
from pfaffian_lab.symfun import complete_homogeneous


def unit_grid(w: int, h: int) -> WeightedDag:
    return grid_dag((0, w), (0, h), weight=lambda i, j: 1)


def test_path_gf_examples():
    D = unit_grid(1, 1)
    assert path_gf(D, D.vid((1, 1)), D.vid((0, 0))) == 0
    assert path_gf(D, D.vid((0, 0)), D.vid((0, 0))) == 1
    assert path_gf(D, D.vid((0, 0)), D.vid((1, 1))) == 2
    assert len(D.paths(D.vid((0, 0)), D.vid((1, 1)))) == 2


def test_grid_gf_is_complete_homogeneous():
    # columns 0..r weighted x_j: the path from (0,0) to (k, r) sees h_k(x_0..x_r)
    r = 3
    D = grid_dag((0, 4), (0, r))
    xs = [Poly.var(f"x{j}") for j in range(r + 1)]
    for k in range(5):
        assert path_gf(D, D.vid((0, 0)), D.vid((k, r))) == complete_homogeneous(k, xs)


def test_single_path_family():
    D = grid_dag((0, 2), (0, 2))
    u, v = D.vid((0, 0)), D.vid((2, 2))
    assert nonintersecting_gf(D, [u], [v]) == path_gf(D, u, v)
    assert signed_gf(D, [u], [v]) == path_gf(D, u, v)
    assert is_compatible(D, [u], [v])


def test_lgv_on_three_by_three_grid():
    D = grid_dag((0, 2), (0, 2))
    us = [D.vid((0, 0)), D.vid((1, 0))]
    vs = [D.vid((1, 2)), D.vid((2, 2))]
    assert is_compatible(D, us, vs)
    f0 = nonintersecting_gf(D, us, vs)
    assert f0 and f0 == lgv_determinant(D, us, vs)
    assert f0 == signed_gf(D, us, vs)
    assert nonintersecting_gf(D, us, vs[::-1]) == 0


def test_reversed_sinks_are_not_compatible():
    D = unit_grid(4, 2)
    us = [D.vid((0, 0)), D.vid((2, 0))]
    vs = [D.vid((2, 2)), D.vid((4, 2))]
    assert is_compatible(D, us, vs)
    assert not is_compatible(D, us, vs[::-1])


def test_signed_gf_equals_determinant_on_random_dags():
    rng = random.Random(2024)
    for _ in range(50):
        D = random_dag(rng, rng.randint(4, 8))
        m = rng.randint(1, 3)
        us = rng.sample(range(D.n), m)
        vs = rng.sample(range(D.n), m)
        assert signed_gf(D, us, vs) == lgv_determinant(D, us, vs)


def test_cycle_and_multi_edge_rejected():
    with pytest.raises(NotAcyclic):
        WeightedDag(2, [(0, 1, 1), (1, 0, 1)])
    with pytest.raises(ValueError):
        WeightedDag(2, [(0, 1, 1), (0, 1, 2)])


def test_explosion_guard():
    D = unit_grid(6, 6)
    us = [D.vid((0, 0)), D.vid((1, 0))]
    vs = [D.vid((5, 6)), D.vid((6, 6))]
    with pytest.raises(ExplosionGuard):
        nonintersecting_gf(D, us, vs, guard=10)


def test_text_round_trip():
    D = grid_dag((0, 1), (0, 1))
    text = D.to_text()
    assert text.splitlines()[0] == "vertex 4"
    E = WeightedDag.from_text(text)
    assert E.edges() == D.edges()
    assert path_gf(E, 0, 3) == path_gf(D, 0, 3)
    with pytest.raises(ParseError):
        WeightedDag.from_text("edge 0 1 x1")
