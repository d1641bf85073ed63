from __future__ import annotations

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from pfaffian_lab.combinat import (
    Partition,
    enumerate_matchings,
    enumerate_partitions,
    hook,
    hook_multiset,
    hook_two,
    hooks,
    n_stat,
    n_two,
    n_two_alt,
    partitions_in_box,
    pq_stats,
    shuffle_sign,
    strange_sides,
)
from pfaffian_lab.errors import CellOutsidePartition, LengthExceedsN, NotASubset, OddSize, ParseError

partitions = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_hook_examples():
    assert hook((1,), 1, 1) == 1
    assert [hook((2, 1), i, j) for i, j in ((1, 1), (1, 2), (2, 1))] == [3, 1, 1]
    with pytest.raises(CellOutsidePartition):
        hook((1,), 2, 1)


def test_hook_two_filled_diagram():
    lam, mu = (4, 3, 1, 1), (3, 3)
    rows = [[hook_two(lam, mu, i, j) for j in range(1, lam[i - 1] + 1)] for i in range(1, 5)]
    assert rows == [[5, 4, 3, 0], [3, 2, 1], [0], [-1]]
    assert hook_two((1,), (), 1, 1) == 0


@given(partitions)
def test_hook_two_on_the_diagonal_is_the_hook(lam):
    for i, j in lam.cells():
        assert hook_two(lam, lam, i, j) == hook(lam, i, j)


def test_n_statistics():
    assert n_stat((3, 2)) == 2
    assert n_two((3, 2), (3, 2)) == 0
    assert n_two((4, 3, 1, 1), (3, 3)) == 1
    assert n_two((3, 3), (4, 3, 1, 1)) == 0


def test_both_n_two_forms_agree():
    box = list(partitions_in_box(4, 4))
    for lam in box:
        for mu in box:
            assert n_two(lam, mu) == n_two_alt(lam, mu)


def test_pq_stats_examples():
    # the worked example's exponents 64 and 4 enter the bookkeeping as 2P and 2Q
    st_ = pq_stats((4, 3, 1, 1), (3, 3), 4)
    assert (st_.P, st_.Q, st_.lam_minus_mu, st_.mu_minus_lam) == (32, 2, 3, 0)
    assert strange_sides((4, 3, 1, 1), (3, 3), 4) == (65, 65)
    assert tuple(pq_stats((), (), 1)) == (0, 0, 0, 0)
    with pytest.raises(LengthExceedsN):
        pq_stats((1, 1, 1), (), 2)


def test_strange_identity_parts_at_most_three():
    for n in range(1, 4):
        box = list(partitions_in_box(3, n))
        for lam in box:
            for mu in box:
                left, right = strange_sides(lam, mu, n)
                assert left == right


def test_enumerate_partitions_examples():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(3)) == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    assert list(enumerate_partitions(4, 2)) == [(), (1,), (2,), (1, 1), (3,), (2, 1), (4,), (3, 1), (2, 2)]


def test_enumerate_partitions_counts():
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    got = [0] * 9
    for lam in enumerate_partitions(8):
        got[sum(lam)] += 1
    assert got == counts


def test_enumerate_matchings():
    assert [sum(1 for _ in enumerate_matchings(n)) for n in (2, 4, 8)] == [1, 3, 105]
    for m in enumerate_matchings(6):
        assert sorted(v for b in m for v in b) == list(range(1, 7))
        assert all(a < b for a, b in m)
        assert [b[0] for b in m] == sorted(b[0] for b in m)
    with pytest.raises(OddSize):
        list(enumerate_matchings(3))


def test_shuffle_sign_examples():
    assert shuffle_sign([1, 2], [1, 2, 3, 4]) == 1
    # inversions (2,1), (4,1), (4,3)
    assert shuffle_sign([2, 4], [1, 2, 3, 4]) == -1
    with pytest.raises(NotASubset):
        shuffle_sign([5], [1, 2])


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_shuffle_sign_congruence(N):
    S = list(range(1, 2 * N + 1))
    for k in range(0, N + 1):
        for I in combinations(S, 2 * k):
            assert shuffle_sign(I, S) == (-1) ** (sum(I) - k)


@given(partitions)
def test_conjugation(lam):
    conj = lam.conjugate()
    assert conj.conjugate() == lam
    assert conj.size == lam.size
    assert hook_multiset(lam) == hook_multiset(conj)
    assert sorted(hooks(lam)) == sorted(hooks(conj))


def test_partition_text():
    lam = Partition.parse("[4,3,1,1]")
    assert lam == (4, 3, 1, 1) and str(lam) == "[4,3,1,1]"
    assert Partition.parse("[]") == ()
    with pytest.raises(ParseError):
        Partition.parse("[1,2]")


def test_box_sizes():
    assert sum(1 for _ in partitions_in_box(3, 3)) == comb(6, 3)
