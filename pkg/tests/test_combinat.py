from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strandalg.combinat import (
    complement,
    enum_multisets,
    enum_subsets,
    factors_through_degenerate,
    interleaved,
    interleaved_pair_count,
    is_degenerate,
    multisets_between,
    poset_leq,
    rank,
    unit_diff,
)


def subsets(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(0, n)).flatmap(
            lambda nd: st.tuples(st.just(nd[0]), st.lists(st.sampled_from(range(1, nd[0] + 1)), min_size=nd[1], max_size=nd[1], unique=True).map(lambda xs: tuple(sorted(xs))))
        )
    )


def test_enum_subsets_examples():
    assert enum_subsets(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert enum_subsets(3, 0) == [()]
    assert enum_subsets(2, 3) == []


def test_enum_subsets_is_colex_and_complete():
    for n in range(0, 8):
        for d in range(0, n + 1):
            S = enum_subsets(n, d)
            assert len(S) == comb(n, d)
            assert S == sorted(S, key=lambda I: I[::-1])
            assert set(S) == set(combinations(range(1, n + 1), d))


def test_enum_multisets_count():
    for n in range(1, 6):
        for d in range(0, 4):
            assert len(enum_multisets(n, d)) == comb(n + d - 1, d)


def test_poset_leq_examples():
    assert poset_leq((1, 2), (2, 3))
    assert poset_leq((1, 4), (3, 4))
    assert not poset_leq((2, 3), (1, 4))
    with pytest.raises(ValueError):
        poset_leq((1, 3), (2, 2))
    with pytest.raises(ValueError):
        poset_leq((1, 2), (1, 2, 3))


def test_rank_examples():
    assert rank((1, 2, 3)) == 0
    assert rank((3, 4, 5)) == 6
    for n in range(1, 8):
        for d in range(1, n + 1):
            assert rank(tuple(range(n - d + 1, n + 1))) == d * (n - d)


def test_complement_examples():
    assert complement((1, 4), 4) == (2, 3)
    assert complement((1, 2, 3), 5) == (4, 5)
    for n in range(0, 9):
        for d in range(0, n + 1):
            for I in enum_subsets(n, d):
                assert complement(complement(I, n), n) == I


def test_interleaved_examples():
    assert interleaved((1, 2), (1, 3))
    assert not interleaved((1, 2), (2, 3))
    for I in enum_subsets(5, 2):
        assert interleaved(I, I)
    assert sum(interleaved(I, J) for I in enum_subsets(3, 2) for J in enum_subsets(3, 2)) == 5


def test_unit_diff_examples():
    assert unit_diff((1, 2), (2, 3))
    assert not unit_diff((1, 4), (3, 4))
    for I in enum_subsets(5, 3):
        assert unit_diff(I, I)


def test_factors_through_degenerate_examples():
    assert factors_through_degenerate((1, 2), (2, 3))
    for I in enum_subsets(5, 2):
        assert not factors_through_degenerate(I, I)
    with pytest.raises(ValueError):
        factors_through_degenerate((2, 3), (1, 4))


def test_degenerate_factoring_closed_form():
    # closed form: some j_a >= i_{a+1}
    for n in range(1, 7):
        for d in range(1, 4):
            for I in enum_subsets(n, d):
                for J in enum_subsets(n, d):
                    if not poset_leq(I, J):
                        continue
                    closed = any(J[a] >= I[a + 1] for a in range(d - 1))
                    assert factors_through_degenerate(I, J) == closed
                    assert interleaved(I, J) == (not closed)


def test_multisets_between_brute_force():
    for I in enum_multisets(4, 2):
        for J in enum_multisets(4, 2):
            if all(i <= j for i, j in zip(I, J)):
                brute = [K for K in enum_multisets(4, 2) if all(i <= k <= j for i, k, j in zip(I, K, J))]
                assert sorted(multisets_between(I, J)) == sorted(brute)


def test_interleaved_pair_count_brute_force():
    assert interleaved_pair_count(3, 1) == 6
    assert interleaved_pair_count(3, 2) == 5
    for n in range(1, 9):
        for d in range(1, n + 1):
            S = enum_subsets(n, d)
            brute = sum(1 for I in S for J in S if interleaved(I, J))
            assert brute == comb(n + d, 2 * d) == interleaved_pair_count(n, d)


@given(subsets())
def test_rank_nonnegative_and_minimal(nI):
    _, I = nI
    assert rank(I) >= 0
    assert (rank(I) == 0) == (I == tuple(range(1, len(I) + 1)))


@given(subsets(), st.data())
def test_poset_leq_is_a_partial_order(nI, data):
    n, I = nI
    d = len(I)
    S = enum_subsets(n, d)
    J = data.draw(st.sampled_from(S))
    K = data.draw(st.sampled_from(S))
    assert poset_leq(I, I)
    if poset_leq(I, J) and poset_leq(J, I):
        assert I == J
    if poset_leq(I, J) and poset_leq(J, K):
        assert poset_leq(I, K)
    # interleaved implies ordered, and rank is monotone
    if interleaved(I, J):
        assert poset_leq(I, J) and rank(I) <= rank(J)


@given(subsets())
def test_degenerate_only_for_repeats(nI):
    _, I = nI
    assert not is_degenerate(I)
    if I:
        assert is_degenerate(I[:1] + I)
