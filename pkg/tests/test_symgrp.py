import pytest
from hypothesis import given
from hypothesis import strategies as st

from strandalg.combinat import enum_subsets, poset_leq
from strandalg.symgrp import (
    admissible_perms,
    all_perms,
    bruhat_leq,
    canonical_word,
    compose,
    crossing_sequence,
    from_cycle,
    identity,
    interval,
    inv_count,
    inverse,
    is_reduced,
    parse_oneline,
    pi0,
    reduced_words,
    simple,
    subword_closure,
    word_to_perm,
)

W0_S3 = from_cycle((1, 3), 3)


def perms(max_d=6):
    return st.integers(1, max_d).flatmap(lambda d: st.permutations(list(range(1, d + 1))).map(tuple))


def test_cycle_notation():
    assert from_cycle((2, 1), 3) == (2, 1, 3)
    assert from_cycle((3, 2), 3) == (1, 3, 2)
    assert from_cycle((2, 3, 1), 3) == (2, 3, 1)
    assert from_cycle((3, 2, 1), 3) == (3, 1, 2)
    assert W0_S3 == (3, 2, 1)


def test_word_to_perm_examples():
    assert word_to_perm((), 3) == identity(3)
    assert word_to_perm((1,), 3) == from_cycle((2, 1), 3)
    assert word_to_perm((1, 2, 1), 3) == word_to_perm((2, 1, 2), 3) == W0_S3
    with pytest.raises(ValueError):
        word_to_perm((3,), 3)


def test_inv_count_examples():
    assert inv_count(identity(4)) == 0
    for d in range(1, 7):
        assert inv_count(tuple(range(d, 0, -1))) == d * (d - 1) // 2
    assert inv_count(W0_S3) == 3


def test_crossing_sequence_examples():
    assert crossing_sequence(()) == ()
    assert crossing_sequence((1,), 2) == (frozenset({1, 2}),)
    assert crossing_sequence((1, 2, 1), 3) == (frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}))
    with pytest.raises(ValueError):
        crossing_sequence((1, 1), 2)


def test_canonical_word_examples():
    assert canonical_word(identity(3)) == ()
    assert canonical_word(W0_S3) == (1, 2, 1)
    assert canonical_word((2, 1)) == (1,)


def test_canonical_word_is_lex_min_reduced_word():
    for d in range(1, 6):
        for p in all_perms(d):
            words = reduced_words(p)
            assert canonical_word(p) == min(words)
            assert all(len(w) == inv_count(p) and word_to_perm(w, d) == p for w in words)


def test_reduced_word_count_of_longest_s4():
    assert len(reduced_words((4, 3, 2, 1))) == 16


def test_bruhat_examples():
    s21, s32 = from_cycle((2, 1), 3), from_cycle((3, 2), 3)
    assert bruhat_leq(s21, from_cycle((2, 3, 1), 3))
    assert not bruhat_leq(s21, s32)
    for p in all_perms(4):
        assert bruhat_leq(identity(4), p) and bruhat_leq(p, p)


def test_bruhat_matches_subword_property():
    for d in range(1, 5):
        for t in all_perms(d):
            below = subword_closure(canonical_word(t), d)
            for s in all_perms(d):
                assert bruhat_leq(s, t) == (s in below)


def test_interval_examples():
    iv = interval(identity(3))
    assert iv.elements == [identity(3)] and iv.covers == []
    iv = interval(W0_S3)
    assert len(iv) == 6 and iv.level_sizes() == [1, 2, 2, 1]
    assert len(iv.covers) == 8
    iv = interval((2, 1))
    assert len(iv) == 2 and len(iv.covers) == 1


def test_interval_covers_are_bruhat_covers():
    for t in all_perms(4):
        iv = interval(t)
        cover_set = set(iv.covers)
        for s in iv.elements:
            for u in iv.elements:
                is_cover = bruhat_leq(s, u) and inv_count(u) == inv_count(s) + 1
                assert is_cover == ((s, u) in cover_set)


def test_pi0_examples():
    assert pi0((1, 2, 3), (3, 4, 5)) == W0_S3
    assert pi0((1, 2), (2, 3)) == (2, 1)
    assert pi0((2, 3), (1, 4)) is None
    for I in enum_subsets(5, 3):
        assert pi0(I, I) == identity(3)


def test_pi0_is_bruhat_max_of_admissible_set():
    for n in range(1, 7):
        for d in range(1, min(n, 4) + 1):
            for I in enum_subsets(n, d):
                for J in enum_subsets(n, d):
                    adm = admissible_perms(I, J)
                    if not poset_leq(I, J):
                        assert adm == [] and pi0(I, J) is None
                        continue
                    top = pi0(I, J)
                    # the admissible set is exactly the interval below pi0
                    assert sorted(adm) == sorted(interval(top).elements)


def test_parse_oneline():
    assert parse_oneline("321") == (3, 2, 1)
    assert parse_oneline("10,2,3,4,5,6,7,8,9,1") == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    with pytest.raises(ValueError):
        parse_oneline("331")


def test_simple_transposition():
    assert simple(1, 3) == (2, 1, 3)
    with pytest.raises(ValueError):
        simple(3, 3)


@given(perms(), st.data())
def test_compose_group_laws(p, data):
    d = len(p)
    q = data.draw(st.permutations(list(range(1, d + 1))).map(tuple))
    r = data.draw(st.permutations(list(range(1, d + 1))).map(tuple))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)) == identity(d) == compose(inverse(p), p)


@given(perms())
def test_word_concatenation_composes(p):
    # running the word of p and then the word of q gives compose(q, p)
    d = len(p)
    q = tuple(reversed(p))
    w = canonical_word(p) + canonical_word(q)
    assert word_to_perm(w, d) == compose(q, p)


@given(perms(7))
def test_canonical_word_reduced(p):
    w = canonical_word(p)
    assert is_reduced(w, len(p)) and word_to_perm(w, len(p)) == p


@given(st.lists(st.integers(1, 4), max_size=8))
def test_reduced_iff_no_pair_crosses_twice(w):
    try:
        crossing_sequence(w, 5)
        distinct = True
    except ValueError:
        distinct = False
    assert distinct == is_reduced(w, 5)


def test_all_perms_size():
    assert [len(all_perms(d)) for d in range(1, 6)] == [1, 2, 6, 24, 120]
