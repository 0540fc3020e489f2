from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strandalg.bruhat_cx import (
    Signature,
    UnbalancedSignature,
    canonical_signature,
    flip_vertex,
    hasse_dot,
    integral_homology,
    interval_complex,
    interval_homology,
    squares,
)
from strandalg.exactla import F2, F3, QQ, ZZ, image_basis, rank
from strandalg.signs import relative_sign, resolve_terms
from strandalg.symgrp import (
    all_perms,
    canonical_word,
    crossing_sequence,
    from_cycle,
    identity,
    interval,
    is_reduced,
    reduced_words,
    word_to_perm,
)

W0_S3 = from_cycle((1, 3), 3)
NONTRIVIAL_S4 = [p for d in range(1, 5) for p in all_perms(d) if p != identity(d)]


def full_parity_sign(w, p):
    """The rejected rule: parity of the whole crossing reordering."""
    ref = {c: i for i, c in enumerate(crossing_sequence(canonical_word(p), len(p)))}
    pos = [ref[c] for c in crossing_sequence(w, len(p))]
    inv = sum(1 for a, b in combinations(range(len(pos)), 2) if pos[a] > pos[b])
    return (-1) ** inv


# -- sign rule -------------------------------------------------------------------


def test_relative_sign_of_canonical_word_is_one():
    for d in range(1, 6):
        for p in all_perms(d):
            assert relative_sign(canonical_word(p), p) == 1


def test_braid_move_costs_nothing():
    assert relative_sign((2, 1, 2), W0_S3) == 1
    assert full_parity_sign((2, 1, 2), W0_S3) == -1


def test_commutation_move_costs_minus_one():
    assert relative_sign((3, 1), (2, 1, 4, 3)) == -1
    for d in range(2, 5):
        for p in all_perms(d):
            for w in reduced_words(p):
                for t in range(len(w) - 1):
                    if abs(w[t] - w[t + 1]) > 1:
                        v = w[:t] + (w[t + 1], w[t]) + w[t + 2:]
                        assert relative_sign(v, p) == -relative_sign(w, p)


def test_full_parity_rule_is_unbalanced_at_3412():
    top = (3, 4, 1, 2)
    signs = {}
    for hi in interval(top).elements:
        w = canonical_word(hi)
        for t in range(1, len(w) + 1):
            rest = w[: t - 1] + w[t:]
            if is_reduced(rest, 4):
                lo = word_to_perm(rest, 4)
                signs[(lo, hi)] = (-1) ** (len(w) - t) * full_parity_sign(rest, lo)
    assert not Signature(top, signs).is_balanced()
    assert canonical_signature(top).is_balanced()


def test_resolve_terms_of_longest_s3():
    # resolving the middle crossing of (1,2,1) double-crosses a pair, so two terms survive
    terms = resolve_terms(W0_S3)
    assert len(terms) == 2
    assert {q for _, q in terms} == {(2, 3, 1), (3, 1, 2)}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_canonical_signatures_balanced(d):
    for p in all_perms(d):
        assert canonical_signature(p).is_balanced()


@pytest.mark.slow
def test_canonical_signatures_balanced_s5():
    for p in all_perms(5):
        assert canonical_signature(p).is_balanced()


def test_squares_have_two_middles():
    for p in all_perms(4):
        for rho, b, c, tau in squares(p):
            assert b != c


# -- signatures and flips ---------------------------------------------------------


def test_s2_signature():
    s = canonical_signature((2, 1))
    assert list(s.signs.values()) == [1]


def test_flip_examples():
    s = canonical_signature(W0_S3)
    t = flip_vertex(s, identity(3))
    assert sum(1 for c in s.signs if s.signs[c] != t.signs[c]) == 2
    assert flip_vertex(t, identity(3)) == s
    with pytest.raises(ValueError):
        flip_vertex(s, (1, 2, 3, 4))


def test_unbalanced_signature_rejected():
    s = canonical_signature(W0_S3)
    cover = next(iter(s.signs))
    bad = dict(s.signs)
    bad[cover] = -bad[cover]
    with pytest.raises(UnbalancedSignature):
        interval_complex(W0_S3, Signature(W0_S3, bad), QQ)
    with pytest.raises(ValueError):
        Signature(W0_S3, {cover: 1})


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(NONTRIVIAL_S4), st.lists(st.integers(0, 23), min_size=1, max_size=10), st.sampled_from([QQ, F2, F3]))
def test_flips_preserve_balance_and_homology(top, picks, f):
    s = canonical_signature(top)
    elems = interval(top).elements
    for k in picks:
        s = flip_vertex(s, elems[k % len(elems)])
    assert s.is_balanced()
    assert not any(interval_homology(top, f, s).values())


# -- complexes ----------------------------------------------------------------------


def test_s3_complex_matches_reference_matrices_up_to_flips():
    # basis orders: (31); (321),(231); (21),(32); e
    c = lambda cyc: from_cycle(cyc, 3)
    order = {-3: [W0_S3], -2: [c((3, 2, 1)), c((2, 3, 1))], -1: [c((2, 1)), c((3, 2))], 0: [identity(3)]}
    shown = {-3: [[1], [-1]], -2: [[1, 1], [-1, -1]], -1: [[1, 1]]}
    elems = interval(W0_S3).elements
    found = False
    for r in range(len(elems) + 1):
        for flips in combinations(elems, r):
            s = canonical_signature(W0_S3)
            for v in flips:
                s = flip_vertex(s, v)
            ok = True
            for k, m in shown.items():
                got = [[int(s.signs.get((lo, hi), 0)) for hi in order[k]] for lo in order[k + 1]]
                ok &= got == m
            found |= ok
    assert found


def test_s3_complex_ranks():
    cx = interval_complex(W0_S3, canonical_signature(W0_S3), QQ)
    assert cx.ranks() == [1, 2, 2, 1]
    assert cx.degrees == [-3, -2, -1, 0]
    assert rank(cx.d(-1)) == 1
    assert len(image_basis(cx.d(-2))) == 1
    assert interval_homology(W0_S3, QQ) == {-3: 0, -2: 0, -1: 0, 0: 0}


def test_s2_complex():
    cx = interval_complex((2, 1), canonical_signature((2, 1)), QQ)
    assert [[abs(x) for x in row] for row in cx.d(-1).to_dense()] == [[1]]


def test_identity_interval_is_one_point():
    assert interval_homology(identity(3), QQ) == {0: 1}


@pytest.mark.parametrize("top", NONTRIVIAL_S4, ids=lambda p: "".join(map(str, p)))
def test_acyclic_over_fields_and_torsion_free(top):
    for f in (QQ, F2, F3):
        assert not any(interval_homology(top, f).values())
    zh = integral_homology(interval_complex(top, canonical_signature(top), ZZ))
    assert all(free == 0 and not tors for free, tors in zh.values())


def test_hasse_dot():
    dot = hasse_dot(canonical_signature(W0_S3))
    assert dot.startswith('digraph "bruhat_321"')
    assert dot.count("->") == 8
