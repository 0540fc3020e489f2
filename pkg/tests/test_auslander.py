from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strandalg.auslander import (
    algebra_json,
    build_A,
    build_A_multichoose,
    build_koszul_graded,
    generated_in_degrees_0_1,
    hom_pattern_json,
    iso_sharp,
    quiver_dot,
    quiver_text,
    rotate,
    sharp_gap_condition,
    sharp_gap_condition_reversed,
    zero_relations,
)
from strandalg.combinat import enum_multisets, enum_subsets, rank, unit_diff

CELLS = [(n, d) for n in range(1, 9) for d in range(1, n + 1)]


def test_small_dimensions():
    for n in range(1, 8):
        assert build_A(n, 1).dim == n * (n + 1) // 2
    for d in range(1, 6):
        A = build_A(d, d)
        assert A.dim == 1 and len(A.idempotent) == 1


def test_a_3_2():
    A = build_A(3, 2)
    assert A.dim == 5 and len(A.idempotent) == 3
    assert len(A.arrows()) == 2
    # {1,2} -> {1,3} -> {2,3} composes to zero
    assert len(zero_relations(A)) == 1
    assert A.check() == []


@pytest.mark.parametrize("n,d", CELLS)
def test_dimension_formula(n, d):
    assert build_A(n, d).dim == comb(n + d, 2 * d)


def test_a_n_1_has_no_relations():
    for n in range(2, 7):
        assert zero_relations(build_A(n, 1)) == []


def test_multichoose_3_2():
    assert len(enum_multisets(3, 2)) == 6
    Q, problems = build_A_multichoose(3, 2)
    assert Q.dim == 5 and len(Q.objects) == 3
    assert problems == []


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_multichoose_certificate(n, d):
    Q, problems = build_A_multichoose(n, d)
    assert problems == []
    assert Q.dim == comb(n + d, 2 * d)


def test_koszul_2_1():
    K = build_koszul_graded(2, 1)
    assert K.dim == 3
    assert sorted(K.degree) == [0, 0, 1]
    assert K.check() == []


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (5, 2), (5, 3), (6, 3)])
def test_koszul_degrees_and_generation(n, d):
    K = build_koszul_graded(n, d)
    assert K.check() == []
    objs = K.objects
    for b in range(K.dim):
        J, I = objs[K.source[b]], objs[K.target[b]]
        assert unit_diff(I, J) and K.degree[b] == rank(J) - rank(I)
    for (x, y), (_, z) in K.mult.items():
        assert K.degree[z] == K.degree[x] + K.degree[y]
    assert generated_in_degrees_0_1(K) == []


@pytest.mark.parametrize("n,d", [(3, 2), (5, 4), (4, 2), (6, 3), (7, 2)])
def test_iso_sharp(n, d):
    bij, problems = iso_sharp(n, d)
    assert problems == []
    assert sorted(bij) == list(range(build_A(n, n - d).dim))


def test_iso_sharp_degenerate_end():
    # K(3,2) matches A(3,1), K(5,4) matches A(5,1)
    assert build_koszul_graded(3, 2).dim == build_A(3, 1).dim == 6
    assert build_koszul_graded(5, 4).dim == build_A(5, 1).dim == 15


def test_rotate_examples():
    assert rotate((0, 1), 3) == (0, 3)
    assert rotate((), 2) == ()
    with pytest.raises(ValueError):
        rotate((4,), 3)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n)))))
def test_rotate_has_order_n_plus_1(nI):
    n, I = nI
    J = tuple(sorted(I))
    x = J
    for _ in range(n + 1):
        x = rotate(x, n)
        assert len(x) == len(J)
    assert x == J


def test_gap_condition_matches_unit_difference_exhaustively():
    for n in range(1, 9):
        for d in range(1, n + 1):
            S = enum_subsets(n, d)
            for I in S:
                for J in S:
                    assert sharp_gap_condition(I, J, n) == unit_diff(I, J)


def test_reversed_gap_condition_counterexample():
    I, J = (1, 4), (3, 4)
    assert not unit_diff(I, J)
    assert sharp_gap_condition_reversed(I, J, 4)
    assert not sharp_gap_condition(I, J, 4)


def test_reports():
    A = build_A(3, 2)
    doc = algebra_json(A)
    assert doc["dim"] == 5 and len(doc["idempotents"]) == 3
    assert quiver_dot(A).count("->") == 2
    assert "zero relation" in quiver_dot(A)
    assert quiver_text(build_A(3, 1)).startswith("A(3,1): dim 6, 3 objects")
    assert hom_pattern_json(4, 2) == hom_pattern_json(4, 2)
