import random
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings
from hypothesis import strategies as st

from strandalg.exactla import (
    F2,
    F3,
    HAVE_EXT,
    QQ,
    ZZ,
    ChainComplex,
    ComplexError,
    FieldSpec,
    SparseMatrix,
    complex_from_blocks,
    homology,
    image_basis,
    integral_homology,
    kernel_basis,
    nullity,
    quotient_basis,
    rank,
    rref,
    snf,
    torsion,
    use_extension,
)
from strandalg.exactla import _kernels_py

small_ints = st.integers(-4, 4)


def matrices(max_rows=6, max_cols=6, elems=small_ints):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def sympy_rank(dense, p=0):
    dm = DomainMatrix.from_list_sympy(len(dense), len(dense[0]), dense)
    return dm.convert_to(sympy.GF(p) if p else sympy.QQ).rank()


# -- fields ----------------------------------------------------------------------


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("F3") == F3
    assert FieldSpec.parse("z") == ZZ
    assert FieldSpec.parse("f7").p == 7
    with pytest.raises(ValueError):
        FieldSpec.parse("f4")
    with pytest.raises(ValueError):
        FieldSpec.parse("r")


def test_field_arithmetic():
    assert F3(-1) == 2 and F3(Fraction(1, 2)) == 2
    assert F2.inv(1) == 1 and F3.inv(2) == 2
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        ZZ(Fraction(1, 2))


# -- rank, rref, kernels ---------------------------------------------------------


def test_rank_examples():
    assert rank(SparseMatrix(3, 4, {}, QQ)) == 0
    for k in range(5):
        assert rank(SparseMatrix.identity(k, QQ)) == k
    assert rank(SparseMatrix.from_dense([[1, 1]], QQ)) == 1
    with pytest.raises(ValueError):
        rank(SparseMatrix.identity(2, ZZ))


def test_kernel_and_image_examples():
    assert kernel_basis(SparseMatrix.identity(3, QQ)) == []
    m = SparseMatrix.from_dense([[1, 1], [-1, -1]], QQ)
    assert len(image_basis(m)) == 1
    assert nullity(m) == 1


@given(matrices())
def test_rank_matches_sympy_over_q(dense):
    m = SparseMatrix.from_dense(dense, QQ)
    assert rank(m) == sympy_rank(dense)


@given(matrices(), st.sampled_from([2, 3, 5, 7]))
def test_rank_matches_sympy_mod_p(dense, p):
    m = SparseMatrix.from_dense(dense, FieldSpec("Fp", p))
    assert rank(m) == sympy_rank(dense, p)


@given(matrices(), st.sampled_from([QQ, F2, F3]))
def test_kernel_basis_is_a_kernel(dense, f):
    m = SparseMatrix.from_dense(dense, f)
    ker = kernel_basis(m)
    assert len(ker) == m.cols - rank(m)
    for v in ker:
        assert not m.apply(v)
    if ker:
        assert rank(SparseMatrix.from_columns(ker, m.cols, f)) == len(ker)


@given(matrices(), st.sampled_from([QQ, F3]))
def test_rref_is_reduced(dense, f):
    m = SparseMatrix.from_dense(dense, f)
    rows, piv = rref(m)
    assert piv == sorted(piv) and len(rows) == rank(m)
    for row, c in zip(rows, piv):
        assert row[c] == f.one
        for other, c2 in zip(rows, piv):
            if other is not row:
                assert other.get(c, f.zero) == f.zero


def test_sparse_path_matches_sympy_on_large_matrix():
    rng = random.Random(5)
    n = 80
    dense = [[rng.choice([0, 0, 0, 0, 1, -1]) for _ in range(n)] for _ in range(n)]
    dense[3] = [a + b for a, b in zip(dense[1], dense[2])]
    for f, want in ((QQ, sympy_rank(dense)), (F3, sympy_rank(dense, 3))):
        assert rank(SparseMatrix.from_dense(dense, f)) == want


def test_quotient_projection():
    S = [{0: 1}, {1: 1}, {2: 1}]
    T = [{0: 1, 1: 1}]
    q = quotient_basis(S, T, 3, QQ)
    assert q.dim == 2 and q.sub_contained
    assert q.project({0: 1, 1: 1}) == [0, 0]
    with pytest.raises(ValueError):
        quotient_basis([{0: 1}], [], 3, QQ).project({2: 1})


# -- compiled kernel against its Python twin -------------------------------------


@pytest.mark.skipif(not HAVE_EXT, reason="compiled kernel not built")
@given(matrices(8, 8, st.integers(0, 100)), st.sampled_from([2, 3, 5, 101, 65521]))
def test_compiled_kernel_matches_python(dense, p):
    from strandalg.exactla import _kernels

    a = [[x % p for x in row] for row in dense]
    b = [list(row) for row in a]
    assert _kernels.rref_modp(a, p) == _kernels_py.rref_modp(b, p)
    assert a == b


@pytest.mark.skipif(not HAVE_EXT, reason="compiled kernel not built")
def test_backend_switch_gives_same_rank():
    rng = random.Random(1)
    dense = [[rng.randrange(3) for _ in range(30)] for _ in range(30)]
    m = SparseMatrix.from_dense(dense, F3)
    try:
        use_extension(False)
        slow = rank(m)
    finally:
        use_extension(True)
    assert slow == rank(m)


# -- Smith normal form -------------------------------------------------------------


def determinantal_divisors(dense):
    r, c = len(dense), len(dense[0])
    M = sympy.Matrix(dense)
    out = []
    for k in range(1, min(r, c) + 1):
        minors = [M.extract(list(rs), list(cs)).det() for rs in combinations(range(r), k) for cs in combinations(range(c), k)]
        g = reduce(gcd, (abs(int(x)) for x in minors), 0)
        if g == 0:
            break
        out.append(g)
    return out


def test_snf_examples():
    assert snf(SparseMatrix.from_dense([[2]], ZZ)) == [2]
    assert snf(SparseMatrix(2, 3, {}, ZZ)) == []
    assert snf(SparseMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], ZZ)) == [2, 6, 12]
    assert torsion([1, 1, 4]) == [4]


@settings(max_examples=60)
@given(matrices(4, 4, st.integers(-6, 6)))
def test_snf_matches_gcd_of_minors(dense):
    inv = snf(SparseMatrix.from_dense(dense, ZZ))
    dd = determinantal_divisors(dense)
    assert len(inv) == len(dd)
    prod = 1
    for k, x in enumerate(inv):
        prod *= x
        assert prod == dd[k]
    assert all(inv[k + 1] % inv[k] == 0 for k in range(len(inv) - 1))


# -- complexes -----------------------------------------------------------------------


def test_single_generator_complex():
    cx = ChainComplex(QQ, {0: ["x"]})
    assert homology(cx) == {0: 1}


def test_non_complex_rejected():
    with pytest.raises(ComplexError):
        complex_from_blocks(QQ, {0: ["a"], 1: ["b"], 2: ["c"]}, {0: {(0, 0): 1}, 1: {(0, 0): 1}})


def test_torsion_detected_over_z():
    # Z --2--> Z has H^1 = Z/2
    cx = complex_from_blocks(ZZ, {0: ["a"], 1: ["b"]}, {0: {(0, 0): 2}})
    h = integral_homology(cx)
    assert h[1] == (0, [2]) and h[0] == (0, [])
    assert homology(complex_from_blocks(F2, {0: ["a"], 1: ["b"]}, {0: {(0, 0): 2}})) == {0: 1, 1: 1}
