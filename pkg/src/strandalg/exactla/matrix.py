"""Sparse matrices over Q, F_p or Z and exact elimination on them."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import _backend
from .fields import QQ, ZZ, FieldSpec

DENSE_LIMIT = 64

Vector = dict  # sparse vector: index -> nonzero scalar


class SparseMatrix:
    """Matrix stored as {(row, col): nonzero scalar} with a field tag."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Mapping[tuple[int, int], object] | None = None,
        field: FieldSpec = QQ,
    ):
        self.rows = rows
        self.cols = cols
        self.field = field
        clean: dict[tuple[int, int], object] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            x = field(v)
            if x:
                clean[(r, c)] = x
        self.entries = clean

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]], field: FieldSpec = QQ, cols: int | None = None):
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(dense) for c, v in enumerate(row) if v}
        return cls(rows, cols, entries, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], rows: int, field: FieldSpec = QQ):
        entries = {(r, c): v for c, col in enumerate(columns) for r, v in col.items()}
        return cls(rows, len(columns), entries, field)

    @classmethod
    def identity(cls, k: int, field: FieldSpec = QQ):
        return cls(k, k, {(i, i): 1 for i in range(k)}, field)

    def to_dense(self) -> list[list]:
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_vectors(self) -> list[Vector]:
        out: list[Vector] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}, self.field)

    def over(self, field: FieldSpec) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, self.entries, field)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], object] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = f.add(acc.get((r, c), f.zero), f.mul(v, w))
        return SparseMatrix(self.rows, other.cols, acc, f)

    def apply(self, v: Mapping[int, object]) -> Vector:
        f = self.field
        out: Vector = {}
        for (r, c), x in self.entries.items():
            if c in v:
                out[r] = f.add(out.get(r, f.zero), f.mul(x, f(v[c])))
        return {r: x for r, x in out.items() if x}

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)}, {self.field})"


def _dense_ok(m: SparseMatrix) -> bool:
    return m.rows < DENSE_LIMIT and m.cols < DENSE_LIMIT


# -- elimination -------------------------------------------------------------


def _sparse_rref(rows: Iterable[Vector], field: FieldSpec) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form of sparse rows over a field.

    Pivot columns are chosen in increasing order, so the result depends only
    on the row space. Returns (pivot rows, pivot columns), both sorted by
    pivot column.
    """
    basis: dict[int, Vector] = {}  # pivot column -> row with 1 there
    for row in rows:
        v = {c: field(x) for c, x in row.items() if x}
        v = {c: x for c, x in v.items() if x}
        for c in sorted(set(v) & set(basis)):
            x = v.get(c)
            if x:
                _axpy(v, field.neg(x), basis[c], field)
        if not v:
            continue
        c0 = min(v)
        inv = field.inv(v[c0])
        v = {c: field.mul(x, inv) for c, x in v.items()}
        # keep earlier rows reduced against the new pivot
        for r in basis.values():
            x = r.get(c0)
            if x:
                _axpy(r, field.neg(x), v, field)
        basis[c0] = v
    piv = sorted(basis)
    return [basis[c] for c in piv], piv


def _axpy(y: Vector, a, x: Vector, field: FieldSpec) -> None:
    """y += a*x in place, dropping zeros."""
    for c, v in x.items():
        s = field.add(y.get(c, field.zero), field.mul(a, v))
        if s:
            y[c] = s
        else:
            y.pop(c, None)


def _bareiss_rank(dense: list[list[int]]) -> int:
    """Fraction-free rank of an integer matrix."""
    a = [row[:] for row in dense]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), -1)
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row = a[i]
            for j in range(c, n):
                row[j] = (p * row[j] - f * a[r][j]) // prev
        prev = p
        r += 1
    return r


def _integer_rows(m: SparseMatrix) -> list[list[int]]:
    dense = [[0] * m.cols for _ in range(m.rows)]
    for r, row in enumerate(m.row_vectors()):
        if not row:
            continue
        den = lcm(*(Fraction(v).denominator for v in row.values()))
        for c, v in row.items():
            dense[r][c] = int(Fraction(v) * den)
    return dense


def _dense_modp(m: SparseMatrix) -> list[list[int]]:
    p = m.field.p
    return [[int(x) % p for x in row] for row in m.to_dense()]


def rank(m: SparseMatrix) -> int:
    if m.field.kind == "Z":
        raise ValueError("rank over Z is not supported; use snf")
    if not m.entries:
        return 0
    if _dense_ok(m):
        if m.field.kind == "Fp":
            return len(_backend.rref_modp(_dense_modp(m), m.field.p))
        return _bareiss_rank(_integer_rows(m))
    return len(_sparse_rref(m.row_vectors(), m.field)[0])


def rank_over_q(m: SparseMatrix) -> int:
    return rank(m.over(QQ))


def rref(m: SparseMatrix) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon rows (sparse) and pivot columns."""
    if m.field.kind == "Z":
        raise ValueError("rref over Z is not supported")
    if m.field.kind == "Fp" and _dense_ok(m) and m.entries:
        a = _dense_modp(m)
        piv = _backend.rref_modp(a, m.field.p)
        return [{c: x for c, x in enumerate(a[i]) if x} for i in range(len(piv))], piv
    return _sparse_rref(m.row_vectors(), m.field)


def kernel_basis(m: SparseMatrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column."""
    rows, piv = rref(m)
    f = m.field
    pivset = set(piv)
    out = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v: Vector = {free: f.one}
        for row, c in zip(rows, piv):
            x = row.get(free)
            if x:
                v[c] = f.neg(x)
        out.append(v)
    return out


def nullity(m: SparseMatrix) -> int:
    return m.cols - rank(m)


def image_basis(m: SparseMatrix) -> list[Vector]:
    """Echelon basis of the column space."""
    return rref(m.transpose())[0]


def row_space_basis(vectors: Iterable[Mapping[int, object]], field: FieldSpec) -> tuple[list[Vector], list[int]]:
    return _sparse_rref((dict(v) for v in vectors), field)


class Quotient:
    """span(S) / span(T) inside field^dim with a projection to coordinates."""

    def __init__(self, S: Sequence[Mapping[int, object]], T: Sequence[Mapping[int, object]], dim: int, field: FieldSpec):
        if field.kind == "Z":
            raise ValueError("quotients over Z are not supported")
        for v in list(S) + list(T):
            if any(not 0 <= c < dim for c in v):
                raise ValueError("vector index out of range")
        self.dim_ambient = dim
        self.field = field
        self._t_rows, self._t_piv = _sparse_rref((dict(v) for v in T), field)
        reduced = [self._reduce_t(v) for v in S]
        self.representatives, self._s_piv = _sparse_rref(reduced, field)
        # every vector of T must lie in span(S) for the quotient to make sense
        self.sub_contained = all(not self._residual(self._reduce_t(dict(v))) for v in T)

    def _reduce_t(self, v: Mapping[int, object]) -> Vector:
        f = self.field
        out = {c: f(x) for c, x in v.items() if f(x)}
        for row, c in zip(self._t_rows, self._t_piv):
            x = out.get(c)
            if x:
                _axpy(out, f.neg(x), row, f)
        return out

    def _residual(self, v: Vector) -> Vector:
        f = self.field
        out = dict(v)
        for row, c in zip(self.representatives, self._s_piv):
            x = out.get(c)
            if x:
                _axpy(out, f.neg(x), row, f)
        return out

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, v: Mapping[int, object]) -> list:
        """Coordinates of the class of ``v`` in the representative basis."""
        r = self._reduce_t(v)
        coords = [r.get(c, self.field.zero) for c in self._s_piv]
        if self._residual(r):
            raise ValueError("vector is not in span(S) + span(T)")
        return coords


def quotient_basis(S, T, dim: int, field: FieldSpec = QQ) -> Quotient:
    return Quotient(S, T, dim, field)


# -- Smith normal form ---------------------------------------------------------


def snf(m: SparseMatrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [[_as_int(x) for x in row] for row in m.to_dense()]
    rows, cols = m.rows, m.cols
    diag = []
    for t in range(min(rows, cols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        _move_to_pivot(a, t, i, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                # remainders are smaller than the pivot, so this terminates
                _, i, j = min(rest)
                _move_to_pivot(a, t, i, j)
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            for j in range(t, cols):
                a[t][j] += a[bad][j]
        diag.append(abs(a[t][t]))
    return diag


def _move_to_pivot(a: list[list[int]], t: int, i: int, j: int) -> None:
    a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _as_int(x) -> int:
    q = Fraction(x)
    if q.denominator != 1:
        raise ValueError(f"{x} is not an integer")
    return int(q)


def torsion(invariants: Sequence[int]) -> list[int]:
    return [x for x in invariants if x > 1]


__all__ = [
    "SparseMatrix",
    "Quotient",
    "rank",
    "rank_over_q",
    "rref",
    "kernel_basis",
    "nullity",
    "image_basis",
    "row_space_basis",
    "quotient_basis",
    "snf",
    "torsion",
    "QQ",
    "ZZ",
]
