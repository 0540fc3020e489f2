from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Hashable, Sequence

from .fields import FieldSpec
from .matrix import SparseMatrix, rank, rank_over_q, snf, torsion


class ComplexError(ValueError):
    """Raised when consecutive differentials do not compose to zero."""


@dataclass
class ChainComplex:
    """Cohomologically graded complex of free modules.

    ``diffs[k]`` is the matrix of d^k : C^k -> C^{k+1}, shape
    ``(dim C^{k+1}, dim C^k)``. Degrees without a basis are zero.
    """

    field: FieldSpec
    labels: dict[int, list[Hashable]]
    diffs: dict[int, SparseMatrix] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        for k, m in self.diffs.items():
            if m.shape != (self.dim(k + 1), self.dim(k)):
                raise ValueError(f"d^{k} has shape {m.shape}, expected {(self.dim(k + 1), self.dim(k))}")
        self.check_square_zero()

    def dim(self, k: int) -> int:
        return len(self.labels.get(k, ()))

    @property
    def degrees(self) -> list[int]:
        ks = [k for k in self.labels if self.labels[k]]
        return list(range(min(ks), max(ks) + 1)) if ks else []

    def d(self, k: int) -> SparseMatrix:
        if k in self.diffs:
            return self.diffs[k]
        return SparseMatrix(self.dim(k + 1), self.dim(k), {}, self.field)

    def check_square_zero(self) -> None:
        for k in self.degrees:
            prod = self.d(k + 1) @ self.d(k)
            if not prod.is_zero():
                raise ComplexError(f"d^{k + 1} d^{k} != 0 over {self.field}")

    def ranks(self) -> list[int]:
        return [self.dim(k) for k in self.degrees]


def homology(cx: ChainComplex) -> dict[int, int]:
    """Dimension of H^k for every degree carrying a basis.

    Over Z the value is the free rank; use ``integral_homology`` for torsion.
    """
    r = _rank_q if cx.field.kind == "Z" else rank
    out = {}
    for k in cx.degrees:
        out[k] = cx.dim(k) - r(cx.d(k)) - r(cx.d(k - 1))
    return out


def _rank_q(m: SparseMatrix) -> int:
    return rank_over_q(m)


def integral_homology(cx: ChainComplex) -> dict[int, tuple[int, list[int]]]:
    """(free rank, torsion coefficients) of H^k over Z."""
    out = {}
    for k in cx.degrees:
        inc = cx.d(k - 1)
        free = cx.dim(k) - rank_over_q(cx.d(k)) - rank_over_q(inc)
        out[k] = (free, torsion(snf(inc)))
    return out


def is_acyclic(h: dict[int, int]) -> bool:
    return all(v == 0 for v in h.values())


def complex_from_blocks(field: FieldSpec, labels: dict[int, Sequence[Hashable]], entries: dict[int, dict[tuple[int, int], int]]) -> ChainComplex:
    lab = {k: list(v) for k, v in labels.items()}
    diffs = {
        k: SparseMatrix(len(lab.get(k + 1, ())), len(lab.get(k, ())), e, field) for k, e in entries.items()
    }
    return ChainComplex(field, lab, diffs)
