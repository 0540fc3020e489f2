"""Signed Hasse diagrams of Bruhat intervals [e, pi] and their complexes C[e, pi]."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .exactla import ChainComplex, FieldSpec, SparseMatrix, homology, integral_homology
from .signs import resolve_terms
from .symgrp import Permutation, interval, inv_count

Cover = tuple[Permutation, Permutation]  # (lower, upper)


class UnbalancedSignature(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    top: Permutation
    signs: Mapping[Cover, int]

    def __post_init__(self) -> None:
        covers = set(interval(self.top).covers)
        if set(self.signs) != covers:
            raise ValueError("signature must assign a sign to every Hasse cover")
        if any(v not in (1, -1) for v in self.signs.values()):
            raise ValueError("signs must be +1 or -1")

    def sign(self, lower: Permutation, upper: Permutation) -> int:
        return self.signs[(lower, upper)]

    def unbalanced_squares(self) -> list[tuple[Permutation, Permutation, Permutation, Permutation]]:
        bad = []
        for rho, b, c, tau in squares(self.top):
            if self.signs[(b, tau)] * self.signs[(rho, b)] + self.signs[(c, tau)] * self.signs[(rho, c)]:
                bad.append((rho, b, c, tau))
        return bad

    def is_balanced(self) -> bool:
        return not self.unbalanced_squares()


def squares(top: Permutation) -> list[tuple[Permutation, Permutation, Permutation, Permutation]]:
    """Every length-two subinterval (rho, sigma_b, sigma_c, tau) of [e, top].

    Length-two Bruhat intervals have exactly two middle elements.
    """
    iv = interval(top)
    down: dict[Permutation, list[Permutation]] = {p: [] for p in iv.elements}
    for lo, hi in iv.covers:
        down[hi].append(lo)
    out = []
    for tau in iv.elements:
        below2: dict[Permutation, list[Permutation]] = {}
        for s in down[tau]:
            for rho in down[s]:
                below2.setdefault(rho, []).append(s)
        for rho, mids in sorted(below2.items()):
            if len(mids) != 2:  # pragma: no cover - a theorem about Bruhat order
                raise AssertionError(f"interval [{rho}, {tau}] has {len(mids)} middle elements")
            b, c = sorted(mids)
            out.append((rho, b, c, tau))
    return out


def canonical_signature(top: Permutation) -> Signature:
    """Signs read off from resolving crossings of canonical diagrams."""
    signs = {}
    for hi in interval(top).elements:
        for sgn, lo in resolve_terms(hi):
            signs[(lo, hi)] = sgn
    return Signature(top, signs)


def flip_vertex(s: Signature, v: Permutation) -> Signature:
    if v not in interval(s.top):
        raise ValueError(f"{v} is not in [e, {s.top}]")
    signs = {c: (-x if v in c else x) for c, x in s.signs.items()}
    return Signature(s.top, signs)


def interval_complex(top: Permutation, s: Signature, field: FieldSpec) -> ChainComplex:
    """C[e, top]: sigma sits in degree -inv(sigma); d(tau) = sum eps(sigma < tau) sigma."""
    if s.top != top:
        raise ValueError("signature belongs to a different interval")
    bad = s.unbalanced_squares()
    if bad:
        raise UnbalancedSignature(f"unbalanced square {bad[0]}")
    iv = interval(top)
    labels = {-k: list(level) for k, level in enumerate(iv.levels)}
    pos = {p: i for level in iv.levels for i, p in enumerate(level)}
    entries: dict[int, dict[tuple[int, int], int]] = {-k: {} for k in range(1, len(iv.levels))}
    for lo, hi in iv.covers:
        entries[-inv_count(hi)][(pos[lo], pos[hi])] = s.signs[(lo, hi)]
    diffs = {
        k: SparseMatrix(len(labels[k + 1]), len(labels[k]), e, field) for k, e in entries.items()
    }
    return ChainComplex(field, labels, diffs)


def interval_homology(top: Permutation, field: FieldSpec, s: Signature | None = None) -> dict[int, int]:
    return homology(interval_complex(top, s or canonical_signature(top), field))


def oneline(p: Permutation) -> str:
    return "".join(map(str, p)) if len(p) < 10 else ",".join(map(str, p))


def hasse_dot(s: Signature) -> str:
    """Graphviz source for the signed Hasse diagram, top at the top."""
    iv = interval(s.top)
    lines = [f'digraph "bruhat_{oneline(s.top)}" {{', "  rankdir=BT;"]
    for level in iv.levels:
        names = " ".join(f'"{oneline(p)}";' for p in level)
        lines.append(f"  {{ rank=same; {names} }}")
    for lo, hi in iv.covers:
        sgn = "+" if s.signs[(lo, hi)] > 0 else "-"
        style = "" if sgn == "+" else ", style=dashed"
        lines.append(f'  "{oneline(lo)}" -> "{oneline(hi)}" [label="{sgn}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Signature",
    "UnbalancedSignature",
    "squares",
    "canonical_signature",
    "flip_vertex",
    "interval_complex",
    "interval_homology",
    "homology",
    "integral_homology",
    "hasse_dot",
]
