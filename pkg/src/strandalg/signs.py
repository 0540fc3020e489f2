"""The sign rule shared by strand diagrams and Bruhat interval complexes.

Every permutation is represented by the diagram of its canonical word. Any
other reduced word reaches it by commutation moves (two crossings on disjoint
pairs of strands trade places in time) and braid moves (a strand passes over
the crossing of two others). A commutation move costs -1 and a braid move
costs nothing, so the sign of a word is -1 to the number of pairs of
disjoint crossings whose time order differs from the canonical word.
Crossings are named by the unordered pair of strands (start levels) meeting
in them, which is what makes the comparison well defined.

Charging -1 for braid moves as well fails d^2 = 0 already in S_4, at the
interval below (3,4,1,2).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .symgrp import (
    Permutation,
    canonical_word,
    compose,
    crossing_sequence,
    inv_count,
    is_reduced,
    word_to_perm,
)


def relative_sign(w: Sequence[int], p: Permutation) -> int:
    """Sign relating the diagram of reduced word ``w`` to the canonical one of ``p``.

    >>> relative_sign((2, 1, 2), (3, 2, 1))
    1
    >>> relative_sign((3, 1), (2, 1, 4, 3))
    -1
    """
    d = len(p)
    if word_to_perm(w, d) != tuple(p):
        raise ValueError(f"word {tuple(w)} does not spell {tuple(p)}")
    mine = crossing_sequence(w, d)
    ref = crossing_sequence(canonical_word(tuple(p)), d)
    where = {c: i for i, c in enumerate(ref)}
    pos = [where[c] for c in mine]
    sign = 1
    for a in range(len(mine)):
        for b in range(a + 1, len(mine)):
            if pos[a] > pos[b] and not (mine[a] & mine[b]):
                sign = -sign
    return sign


def resolve_sign(w: Sequence[int], t: int, d: int) -> tuple[int, Permutation] | None:
    """Resolve the crossing at 1-based position ``t`` of reduced word ``w``.

    Returns (sign, new permutation) or None when the resolved word is not
    reduced (a double crossing appears, which is zero). The sign is -1 to the
    number of crossings after ``t``, times the relative sign of the shorter
    word against its canonical word.
    """
    k = len(w)
    rest = tuple(w[: t - 1]) + tuple(w[t:])
    if not is_reduced(rest, d):
        return None
    q = word_to_perm(rest, d)
    return (-1) ** (k - t) * relative_sign(rest, q), q


@lru_cache(maxsize=None)
def resolve_terms(p: Permutation) -> tuple[tuple[int, Permutation], ...]:
    """Signed lower covers of ``p``: the differential of its canonical diagram."""
    w = canonical_word(p)
    d = len(p)
    out = []
    for t in range(1, len(w) + 1):
        r = resolve_sign(w, t, d)
        if r is not None:
            out.append(r)
    return tuple(sorted(out, key=lambda x: x[1]))


@lru_cache(maxsize=None)
def product_sign(first: Permutation, second: Permutation) -> tuple[int, Permutation] | None:
    """Concatenate the canonical diagram of ``first`` and then ``second``.

    None if some pair of strands crosses twice; otherwise the sign against the
    canonical diagram of ``compose(second, first)``.
    """
    r = compose(second, first)
    if inv_count(r) != inv_count(first) + inv_count(second):
        return None
    w = canonical_word(first) + canonical_word(second)
    return relative_sign(w, r), r
