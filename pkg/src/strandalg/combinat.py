"""Subsets and multisets of {1..n} and the predicates that cut out A(n,d).

Index sets are plain tuples of ints, strictly increasing and 1-based.
Multisets are weakly increasing tuples. Sets of {0..n} (used by the
standard resolutions) go through the same functions with ``zero_ok=True``.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

IndexSet = tuple[int, ...]


def _check_set(I: Sequence[int], n: int | None = None, zero_ok: bool = False) -> None:
    lo = 0 if zero_ok else 1
    for a in range(len(I)):
        if I[a] < lo or (n is not None and I[a] > n):
            raise ValueError(f"element {I[a]} of {tuple(I)} out of range")
        if a and I[a - 1] >= I[a]:
            raise ValueError(f"{tuple(I)} is not strictly increasing")


def _check_multiset(I: Sequence[int]) -> None:
    for a in range(1, len(I)):
        if I[a - 1] > I[a]:
            raise ValueError(f"{tuple(I)} is not weakly increasing")


def _same_size(I: Sequence[int], J: Sequence[int]) -> None:
    if len(I) != len(J):
        raise ValueError(f"size mismatch: {tuple(I)} vs {tuple(J)}")


def colex_key(I: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(I))


def enum_subsets(n: int, d: int, zero_ok: bool = False) -> list[IndexSet]:
    """All d-subsets of {1..n} (or {0..n}) in colex order.

    >>> enum_subsets(3, 2)
    [(1, 2), (1, 3), (2, 3)]
    >>> enum_subsets(3, 0)
    [()]
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    ground = range(0 if zero_ok else 1, n + 1)
    return sorted(combinations(ground, d), key=colex_key)


def enum_multisets(n: int, d: int) -> list[IndexSet]:
    """All d-multisets of {1..n} in colex order."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    return sorted(combinations_with_replacement(range(1, n + 1), d), key=colex_key)


def is_degenerate(I: Sequence[int]) -> bool:
    return any(I[a] == I[a + 1] for a in range(len(I) - 1))


def poset_leq(I: Sequence[int], J: Sequence[int], zero_ok: bool = False) -> bool:
    """Product order: i_a <= j_a for every a."""
    _same_size(I, J)
    _check_set(I, zero_ok=zero_ok)
    _check_set(J, zero_ok=zero_ok)
    return all(i <= j for i, j in zip(I, J))


def multiset_leq(I: Sequence[int], J: Sequence[int]) -> bool:
    _same_size(I, J)
    _check_multiset(I)
    _check_multiset(J)
    return all(i <= j for i, j in zip(I, J))


def rank(I: Sequence[int]) -> int:
    """sum over a of (i_a - a); zero exactly on {1..d}."""
    return sum(i - a for a, i in enumerate(I, start=1))


def complement(I: Sequence[int], n: int) -> IndexSet:
    _check_set(I, n)
    s = set(I)
    return tuple(x for x in range(1, n + 1) if x not in s)


def interleaved(I: Sequence[int], J: Sequence[int]) -> bool:
    """True iff f_JI survives in A(n,d): I <= J and j_a < i_{a+1} for a < d."""
    if not poset_leq(I, J):
        return False
    return all(J[a] < I[a + 1] for a in range(len(I) - 1))


def unit_diff(I: Sequence[int], J: Sequence[int]) -> bool:
    """True iff 0 <= j_a - i_a <= 1 for every a."""
    _same_size(I, J)
    return all(0 <= j - i <= 1 for i, j in zip(I, J))


def multisets_between(I: Sequence[int], J: Sequence[int]) -> Iterator[IndexSet]:
    """Every multiset K with I <= K <= J, by direct search."""
    d = len(I)

    def rec(a: int, prefix: tuple[int, ...]) -> Iterator[IndexSet]:
        if a == d:
            yield prefix
            return
        lo = max(I[a], prefix[-1] if prefix else I[a])
        for k in range(lo, J[a] + 1):
            yield from rec(a + 1, prefix + (k,))

    yield from rec(0, ())


def factors_through_degenerate(I: Sequence[int], J: Sequence[int]) -> bool:
    """Is there a degenerate multiset K with I <= K <= J?

    Searches the interval directly; the closed form (some j_a >= i_{a+1})
    is kept as a test oracle rather than used here.
    """
    if not multiset_leq(I, J):
        raise ValueError(f"{tuple(I)} is not below {tuple(J)}")
    return any(is_degenerate(K) for K in multisets_between(I, J))


def interleaved_pair_count(n: int, d: int) -> int:
    """Closed form C(n+d, 2d) for the number of interleaved pairs."""
    return comb(n + d, 2 * d)
