"""Permutations, wiring-diagram words and Bruhat intervals in S_d.

Conventions used everywhere downstream:

* A permutation is its one-line tuple ``(pi(1), ..., pi(d))``, 1-based.
* A word is stored in time order. Letter ``a`` means the strands sitting at
  levels ``a`` and ``a+1`` cross at that moment.
* ``word_to_perm`` sends each strand's start level to its end level.
* Composition is ``compose(s, t)(a) = s(t(a))``. Running the word of ``phi``
  and then the word of ``psi`` gives ``compose(pi_psi, pi_phi)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .combinat import poset_leq

Permutation = tuple[int, ...]
Word = tuple[int, ...]


def identity(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def simple(a: int, d: int) -> Permutation:
    """The simple transposition s_a exchanging a and a+1."""
    if not 1 <= a < d:
        raise ValueError(f"s_{a} is not in S_{d}")
    p = list(range(1, d + 1))
    p[a - 1], p[a] = p[a], p[a - 1]
    return tuple(p)


def compose(s: Sequence[int], t: Sequence[int]) -> Permutation:
    return tuple(s[x - 1] for x in t)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for a, x in enumerate(p, start=1):
        out[x - 1] = a
    return tuple(out)


def all_perms(d: int) -> list[Permutation]:
    return list(permutations(range(1, d + 1)))


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{tuple(p)} is not a permutation")


def word_to_perm(w: Sequence[int], d: int) -> Permutation:
    """Simulate the wiring diagram of ``w``.

    >>> word_to_perm((1, 2, 1), 3)
    (3, 2, 1)
    """
    strand_at = list(range(1, d + 1))
    for a in w:
        if not 1 <= a < d:
            raise ValueError(f"letter {a} out of range for d={d}")
        strand_at[a - 1], strand_at[a] = strand_at[a], strand_at[a - 1]
    out = [0] * d
    for level, s in enumerate(strand_at, start=1):
        out[s - 1] = level
    return tuple(out)


def inv_count(p: Sequence[int]) -> int:
    d = len(p)
    return sum(1 for a in range(d) for b in range(a + 1, d) if p[b] < p[a])


def inversion_set(p: Sequence[int]) -> frozenset[frozenset[int]]:
    d = len(p)
    return frozenset(
        frozenset((a + 1, b + 1)) for a in range(d) for b in range(a + 1, d) if p[b] < p[a]
    )


def crossing_sequence(w: Sequence[int], d: int | None = None) -> tuple[frozenset[int], ...]:
    """The pair of start levels realised by each crossing of a reduced word.

    >>> [sorted(c) for c in crossing_sequence((1, 2, 1))]
    [[1, 2], [1, 3], [2, 3]]
    """
    if d is None:
        d = max(w, default=0) + 1
    strand_at = list(range(1, d + 1))
    seen: set[frozenset[int]] = set()
    out = []
    for a in w:
        if not 1 <= a < d:
            raise ValueError(f"letter {a} out of range for d={d}")
        pair = frozenset((strand_at[a - 1], strand_at[a]))
        if pair in seen:
            raise ValueError(f"word {tuple(w)} is not reduced")
        seen.add(pair)
        out.append(pair)
        strand_at[a - 1], strand_at[a] = strand_at[a], strand_at[a - 1]
    return tuple(out)


def is_reduced(w: Sequence[int], d: int) -> bool:
    return inv_count(word_to_perm(w, d)) == len(w)


@lru_cache(maxsize=None)
def canonical_word(p: Permutation) -> Word:
    """Lexicographically smallest reduced word of ``p``.

    The first letter of any reduced word is a right descent, and every right
    descent starts some reduced word, so taking the smallest descent at each
    step is the depth-first search that meets the lex-min word first.
    """
    check_perm(p)
    word = []
    cur = list(p)
    while True:
        for a in range(1, len(cur)):
            if cur[a - 1] > cur[a]:
                word.append(a)
                cur[a - 1], cur[a] = cur[a], cur[a - 1]
                break
        else:
            return tuple(word)


def reduced_words(p: Permutation) -> list[Word]:
    """Every reduced word of ``p`` in lex order (exponential; for tests)."""
    if inv_count(p) == 0:
        return [()]
    out = []
    for a in range(1, len(p)):
        if p[a - 1] > p[a]:
            q = list(p)
            q[a - 1], q[a] = q[a], q[a - 1]
            out.extend((a,) + rest for rest in reduced_words(tuple(q)))
    return sorted(out)


def subword_closure(w: Sequence[int], d: int) -> frozenset[Permutation]:
    """Permutations having a reduced word that is a subword of ``w``."""
    reach = {identity(d): 0}
    for a in w:
        s = simple(a, d)
        new = dict(reach)
        for p, length in reach.items():
            q = compose(s, p)
            if inv_count(q) == length + 1:
                new[q] = length + 1
        reach = new
    return frozenset(reach)


@lru_cache(maxsize=None)
def lower_set(p: Permutation) -> frozenset[Permutation]:
    return subword_closure(canonical_word(p), len(p))


def bruhat_leq(s: Permutation, t: Permutation) -> bool:
    if len(s) != len(t):
        raise ValueError("permutations of different size")
    return s in lower_set(t)


class Interval:
    """The Bruhat interval [e, top] graded by inversion count."""

    def __init__(self, top: Permutation):
        self.top = top
        elems = sorted(lower_set(top), key=lambda p: (inv_count(p), p))
        self.elements: list[Permutation] = elems
        self.levels: list[list[Permutation]] = [[] for _ in range(inv_count(top) + 1)]
        for p in elems:
            self.levels[inv_count(p)].append(p)
        members = set(elems)
        covers = []
        for t in elems:
            for s in _lower_covers(t):
                assert s in members
                covers.append((s, t))
        self.covers: list[tuple[Permutation, Permutation]] = sorted(
            covers, key=lambda c: (inv_count(c[1]), c[1], c[0])
        )

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in lower_set(self.top)


def _lower_covers(t: Permutation) -> list[Permutation]:
    """sigma = t * (i j) with inv dropping by exactly one."""
    d = len(t)
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            if t[i] > t[j] and not any(t[j] < t[k] < t[i] for k in range(i + 1, j)):
                q = list(t)
                q[i], q[j] = q[j], q[i]
                out.append(tuple(q))
    return sorted(out)


@lru_cache(maxsize=None)
def interval(p: Permutation) -> Interval:
    check_perm(p)
    return Interval(p)


def pi0(I: Sequence[int], J: Sequence[int]) -> Permutation | None:
    """Maximum of {pi : i_a <= j_pi(a) for all a}, or None when I is not <= J.

    Downward greedy: the strand starting at the highest remaining i goes to
    the lowest remaining j it can reach.
    """
    if not poset_leq(I, J):
        return None
    d = len(I)
    free = list(range(1, d + 1))
    out = [0] * d
    for a in range(d, 0, -1):
        for pos, b in enumerate(free):
            if I[a - 1] <= J[b - 1]:
                out[a - 1] = b
                del free[pos]
                break
        else:  # pragma: no cover - unreachable when I <= J
            return None
    return tuple(out)


def admissible_perms(I: Sequence[int], J: Sequence[int]) -> list[Permutation]:
    """Brute-force {pi : i_a <= j_pi(a)}; the oracle for ``pi0``."""
    return [p for p in all_perms(len(I)) if all(I[a] <= J[p[a] - 1] for a in range(len(I)))]


def from_cycle(cycle: Sequence[int], d: int) -> Permutation:
    """One-line form of the cycle (c1 c2 ... ck): c1 -> c2 -> ... -> c1."""
    p = list(range(1, d + 1))
    for a, x in enumerate(cycle):
        p[x - 1] = cycle[(a + 1) % len(cycle)]
    return tuple(p)


def parse_oneline(s: str) -> Permutation:
    """Digit string for d <= 9 ("321"), comma list beyond ("10,2,...")."""
    s = s.strip()
    p = tuple(int(x) for x in s.split(",")) if "," in s else tuple(int(ch) for ch in s)
    check_perm(p)
    return p
