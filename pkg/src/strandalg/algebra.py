"""Finite-dimensional algebras with a basis of morphisms between objects.

Every algebra here is the path category of a finite set of objects. Each
basis element ``b`` runs from ``source[b]`` to ``target[b]``, and the product
``x * y`` means "x after y", so it is only nonzero when ``source[x] ==
target[y]``. Each object has an idempotent basis element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence

Obj = Hashable


@dataclass
class FinDimAlgebra:
    name: str
    objects: list[Obj]
    source: list[int]  # object index
    target: list[int]
    degree: list[int]
    # (x, y) -> (coefficient, z) meaning b_x * b_y = c * b_z; absent means 0
    mult: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)
    labels: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._index = {(self.source[b], self.target[b]): [] for b in range(self.dim)}
        for b in range(self.dim):
            self._index[(self.source[b], self.target[b])].append(b)
        self.idempotent = {}
        for b in range(self.dim):
            s, t = self.source[b], self.target[b]
            if s == t and self.degree[b] == 0 and self.mult.get((b, b)) == (1, b):
                self.idempotent.setdefault(s, b)
        if not self.labels:
            self.labels = [f"b{b}" for b in range(self.dim)]

    @property
    def dim(self) -> int:
        return len(self.source)

    def obj_index(self, x: Obj) -> int:
        return self.objects.index(x)

    def between(self, s: int, t: int) -> list[int]:
        """Basis elements from object ``s`` to object ``t``."""
        return self._index.get((s, t), [])

    def product(self, x: int, y: int) -> tuple[int, int] | None:
        return self.mult.get((x, y))

    def mul(self, u: dict[int, int], v: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for x, a in u.items():
            for y, b in v.items():
                r = self.mult.get((x, y))
                if r is not None:
                    c, z = r
                    out[z] = out.get(z, 0) + a * b * c
        return {z: c for z, c in out.items() if c}

    def composable(self) -> Iterator[tuple[int, int]]:
        by_source: dict[int, list[int]] = {}
        for b in range(self.dim):
            by_source.setdefault(self.source[b], []).append(b)
        for y in range(self.dim):
            for x in by_source.get(self.target[y], []):
                yield x, y

    def opposite(self) -> "FinDimAlgebra":
        """Same basis, arrows reversed; cached so modules over it share one object."""
        op = getattr(self, "_op", None)
        if op is None:
            op = self._make_opposite()
            op._op = self
            self._op = op
        return op

    def _make_opposite(self) -> "FinDimAlgebra":
        return FinDimAlgebra(
            name=f"{self.name}^op",
            objects=list(self.objects),
            source=list(self.target),
            target=list(self.source),
            degree=list(self.degree),
            mult={(y, x): r for (x, y), r in self.mult.items()},
            labels=list(self.labels),
        )

    def check(self) -> list[str]:
        """Problems with the structure constants (empty when it is an algebra)."""
        problems = []
        for (x, y), (c, z) in self.mult.items():
            if self.source[x] != self.target[y]:
                problems.append(f"non-composable product {x}*{y}")
            if self.source[z] != self.source[y] or self.target[z] != self.target[x]:
                problems.append(f"product {x}*{y} lands in the wrong hom space")
            if self.degree[z] != self.degree[x] + self.degree[y]:
                problems.append(f"product {x}*{y} breaks the grading")
        for o in range(len(self.objects)):
            e = self.idempotent.get(o)
            if e is None:
                problems.append(f"object {self.objects[o]!r} has no idempotent")
                continue
            for b in range(self.dim):
                if self.target[b] == o and self.mult.get((e, b)) != (1, b):
                    problems.append(f"idempotent of {self.objects[o]!r} is not a left unit on {b}")
                if self.source[b] == o and self.mult.get((b, e)) != (1, b):
                    problems.append(f"idempotent of {self.objects[o]!r} is not a right unit on {b}")
        for y, z in self.composable():
            yz = self.mul({y: 1}, {z: 1})
            for x in range(self.dim):
                if self.source[x] == self.target[y]:
                    if self.mul(self.mul({x: 1}, {y: 1}), {z: 1}) != self.mul({x: 1}, yz):
                        problems.append(f"associativity fails on ({x}, {y}, {z})")
        return problems

    def is_radical(self, b: int) -> bool:
        return self.source[b] != self.target[b] or self.idempotent.get(self.source[b]) != b

    def arrows(self) -> list[int]:
        """Radical basis elements that are not products of two radical ones."""
        rad2 = set()
        for x, y in self.composable():
            if self.is_radical(x) and self.is_radical(y):
                r = self.mult.get((x, y))
                if r is not None:
                    rad2.add(r[1])
        return [b for b in range(self.dim) if self.is_radical(b) and b not in rad2]


def same_structure(A: FinDimAlgebra, B: FinDimAlgebra, basis_map: Sequence[int]) -> list[str]:
    """Compare structure constants under a basis bijection A -> B."""
    problems = []
    if sorted(basis_map) != list(range(B.dim)) or len(basis_map) != A.dim:
        return ["basis map is not a bijection"]
    for x, y in A.composable():
        ra = A.mult.get((x, y))
        rb = B.mult.get((basis_map[x], basis_map[y]))
        mapped = None if ra is None else (ra[0], basis_map[ra[1]])
        if mapped != rb:
            problems.append(f"{A.labels[x]} * {A.labels[y]}: {mapped} vs {rb}")
    for x in range(A.dim):
        bx = basis_map[x]
        for y in range(A.dim):
            if A.source[x] != A.target[y] and B.mult.get((bx, basis_map[y])) is not None:
                problems.append(f"{B.labels[bx]} * {B.labels[basis_map[y]]} is nonzero in the target only")
    return problems
