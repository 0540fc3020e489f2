"""The strands algebra B(n,d) and its degree-zero cohomology.

A basis element is a triple (I, J, pi): a strand diagram from I to J whose
strands realise pi, drawn with the canonical word of pi. Its degree is
-inv(pi). Coefficients are kept as integers (all structure constants are
+-1) and reduced into a field only when a check or a quotient needs it.

Products are written in time order: ``multiply(g, h)`` runs ``g`` first and
then ``h``, which is the composite h o g.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import FinDimAlgebra, same_structure
from .combinat import IndexSet, enum_subsets, interleaved, poset_leq
from .exactla import ChainComplex, FieldSpec, SparseMatrix, homology, quotient_basis
from .signs import product_sign, relative_sign, resolve_terms
from .symgrp import Permutation, canonical_word, identity, interval, inv_count, lower_set, pi0

__all__ = [
    "StrandGenerator",
    "basis",
    "relative_sign",
    "multiply",
    "differential",
    "verify_dga",
    "hom_complex",
    "h0_algebra",
    "h0_isomorphism_problems",
    "to_json",
]


@dataclass(frozen=True, order=True)
class StrandGenerator:
    source: IndexSet
    target: IndexSet
    perm: Permutation

    @property
    def degree(self) -> int:
        return -inv_count(self.perm)

    @property
    def word(self) -> tuple[int, ...]:
        return canonical_word(self.perm)

    def __str__(self) -> str:
        return f"{_fmt(self.source)}->{_fmt(self.target)}:{''.join(map(str, self.perm))}"


Element = dict  # StrandGenerator -> int


def _fmt(I: Iterable[int]) -> str:
    return "{" + ",".join(map(str, I)) + "}"


def basis(I: IndexSet, J: IndexSet) -> list[StrandGenerator]:
    top = pi0(I, J)
    if top is None:
        return []
    return [StrandGenerator(tuple(I), tuple(J), p) for p in interval(top).elements]


def all_basis(n: int, d: int) -> list[StrandGenerator]:
    objs = enum_subsets(n, d)
    return [g for I in objs for J in objs for g in basis(I, J)]


def multiply(g: StrandGenerator, h: StrandGenerator) -> Element:
    """Run ``g`` and then ``h``; zero when two strands would cross twice."""
    if g.target != h.source:
        raise ValueError(f"cannot compose {g} then {h}")
    r = product_sign(g.perm, h.perm)
    if r is None:
        return {}
    sign, p = r
    out = StrandGenerator(g.source, h.target, p)
    if p not in lower_set(pi0(g.source, h.target)):  # pragma: no cover - concatenation is a diagram
        raise AssertionError(f"{out} is not a basis element")
    return {out: sign}


def differential(g: StrandGenerator) -> Element:
    return {StrandGenerator(g.source, g.target, q): s for s, q in resolve_terms(g.perm)}


def mul(x: Element, y: Element) -> Element:
    """Bilinear extension of ``multiply``: x first, then y."""
    out: dict = defaultdict(int)
    for g, a in x.items():
        for h, b in y.items():
            if g.target == h.source:
                for k, c in multiply(g, h).items():
                    out[k] += a * b * c
    return {k: c for k, c in out.items() if c}


def d_elem(x: Element) -> Element:
    out: dict = defaultdict(int)
    for g, a in x.items():
        for k, c in differential(g).items():
            out[k] += a * c
    return {k: c for k, c in out.items() if c}


def reduce(x: Element, fld: FieldSpec) -> Element:
    return {k: fld(c) for k, c in x.items() if fld(c)}


# -- exhaustive verification ------------------------------------------------
#
# The product and differential of generators depend only on their
# permutations, so every check is evaluated once per permutation tuple and
# memoised. Basis pairs and triples are grouped by the pi0 data that decides
# which permutations occur, and the reported counts are over basis elements.


def _d_perm(p: Permutation) -> dict[Permutation, int]:
    return {q: s for s, q in resolve_terms(p)}


def _lin_mul(x: dict[Permutation, int], y: dict[Permutation, int]) -> dict[Permutation, int]:
    out: dict[Permutation, int] = defaultdict(int)
    for p, a in x.items():
        for q, b in y.items():
            r = product_sign(p, q)
            if r is not None:
                out[r[1]] += a * b * r[0]
    return {k: c for k, c in out.items() if c}


def _lin_d(x: dict[Permutation, int]) -> dict[Permutation, int]:
    out: dict[Permutation, int] = defaultdict(int)
    for p, a in x.items():
        for s, q in resolve_terms(p):
            out[q] += a * s
    return {k: c for k, c in out.items() if c}


def _nonzero_in(x: dict[Permutation, int], fld: FieldSpec) -> bool:
    return any(fld(c) for c in x.values())


def _sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def _leibniz_defect(first: Permutation, second: Permutation) -> dict[Permutation, int]:
    """d(h g) - d(h) g - (-1)^|h| h d(g) with g = first, h = second."""
    g, h = {first: 1}, {second: 1}
    lhs = _lin_d(_lin_mul(g, h))
    sgn = (-1) ** inv_count(second)
    rhs = _lin_mul(g, _lin_d(h))
    for k, c in _lin_mul(_lin_d(g), h).items():
        rhs[k] = rhs.get(k, 0) + sgn * c
    return _sub(lhs, rhs)


def _assoc_defect(a: Permutation, b: Permutation, c: Permutation) -> dict[Permutation, int]:
    left = _lin_mul(_lin_mul({a: 1}, {b: 1}), {c: 1})
    right = _lin_mul({a: 1}, _lin_mul({b: 1}, {c: 1}))
    return _sub(left, right)


@dataclass
class DGAReport:
    n: int
    d: int
    field: str
    ok: bool = True
    counts: dict[str, int] = field(default_factory=dict)
    violation: str | None = None

    def fail(self, msg: str) -> None:
        if self.ok:
            self.ok = False
            self.violation = msg

    def as_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "field": self.field, "ok": self.ok, "counts": self.counts, "violation": self.violation}


def verify_dga(n: int, d: int, fld: FieldSpec, associativity: bool = True) -> DGAReport:
    """Check d^2 = 0, graded Leibniz, associativity and d(crossing) = e_JI."""
    rep = DGAReport(n, d, fld.name)
    objs = enum_subsets(n, d)
    top: dict[tuple[IndexSet, IndexSet], Permutation] = {}
    for I in objs:
        for J in objs:
            p = pi0(I, J)
            if p is not None:
                top[(I, J)] = p
    size = {p: len(interval(p)) for p in set(top.values())}
    up: dict[IndexSet, list[IndexSet]] = defaultdict(list)
    down: dict[IndexSet, list[IndexSet]] = defaultdict(list)
    for I, J in top:
        up[I].append(J)
        down[J].append(I)

    # d^2 = 0 and single crossings
    rep.counts["basis"] = sum(size[p] for p in top.values())
    n_single = 0
    for (I, J), p in top.items():
        for q in interval(p).elements:
            if _nonzero_in(_lin_d(_d_perm(q)), fld):
                rep.fail(f"d^2 != 0 on {StrandGenerator(I, J, q)}")
            if inv_count(q) == 1:
                n_single += 1
                if {k: fld(c) for k, c in _d_perm(q).items() if fld(c)} != {identity(d): fld(1)}:
                    rep.fail(f"d({StrandGenerator(I, J, q)}) is not e_JI")
    rep.counts["single_crossings"] = n_single

    # graded Leibniz, units and closure of products, grouped by pi0 data
    pair_groups: dict[tuple, tuple] = {}
    n_pairs = 0
    for J in objs:
        for I in down[J]:
            p1 = top[(I, J)]
            for K in up[J]:
                key = (p1, top[(J, K)], top[(I, K)])
                n_pairs += size[key[0]] * size[key[1]]
                pair_groups.setdefault(key, (I, J, K))
    rep.counts["leibniz_pairs"] = n_pairs
    for (p1, p2, p3), (I, J, K) in pair_groups.items():
        allowed = lower_set(p3)
        for a in interval(p1).elements:
            for b in interval(p2).elements:
                prod = _lin_mul({a: 1}, {b: 1})
                if any(q not in allowed for q in prod):
                    rep.fail(f"product of {StrandGenerator(I, J, a)} then {StrandGenerator(J, K, b)} leaves hom(I,K)")
                if _nonzero_in(_leibniz_defect(a, b), fld):
                    rep.fail(f"Leibniz fails on {StrandGenerator(I, J, a)} then {StrandGenerator(J, K, b)}")
        e = identity(d)
        for a in interval(p1).elements:
            if _lin_mul({a: 1}, {e: 1}) != {a: 1} or _lin_mul({e: 1}, {a: 1}) != {a: 1}:
                rep.fail(f"identity is not a unit for {StrandGenerator(I, J, a)}")
    rep.counts["distinct_pair_groups"] = len(pair_groups)

    if associativity:
        # chains I <= J <= K <= L: the pi0 triple is (into J) x (J,K) x (out of K)
        into = {J: {top[(I, J)] for I in down[J]} for J in objs}
        into_size = {J: sum(size[top[(I, J)]] for I in down[J]) for J in objs}
        out_of = {K: {top[(K, L)] for L in up[K]} for K in objs}
        out_size = {K: sum(size[top[(K, L)]] for L in up[K]) for K in objs}
        keys: dict[tuple, tuple] = {}
        n_triples = 0
        for J in objs:
            for K in up[J]:
                mid = top[(J, K)]
                n_triples += into_size[J] * size[mid] * out_size[K]
                for p1 in into[J]:
                    for p3 in out_of[K]:
                        keys.setdefault((p1, mid, p3), (J, K))
        rep.counts["assoc_triples"] = n_triples
        seen: set = set()
        for (p1, p2, p3), (J, K) in keys.items():
            for a in interval(p1).elements:
                for b in interval(p2).elements:
                    for c in interval(p3).elements:
                        if (a, b, c) in seen:
                            continue
                        seen.add((a, b, c))
                        if _nonzero_in(_assoc_defect(a, b, c), fld):
                            rep.fail(f"associativity fails on perms {a}, {b}, {c} through {J} -> {K}")
        rep.counts["distinct_perm_triples"] = len(seen)
    return rep


# -- cohomology -------------------------------------------------------------


def hom_complex(I: IndexSet, J: IndexSet, fld: FieldSpec) -> ChainComplex:
    """hom(I,J) as a cochain complex, built from ``differential``."""
    gens = basis(I, J)
    if not gens:
        return ChainComplex(fld, {})
    labels: dict[int, list[StrandGenerator]] = defaultdict(list)
    for g in gens:
        labels[g.degree].append(g)
    pos = {g: i for gs in labels.values() for i, g in enumerate(gs)}
    diffs = {}
    for k, gs in labels.items():
        if k + 1 not in labels:
            continue
        entries = {}
        for g in gs:
            for h, c in differential(g).items():
                entries[(pos[h], pos[g])] = c
        diffs[k] = SparseMatrix(len(labels[k + 1]), len(gs), entries, fld)
    return ChainComplex(fld, dict(labels), diffs)


@dataclass
class H0Result:
    algebra: FinDimAlgebra
    cohomology: dict[tuple[IndexSet, IndexSet], dict[int, int]]
    degree0_dim: int
    coboundary_rank: int


def h0_algebra(n: int, d: int, fld: FieldSpec) -> H0Result:
    """Degree-zero span {e_JI} modulo coboundaries, with the induced product."""
    objs = enum_subsets(n, d)
    pairs = [(I, J) for J in objs for I in objs if poset_leq(I, J)]
    index = {pr: i for i, pr in enumerate(pairs)}
    e = identity(d)
    coboundaries = []
    cohom = {}
    by_top: dict[Permutation, dict[int, int]] = {}
    for I, J in pairs:
        for g in basis(I, J):
            if g.degree == -1:
                v = {index[(I, J)]: c for h, c in differential(g).items()}
                coboundaries.append(v)
        p = pi0(I, J)
        if p not in by_top:
            by_top[p] = homology(hom_complex(I, J, fld))
        cohom[(I, J)] = by_top[p]
    standard = [{i: 1} for i in range(len(pairs))]
    Q = quotient_basis(standard, coboundaries, len(pairs), fld)
    reps = [min(v) for v in Q.representatives]
    for v in Q.representatives:
        if len(v) != 1:  # pragma: no cover - coboundaries are +-e_JI
            raise AssertionError("quotient representative is not a single e_JI")
    rep_pairs = [pairs[i] for i in reps]
    obj_index = {I: a for a, I in enumerate(objs)}
    mult = {}
    for x, (J, K) in enumerate(rep_pairs):
        for y, (I, J2) in enumerate(rep_pairs):
            if J2 != J:
                continue
            prod = multiply(StrandGenerator(I, J, e), StrandGenerator(J, K, e))
            v = {index[(g.source, g.target)]: c for g, c in prod.items()}
            coords = Q.project(v)
            nz = [(k, c) for k, c in enumerate(coords) if c]
            if len(nz) > 1:  # pragma: no cover
                raise AssertionError("product is not a multiple of a basis element")
            if nz:
                k, c = nz[0]
                mult[(x, y)] = (int(c), k)
    alg = FinDimAlgebra(
        name=f"H0(B({n},{d}))/{fld}",
        objects=objs,
        source=[obj_index[I] for I, _ in rep_pairs],
        target=[obj_index[J] for _, J in rep_pairs],
        degree=[0] * len(rep_pairs),
        mult=mult,
        labels=[f"e{_fmt(J)}{_fmt(I)}" for I, J in rep_pairs],
    )
    return H0Result(alg, cohom, len(pairs), len(pairs) - Q.dim)


def h0_isomorphism_problems(n: int, d: int, fld: FieldSpec, h0: H0Result | None = None) -> list[str]:
    """Check that e_JI -> f_JI is an algebra isomorphism H^0(B(n,d)) -> A(n,d)."""
    from .auslander import build_A

    h0 = h0 or h0_algebra(n, d, fld)
    H, A = h0.algebra, build_A(n, d)
    problems = []
    objs = H.objects
    h_pairs = [(objs[H.source[b]], objs[H.target[b]]) for b in range(H.dim)]
    a_pairs = [(A.objects[A.source[b]], A.objects[A.target[b]]) for b in range(A.dim)]
    if set(h_pairs) != set(a_pairs):
        extra = sorted(set(h_pairs) - set(a_pairs))[:3]
        missing = sorted(set(a_pairs) - set(h_pairs))[:3]
        problems.append(f"kernel mismatch: only in H0 {extra}, only in A {missing}")
        return problems
    if any(not interleaved(I, J) for I, J in h_pairs):  # pragma: no cover
        problems.append("a surviving e_JI is not interleaved")
    where = {pr: b for b, pr in enumerate(a_pairs)}
    problems += same_structure(H, A, [where[pr] for pr in h_pairs])
    return problems


def to_json(n: int, d: int, fld: FieldSpec, pair: tuple[IndexSet, IndexSet] | None = None) -> dict:
    """Basis, degrees, differential and nonzero products, for one pair or all."""
    objs = enum_subsets(n, d)
    if pair is not None:
        pairs = [pair]
    else:
        pairs = [(I, J) for J in objs for I in objs if poset_leq(I, J)]
    homs = []
    for I, J in pairs:
        gens = basis(I, J)
        cx = hom_complex(I, J, fld)
        homs.append(
            {
                "source": list(I),
                "target": list(J),
                "pi0": list(pi0(I, J)) if gens else None,
                "basis": [
                    {"perm": list(g.perm), "word": list(g.word), "degree": g.degree} for g in gens
                ],
                "differential": [
                    {
                        "perm": list(g.perm),
                        "terms": [{"perm": list(h.perm), "coeff": _num(fld(c))} for h, c in sorted(differential(g).items())],
                    }
                    for g in gens
                    if differential(g)
                ],
                "cohomology": {str(k): v for k, v in sorted(homology(cx).items())} if gens else {},
            }
        )
    products = []
    if pair is None:
        for I, J in pairs:
            for K in objs:
                if not poset_leq(J, K):
                    continue
                for g in basis(I, J):
                    for h in basis(J, K):
                        for k, c in multiply(g, h).items():
                            if fld(c):
                                products.append([str(g), str(h), str(k), _num(fld(c))])
    return {"n": n, "d": d, "field": fld.name, "homs": homs, "products": products}


def _num(x) -> int | str:
    if hasattr(x, "denominator") and x.denominator != 1:
        return str(x)
    return int(x)
