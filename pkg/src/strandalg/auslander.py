"""Higher Auslander algebras A(n,d), their Koszul-graded duals and rotation.

All structure constants live in {0, +1}. Basis element ``f_JI`` of A(n,d)
runs from I to J. In the Koszul-graded algebra the element ``g_IJ`` attached
to a unit-difference pair I <= J runs the other way, from J to I, and has
degree rk(J) - rk(I).
"""

from __future__ import annotations

import json
from typing import Sequence

from .algebra import FinDimAlgebra, same_structure
from .combinat import (
    IndexSet,
    complement,
    enum_multisets,
    enum_subsets,
    interleaved,
    is_degenerate,
    multiset_leq,
    rank,
    unit_diff,
)


def _fmt(I: Sequence[int]) -> str:
    return "{" + ",".join(map(str, I)) + "}"


def _poset_algebra(name: str, objs: list[IndexSet], pairs: list[tuple[IndexSet, IndexSet]], keep, degree=None, labeler=None) -> FinDimAlgebra:
    """Algebra on basis ``pairs`` = (source, target) with f_KJ f_JI = f_KI iff keep(I, K)."""
    where = {I: a for a, I in enumerate(objs)}
    index = {pr: b for b, pr in enumerate(pairs)}
    out_of: dict[IndexSet, list[int]] = {}
    for b, (I, J) in enumerate(pairs):
        out_of.setdefault(I, []).append(b)
    mult = {}
    for y, (I, J) in enumerate(pairs):
        for x in out_of.get(J, []):
            K = pairs[x][1]
            if keep(I, K):
                mult[(x, y)] = (1, index[(I, K)])
    return FinDimAlgebra(
        name=name,
        objects=list(objs),
        source=[where[I] for I, _ in pairs],
        target=[where[J] for _, J in pairs],
        degree=[degree(I, J) if degree else 0 for I, J in pairs],
        mult=mult,
        labels=[labeler(I, J) if labeler else f"f{_fmt(J)}{_fmt(I)}" for I, J in pairs],
    )


def build_A(n: int, d: int) -> FinDimAlgebra:
    """A(n,d): basis f_JI for interleaved (I, J); f_KJ f_JI = f_KI iff interleaved(I, K)."""
    objs = enum_subsets(n, d)
    pairs = [(I, J) for I in objs for J in objs if interleaved(I, J)]
    return _poset_algebra(f"A({n},{d})", objs, pairs, interleaved)


def incidence_algebra(objs: list[IndexSet]) -> FinDimAlgebra:
    pairs = [(I, J) for I in objs for J in objs if multiset_leq(I, J)]
    return _poset_algebra("incidence", objs, pairs, lambda I, K: True)


def build_A_multichoose(n: int, d: int) -> tuple[FinDimAlgebra, list[str]]:
    """Incidence algebra of d-multisets modulo the ideal of degenerate idempotents.

    Returns the quotient and the list of problems found when comparing it to
    ``build_A`` under the identity on labels (empty means certified).
    """
    ms = enum_multisets(n, d)
    inc = incidence_algebra(ms)
    objs = inc.objects
    # two-sided ideal spanned by x * e_K * y over degenerate K
    ideal: set[int] = set()
    for k, K in enumerate(objs):
        if not is_degenerate(K):
            continue
        e = inc.idempotent[k]
        left = [x for x in range(inc.dim) if inc.source[x] == k]
        right = [y for y in range(inc.dim) if inc.target[y] == k]
        for x in left:
            xe = inc.mul({x: 1}, {e: 1})
            for y in right:
                ideal.update(inc.mul(xe, {y: 1}))
    keep = [b for b in range(inc.dim) if b not in ideal]
    pos = {b: i for i, b in enumerate(keep)}
    used = sorted({inc.source[b] for b in keep} | {inc.target[b] for b in keep})
    new_obj = {o: i for i, o in enumerate(used)}
    mult = {}
    for (x, y), (c, z) in inc.mult.items():
        if x in pos and y in pos and z in pos:
            mult[(pos[x], pos[y])] = (c, pos[z])
    Q = FinDimAlgebra(
        name=f"A_multichoose({n},{d})",
        objects=[objs[o] for o in used],
        source=[new_obj[inc.source[b]] for b in keep],
        target=[new_obj[inc.target[b]] for b in keep],
        degree=[0] * len(keep),
        mult=mult,
        labels=[inc.labels[b] for b in keep],
    )
    return Q, multichoose_certificate(Q, build_A(n, d))


def multichoose_certificate(Q: FinDimAlgebra, A: FinDimAlgebra) -> list[str]:
    q_pairs = [(Q.objects[Q.source[b]], Q.objects[Q.target[b]]) for b in range(Q.dim)]
    a_pairs = [(A.objects[A.source[b]], A.objects[A.target[b]]) for b in range(A.dim)]
    if sorted(q_pairs) != sorted(a_pairs):
        return [f"basis mismatch: {sorted(set(q_pairs) ^ set(a_pairs))[:4]}"]
    where = {pr: b for b, pr in enumerate(a_pairs)}
    return same_structure(Q, A, [where[pr] for pr in q_pairs])


def build_koszul_graded(n: int, d: int) -> FinDimAlgebra:
    """Graded algebra on g_IJ : J -> I for unit-difference pairs I <= J.

    Each strand contributes a copy of the d=1 algebra in which two
    consecutive steps compose to zero, so g_IJ g_JK = g_IK exactly when
    (I, K) is again a unit-difference pair.
    """
    objs = enum_subsets(n, d)
    # stored as (source, target) = (J, I)
    pairs = [(J, I) for J in objs for I in objs if unit_diff(I, J)]
    return _poset_algebra(
        f"K({n},{d})",
        objs,
        pairs,
        keep=lambda J, I: unit_diff(I, J),
        degree=lambda J, I: rank(J) - rank(I),
        labeler=lambda J, I: f"g{_fmt(I)}{_fmt(J)}",
    )


def generated_in_degrees_0_1(K: FinDimAlgebra) -> list[str]:
    """Elements of degree m >= 2 that are not products of m degree-one elements."""
    reach = {b for b in range(K.dim) if K.degree[b] == 1}
    deg1 = sorted(reach)
    frontier = set(deg1)
    while frontier:
        nxt = set()
        for x in deg1:
            for y in frontier:
                r = K.mult.get((x, y))
                if r is not None and r[1] not in reach:
                    nxt.add(r[1])
        reach |= nxt
        frontier = nxt
    return [K.labels[b] for b in range(K.dim) if K.degree[b] >= 1 and b not in reach]


def sharp_gap_condition(I: IndexSet, J: IndexSet, n: int) -> bool:
    """J° <= I° and u_b < v_{b+1}, with u from I° and v from J°."""
    u, v = complement(I, n), complement(J, n)
    if not all(x <= y for x, y in zip(v, u)):
        return False
    return all(u[b] < v[b + 1] for b in range(len(u) - 1))


def sharp_gap_condition_reversed(I: IndexSet, J: IndexSet, n: int) -> bool:
    """The other direction, v_b < u_{b+1}; kept to exhibit the counterexample."""
    u, v = complement(I, n), complement(J, n)
    if not all(x <= y for x, y in zip(v, u)):
        return False
    return all(v[b] < u[b + 1] for b in range(len(u) - 1))


def iso_sharp(n: int, d: int) -> tuple[list[int], list[str]]:
    """Basis bijection g_IJ -> f_{I°J°} from K(n,d) to A(n, n-d) and its problems."""
    K = build_koszul_graded(n, d)
    A = build_A(n, n - d)
    a_index = {(A.objects[A.source[b]], A.objects[A.target[b]]): b for b in range(A.dim)}
    problems = []
    bij = []
    for b in range(K.dim):
        J, I = K.objects[K.source[b]], K.objects[K.target[b]]
        image = (complement(J, n), complement(I, n))  # f_{I°J°} runs J° -> I°
        if image not in a_index:
            problems.append(f"{K.labels[b]} has no partner f{_fmt(image[1])}{_fmt(image[0])}")
            bij.append(-1)
        else:
            bij.append(a_index[image])
    if problems:
        return bij, problems
    if K.dim != A.dim:
        return bij, [f"dimension mismatch {K.dim} vs {A.dim}"]
    return bij, same_structure(K, A, bij)


def rotate(I: Sequence[int], n: int) -> IndexSet:
    """Subtract one modulo n+1 on a subset of {0..n}.

    >>> rotate((0, 1), 3)
    (0, 3)
    """
    if any(not 0 <= i <= n for i in I):
        raise ValueError(f"{tuple(I)} is not a subset of {{0..{n}}}")
    return tuple(sorted((i - 1) % (n + 1) for i in I))


# -- reports ----------------------------------------------------------------


def algebra_json(A: FinDimAlgebra) -> dict:
    idem = [A.labels[A.idempotent[o]] for o in range(len(A.objects))]
    return {
        "name": A.name,
        "dim": A.dim,
        "objects": [list(o) for o in A.objects],
        "idempotents": idem,
        "basis": [
            {
                "label": A.labels[b],
                "source": list(A.objects[A.source[b]]),
                "target": list(A.objects[A.target[b]]),
                "degree": A.degree[b],
            }
            for b in range(A.dim)
        ],
        "arrows": [A.labels[b] for b in A.arrows()],
        "products": [
            [A.labels[x], A.labels[y], c, A.labels[z]] for (x, y), (c, z) in sorted(A.mult.items())
        ],
    }


def zero_relations(A: FinDimAlgebra) -> list[tuple[int, int]]:
    """Composable arrow pairs (b after a) whose product vanishes."""
    arrows = A.arrows()
    return [(b, a) for a in arrows for b in arrows if A.source[b] == A.target[a] and (b, a) not in A.mult]


def quiver_dot(A: FinDimAlgebra) -> str:
    name = A.name.replace('"', "")
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for o in A.objects:
        lines.append(f'  "{_fmt(o)}";')
    for b in A.arrows():
        s, t = A.objects[A.source[b]], A.objects[A.target[b]]
        extra = f', label="{A.degree[b]}"' if A.degree[b] else ""
        lines.append(f'  "{_fmt(s)}" -> "{_fmt(t)}" [id="{A.labels[b]}"{extra}];')
    for b, a in zero_relations(A):
        lines.append(f"  // zero relation: {A.labels[b]} * {A.labels[a]} = 0")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_text(A: FinDimAlgebra) -> str:
    out = [f"{A.name}: dim {A.dim}, {len(A.objects)} objects"]
    for b in A.arrows():
        s, t = A.objects[A.source[b]], A.objects[A.target[b]]
        out.append(f"  {_fmt(s)} -> {_fmt(t)}")
    rels = zero_relations(A)
    if rels:
        out.append(f"  zero relations: {len(rels)}")
    return "\n".join(out) + "\n"


def hom_pattern_table(n: int, d: int) -> dict:
    """Which pairs of objects carry morphisms in A(n,d) and in K(n,d), with degrees."""
    A = build_A(n, d)
    K = build_koszul_graded(n, d)
    objs = enum_subsets(n, d)

    def entries(alg: FinDimAlgebra) -> list[dict]:
        rows = []
        for b in range(alg.dim):
            s, t = alg.objects[alg.source[b]], alg.objects[alg.target[b]]
            if s != t:
                rows.append({"from": _fmt(s), "to": _fmt(t), "degree": alg.degree[b]})
        return sorted(rows, key=lambda r: (objs.index(_parse(r["from"])), objs.index(_parse(r["to"]))))

    return {
        "n": n,
        "d": d,
        "objects": [_fmt(o) for o in objs],
        "auslander": {
            "dim": A.dim,
            "morphisms": entries(A),
            "arrows": sorted(
                ([_fmt(A.objects[A.source[b]]), _fmt(A.objects[A.target[b]])] for b in A.arrows()),
                key=lambda r: (objs.index(_parse(r[0])), objs.index(_parse(r[1]))),
            ),
        },
        "koszul": {"dim": K.dim, "morphisms": entries(K)},
    }


def _parse(s: str) -> IndexSet:
    body = s.strip("{}")
    return tuple(int(x) for x in body.split(",")) if body else ()


def hom_pattern_json(n: int, d: int) -> str:
    return json.dumps(hom_pattern_table(n, d), indent=1, sort_keys=True) + "\n"
