"""Modules over finite-dimensional algebras: resolutions, Ext, dimensions.

A module is a representation: one vector space per object and, for each
basis element b: x -> y, a matrix from the x-block to the y-block with
act(b) act(c) = act(b*c). For A(n,d), where f_KJ f_JI = f_KI, these are the
left modules; dim P_I counts the K with (I, K) interleaved. Right modules are
representations of the opposite algebra and run through the same code, which
is how the standard resolutions below are built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import FinDimAlgebra
from .auslander import build_A, build_koszul_graded
from .combinat import IndexSet, enum_subsets, interleaved
from .exactla import QQ, FieldSpec, Quotient, SparseMatrix, kernel_basis, rank, rref

Dense = list  # list of rows


class ResolutionOverflow(RuntimeError):
    """A projective resolution did not stop within the allowed length."""


# -- dense helpers -------------------------------------------------------------


def _zeros(r: int, c: int, f: FieldSpec) -> Dense:
    return [[f.zero] * c for _ in range(r)]


def _matvec(m: Dense, v: Sequence, f: FieldSpec) -> list:
    return [f(sum(a * b for a, b in zip(row, v) if a and b)) for row in m]


def _matmul(a: Dense, b: Dense, cols: int, f: FieldSpec) -> Dense:
    out = _zeros(len(a), cols, f)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out[i] = [f(x) for x in acc]
    return out


def _sparse(m: Dense, cols: int, f: FieldSpec) -> SparseMatrix:
    return SparseMatrix.from_dense(m, f, cols=cols)


def _densify(v: dict, n: int, f: FieldSpec) -> list:
    out = [f.zero] * n
    for i, x in v.items():
        out[i] = x
    return out


def _obj(B: FinDimAlgebra, x) -> int:
    return x if isinstance(x, int) else B.obj_index(tuple(x))


# -- modules -------------------------------------------------------------------


class AModule:
    """Representation of ``alg``: block sizes and one matrix per basis element.

    Matrices for idempotents are implicit identities; absent matrices are zero.
    """

    def __init__(self, alg: FinDimAlgebra, dims: Sequence[int], act: dict[int, Dense], fld: FieldSpec = QQ, name: str = ""):
        if len(dims) != len(alg.objects):
            raise ValueError("one block per object is required")
        self.alg = alg
        self.dims = list(dims)
        self.field = fld
        self.name = name
        self.act = {b: m for b, m in act.items() if any(any(r) for r in m)}
        for b, m in self.act.items():
            if len(m) != self.dims[alg.target[b]] or any(len(r) != self.dims[alg.source[b]] for r in m):
                raise ValueError(f"action of {alg.labels[b]} has the wrong shape")

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims)

    def is_idempotent(self, b: int) -> bool:
        return self.alg.idempotent.get(self.alg.source[b]) == b

    def matrix(self, b: int) -> Dense:
        t, s = self.alg.target[b], self.alg.source[b]
        if self.is_idempotent(b):
            f = self.field
            return [[f.one if i == j else f.zero for j in range(self.dims[s])] for i in range(self.dims[t])]
        m = self.act.get(b)
        return m if m is not None else _zeros(self.dims[t], self.dims[s], self.field)

    def apply(self, b: int, v: Sequence) -> list:
        if self.is_idempotent(b):
            return list(v)
        m = self.act.get(b)
        if m is None:
            return [self.field.zero] * self.dims[self.alg.target[b]]
        return _matvec(m, v, self.field)

    def radical_elements(self) -> list[int]:
        return [b for b in range(self.alg.dim) if not self.is_idempotent(b)]

    def check(self) -> list[str]:
        """Violations of act(b) act(c) = act(b*c)."""
        A, f = self.alg, self.field
        problems = []
        for x, y in A.composable():
            lhs = _matmul(self.matrix(x), self.matrix(y), self.dims[A.source[y]], f)
            r = A.product(x, y)
            if r is None:
                rhs = _zeros(self.dims[A.target[x]], self.dims[A.source[y]], f)
            else:
                c, z = r
                rhs = [[f(c * e) for e in row] for row in self.matrix(z)]
            if lhs != rhs:
                problems.append(f"act({A.labels[x]}) act({A.labels[y]}) is wrong")
        return problems

    def __repr__(self) -> str:
        return f"AModule({self.name or '?'} over {self.alg.name}, dims={self.dims})"


class FreeModule(AModule):
    """Direct sum of projectives alg*e_x, one per generator.

    The y-block has basis (i, b) with b: gens[i] -> y.
    """

    def __init__(self, alg: FinDimAlgebra, gens: Sequence[int], fld: FieldSpec = QQ, name: str = ""):
        self.gens = list(gens)
        self.coords: list[list[tuple[int, int]]] = [[] for _ in alg.objects]
        for i, x in enumerate(self.gens):
            for y in range(len(alg.objects)):
                self.coords[y].extend((i, b) for b in alg.between(x, y))
        self.pos = [{c: k for k, c in enumerate(cs)} for cs in self.coords]
        dims = [len(cs) for cs in self.coords]
        act: dict[int, Dense] = {}
        for c in range(alg.dim):
            if alg.idempotent.get(alg.source[c]) == c:
                continue
            y, z = alg.source[c], alg.target[c]
            m = _zeros(dims[z], dims[y], fld)
            for j, (i, b) in enumerate(self.coords[y]):
                r = alg.product(c, b)
                if r is not None:
                    m[self.pos[z][(i, r[1])]][j] = fld(r[0])
            act[c] = m
        super().__init__(alg, dims, act, fld, name)

    def generator(self, i: int) -> list:
        """Generator i as a vector in its own block."""
        x = self.gens[i]
        v = [self.field.zero] * self.dims[x]
        v[self.pos[x][(i, self.alg.idempotent[x])]] = self.field.one
        return v


def projective(B: FinDimAlgebra, x, fld: FieldSpec = QQ) -> FreeModule:
    """P_x = B e_x: spanned by the basis elements leaving x."""
    x = _obj(B, x)
    return FreeModule(B, [x], fld, name=f"P{B.objects[x]}")


def injective(B: FinDimAlgebra, x, fld: FieldSpec = QQ) -> AModule:
    """E_x = D(e_x B): the y-block is dual to the basis elements y -> x."""
    x = _obj(B, x)
    nobj = len(B.objects)
    blocks = [B.between(y, x) for y in range(nobj)]
    pos = [{b: k for k, b in enumerate(bl)} for bl in blocks]
    dims = [len(bl) for bl in blocks]
    act: dict[int, Dense] = {}
    for c in range(B.dim):
        if B.idempotent.get(B.source[c]) == c:
            continue
        y, z = B.source[c], B.target[c]
        m = _zeros(dims[z], dims[y], fld)
        # (c.phi)(b') = phi(b' c)
        for row, bp in enumerate(blocks[z]):
            r = B.product(bp, c)
            if r is not None:
                m[row][pos[y][r[1]]] = fld(r[0])
        act[c] = m
    return AModule(B, dims, act, fld, name=f"E{B.objects[x]}")


def simple(B: FinDimAlgebra, x, fld: FieldSpec = QQ) -> AModule:
    x = _obj(B, x)
    dims = [1 if y == x else 0 for y in range(len(B.objects))]
    return AModule(B, dims, {}, fld, name=f"S{B.objects[x]}")


def dual(M: AModule) -> AModule:
    """D(M) as a representation of the opposite algebra."""
    act = {b: [list(col) for col in zip(*m)] for b, m in M.act.items()}
    return AModule(M.alg.opposite(), M.dims, act, M.field, name=f"D{M.name}")


def direct_sum(mods: Sequence[AModule], name: str = "") -> AModule:
    if not mods:
        raise ValueError("empty direct sum")
    A, f = mods[0].alg, mods[0].field
    if any(M.alg is not A or M.field != f for M in mods):
        raise ValueError("summands live over different algebras or fields")
    dims = [sum(M.dims[y] for M in mods) for y in range(len(A.objects))]
    act: dict[int, Dense] = {}
    for b in range(A.dim):
        if mods[0].is_idempotent(b):
            continue
        s, t = A.source[b], A.target[b]
        m = _zeros(dims[t], dims[s], f)
        r0 = c0 = 0
        for M in mods:
            blk = M.act.get(b)
            if blk is not None:
                for i, row in enumerate(blk):
                    m[r0 + i][c0 : c0 + len(row)] = row
            r0 += M.dims[t]
            c0 += M.dims[s]
        act[b] = m
    return AModule(A, dims, act, f, name=name or "+".join(M.name for M in mods))


def regular(B: FinDimAlgebra, fld: FieldSpec = QQ) -> AModule:
    return FreeModule(B, range(len(B.objects)), fld, name=B.name)


def dual_regular(B: FinDimAlgebra, fld: FieldSpec = QQ) -> AModule:
    return direct_sum([injective(B, x, fld) for x in range(len(B.objects))], name=f"D{B.name}")


# -- maps and complexes --------------------------------------------------------


@dataclass
class ModuleMap:
    src: AModule
    tgt: AModule
    blocks: list[Dense]  # per object, tgt.dims[y] x src.dims[y]

    def is_zero(self) -> bool:
        return not any(any(any(r) for r in m) for m in self.blocks)

    def compose_after(self, other: "ModuleMap") -> "ModuleMap":
        """self o other."""
        f = self.src.field
        bl = [_matmul(a, b, other.src.dims[y], f) for y, (a, b) in enumerate(zip(self.blocks, other.blocks))]
        return ModuleMap(other.src, self.tgt, bl)

    def is_homomorphism(self) -> bool:
        A, f = self.src.alg, self.src.field
        for b in self.src.radical_elements():
            s, t = A.source[b], A.target[b]
            lhs = _matmul(self.blocks[t], self.src.matrix(b), self.src.dims[s], f)
            rhs = _matmul(self.tgt.matrix(b), self.blocks[s], self.src.dims[s], f)
            if lhs != rhs:
                return False
        return True


def free_map(F: FreeModule, M: AModule, images: Sequence[Sequence]) -> ModuleMap:
    """The map F -> M sending generator i to images[i] in M's gens[i]-block."""
    blocks = []
    for y, cs in enumerate(F.coords):
        cols = [M.apply(b, images[i]) for i, b in cs]
        blocks.append([list(r) for r in zip(*cols)] if cols else _zeros(M.dims[y], 0, M.field))
    return ModuleMap(F, M, blocks)


@dataclass
class ModuleComplex:
    """terms[k] sits in degree -k; maps[k] : terms[k+1] -> terms[k]."""

    terms: list[AModule]
    maps: list[ModuleMap]

    def composites_zero(self) -> bool:
        return all(self.maps[k].compose_after(self.maps[k + 1]).is_zero() for k in range(len(self.maps) - 1))

    def homology_dims(self, k: int) -> tuple[int, ...]:
        """Dimension vector of H at terms[k]."""
        T = self.terms[k]
        f = T.field
        out = []
        for y in range(len(T.dims)):
            n = T.dims[y]
            kdim = n
            if k > 0:
                kdim = n - rank(_sparse(self.maps[k - 1].blocks[y], n, f))
            idim = 0
            if k < len(self.maps):
                idim = rank(_sparse(self.maps[k].blocks[y], self.terms[k + 1].dims[y], f))
            out.append(kdim - idim)
        return tuple(out)


# -- tops, kernels, cokernels ---------------------------------------------------


def top_generators(M: AModule) -> list[tuple[int, list]]:
    """Vectors (object, vector) whose classes form a basis of M / rad M."""
    f = M.field
    A = M.alg
    out = []
    for y in range(len(M.dims)):
        n = M.dims[y]
        if not n:
            continue
        cols = []
        for b in M.act:
            if A.target[b] == y:
                cols.extend(list(c) for c in zip(*M.act[b]))
        piv = set(rref(_sparse(cols, n, f))[1]) if cols else set()
        for j in range(n):
            if j not in piv:
                out.append((y, [f.one if i == j else f.zero for i in range(n)]))
    return out


def _kernel_with_free(m: SparseMatrix) -> tuple[list[dict], list[int]]:
    """Kernel basis; vector t is 1 at free[t] and 0 at the other free columns."""
    rows, piv = rref(m)
    f = m.field
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    out = []
    for c0 in free:
        v = {c0: f.one}
        for row, c in zip(rows, piv):
            x = row.get(c0)
            if x:
                v[c] = f.neg(x)
        out.append(v)
    return out, free


def kernel(phi: ModuleMap) -> tuple[AModule, list[list[list]]]:
    """Kernel module and, per object, its basis vectors inside phi.src."""
    M, f = phi.src, phi.src.field
    A = M.alg
    bases, frees = [], []
    for y, n in enumerate(M.dims):
        ker, free = _kernel_with_free(_sparse(phi.blocks[y], n, f)) if n else ([], [])
        bases.append([_densify(v, n, f) for v in ker])
        frees.append(free)
    dims = [len(b) for b in bases]
    act: dict[int, Dense] = {}
    for c in M.act:
        y, z = A.source[c], A.target[c]
        m = _zeros(dims[z], dims[y], f)
        for j, v in enumerate(bases[y]):
            w = M.apply(c, v)
            for t, col in enumerate(frees[z]):
                m[t][j] = w[col]
        act[c] = m
    return AModule(A, dims, act, f, name="ker"), bases


def cokernel(phi: ModuleMap) -> AModule:
    N, f = phi.tgt, phi.tgt.field
    A = N.alg
    quots = []
    for y, n in enumerate(N.dims):
        ident = [{i: f.one} for i in range(n)]
        img = [{i: x for i, x in enumerate(col) if x} for col in zip(*phi.blocks[y])] if phi.src.dims[y] else []
        quots.append(Quotient(ident, img, n, f))
    dims = [q.dim for q in quots]
    act: dict[int, Dense] = {}
    for c in N.act:
        y, z = A.source[c], A.target[c]
        m = _zeros(dims[z], dims[y], f)
        for j, rep in enumerate(quots[y].representatives):
            w = N.apply(c, _densify(rep, N.dims[y], f))
            coords = quots[z].project({i: x for i, x in enumerate(w) if x})
            for t, x in enumerate(coords):
                m[t][j] = x
        act[c] = m
    return AModule(A, dims, act, f, name="coker")


# -- minimal projective resolutions ------------------------------------------------


@dataclass
class ProjResolution:
    """P_k -> ... -> P_0 -> M with generator images.

    maps[k][j] is the image of generator j of P_{k+1}, a vector in the block
    of P_k at that generator's object. ``complete`` is False when the
    computation was cut off after ``len(terms)`` terms.
    """

    module: AModule
    terms: list[FreeModule]
    maps: list[list[list]]
    augmentation: list[list]
    complete: bool = True

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def generators(self, k: int) -> list[int]:
        return list(self.terms[k].gens)

    def multiplicities(self) -> list[dict[int, int]]:
        out = []
        for F in self.terms:
            m: dict[int, int] = {}
            for x in F.gens:
                m[x] = m.get(x, 0) + 1
            out.append(m)
        return out

    def complex(self) -> ModuleComplex:
        return ModuleComplex(list(self.terms), [free_map(self.terms[k + 1], self.terms[k], self.maps[k]) for k in range(len(self.maps))])

    def euler_ok(self) -> bool:
        """sum (-1)^k dim P_k = dim M, object by object."""
        if not self.complete:
            return False
        for y in range(len(self.module.dims)):
            if sum((-1) ** k * F.dims[y] for k, F in enumerate(self.terms)) != self.module.dims[y]:
                return False
        return True


def min_proj_resolution(M: AModule, max_len: int = 64, truncate: bool = False) -> ProjResolution:
    """Minimal projective resolution of M, by projective covers of syzygies.

    At most ``max_len + 1`` terms are computed. Past that, ResolutionOverflow
    is raised, or the partial resolution is returned when ``truncate`` is set.
    """
    A, f = M.alg, M.field
    terms: list[FreeModule] = []
    maps: list[list[list]] = []
    augmentation: list[list] = []
    cur, embed = M, None
    while cur.dim:
        if len(terms) > max_len:
            if truncate:
                return ProjResolution(M, terms, maps, augmentation, complete=False)
            raise ResolutionOverflow(f"{M.name}: no projective resolution of length <= {max_len}")
        gens = top_generators(cur)
        F = FreeModule(A, [x for x, _ in gens], f, name=f"P{len(terms)}")
        if embed is None:
            augmentation = [v for _, v in gens]
        else:
            lifted = []
            for x, v in gens:
                prev = terms[-1].dims[x]
                w = [f.zero] * prev
                for t, c in enumerate(v):
                    if c:
                        w = [f(a + c * b) for a, b in zip(w, embed[x][t])]
                lifted.append(w)
            maps.append(lifted)
        terms.append(F)
        cur, embed = kernel(free_map(F, cur, [v for _, v in gens]))
    return ProjResolution(M, terms, maps, augmentation)


# -- Hom and Ext -----------------------------------------------------------------


def _hom_differential(res: ProjResolution, N: AModule, k: int) -> tuple[SparseMatrix, int, int]:
    """delta_k : Hom(P_k, N) -> Hom(P_{k+1}, N) as a matrix."""
    f = N.field
    src = res.terms[k]
    offs, c = [], 0
    for x in src.gens:
        offs.append(c)
        c += N.dims[x]
    cols = c
    if k + 1 >= len(res.terms):
        return SparseMatrix(0, cols, {}, f), 0, cols
    tgt = res.terms[k + 1]
    entries: dict[tuple[int, int], object] = {}
    r0 = 0
    for j, y in enumerate(tgt.gens):
        img = res.maps[k][j]
        for pos, coef in enumerate(img):
            if not coef:
                continue
            i, b = src.coords[y][pos]
            m = N.matrix(b)
            for r, row in enumerate(m):
                for s, x in enumerate(row):
                    if x:
                        key = (r0 + r, offs[i] + s)
                        entries[key] = f(entries.get(key, f.zero) + coef * x)
        r0 += N.dims[y]
    return SparseMatrix(r0, cols, entries, f), r0, cols


def ext_from_resolution(res: ProjResolution, N: AModule, k_max: int) -> list[int]:
    if res.module.alg is not N.alg:
        raise ValueError("modules over different algebras")
    if not res.complete and len(res.terms) <= k_max + 1:
        raise ResolutionOverflow("resolution too short for the requested degrees")
    out = []
    prev_rank = 0
    for k in range(k_max + 1):
        if k >= len(res.terms):
            out.append(0)
            prev_rank = 0
            continue
        m, _, cols = _hom_differential(res, N, k)
        r = rank(m) if m.entries else 0
        out.append(cols - r - prev_rank)
        prev_rank = r
    return out


def ext_dims(M: AModule, N: AModule, k_max: int, max_len: int = 64) -> list[int]:
    """[dim Ext^k(M, N) for k = 0..k_max]."""
    return ext_from_resolution(min_proj_resolution(M, max_len), N, k_max)


def hom_space(M: AModule, N: AModule) -> list[list[Dense]]:
    """Basis of Hom(M, N), each element a list of per-object blocks."""
    if M.alg is not N.alg:
        raise ValueError("modules over different algebras")
    A, f = M.alg, M.field
    offs, c = [], 0
    for y in range(len(M.dims)):
        offs.append(c)
        c += N.dims[y] * M.dims[y]
    nvar = c

    def var(y, r, s):
        return offs[y] + r * M.dims[y] + s

    entries: dict[tuple[int, int], object] = {}
    row = 0
    for b in M.radical_elements():
        x, y = A.source[b], A.target[b]
        mb, nb = M.matrix(b), N.matrix(b)
        # T_y M(b) - N(b) T_x = 0
        for r in range(N.dims[y]):
            for s in range(M.dims[x]):
                eq: dict[int, object] = {}
                for t in range(M.dims[y]):
                    if mb[t][s]:
                        eq[var(y, r, t)] = eq.get(var(y, r, t), 0) + mb[t][s]
                for t in range(N.dims[x]):
                    if nb[r][t]:
                        eq[var(x, t, s)] = eq.get(var(x, t, s), 0) - nb[r][t]
                eq = {k: v for k, v in eq.items() if f(v)}
                if eq:
                    for k, v in eq.items():
                        entries[(row, k)] = v
                    row += 1
    basis = kernel_basis(SparseMatrix(row, nvar, entries, f))
    out = []
    for v in basis:
        blocks = []
        for y in range(len(M.dims)):
            blocks.append([[v.get(var(y, r, s), f.zero) for s in range(M.dims[y])] for r in range(N.dims[y])])
        out.append(blocks)
    return out


def find_isomorphism(M: AModule, N: AModule, tries: int = 32, seed: int = 0) -> ModuleMap | None:
    """An explicit isomorphism M -> N, or None.

    Random combinations of a Hom basis are tested for invertibility. None is
    certain when the dimension vectors differ or Hom is zero; otherwise it
    means no isomorphism turned up within ``tries`` draws.
    """
    if M.dims != N.dims:
        return None
    f = M.field
    basis = hom_space(M, N)
    if not basis:
        return None
    rng = random.Random(seed)
    span = f.p if f.kind == "Fp" else 7
    for _ in range(tries):
        coefs = [rng.randrange(span) for _ in basis]
        blocks = []
        for y, n in enumerate(M.dims):
            blocks.append([[f(sum(c * h[y][r][s] for c, h in zip(coefs, basis))) for s in range(n)] for r in range(n)])
        if all(rank(_sparse(b, n, f)) == n for b, n in zip(blocks, M.dims) if n):
            return ModuleMap(M, N, blocks)
    return None


# -- homological dimensions ------------------------------------------------------------


def projective_dimension(M: AModule, max_len: int = 64) -> int:
    return min_proj_resolution(M, max_len).length


def global_dimension(B: FinDimAlgebra, fld: FieldSpec = QQ, max_len: int = 64) -> int:
    return max(projective_dimension(simple(B, x, fld), max_len) for x in range(len(B.objects)))


def gldim(n: int, d: int, fld: FieldSpec = QQ) -> int:
    return global_dimension(build_A(n, d), fld)


def is_projective(M: AModule) -> bool:
    """M is projective iff it has the dimension vector of its projective cover."""
    top = top_generators(M)
    P = FreeModule(M.alg, [x for x, _ in top], M.field)
    return P.dims == M.dims


def projective_injective_objects(B: FinDimAlgebra, fld: FieldSpec = QQ) -> list[int]:
    return [y for y in range(len(B.objects)) if is_projective(injective(B, y, fld))]


def dominant_dimension(B: FinDimAlgebra, cap: int, fld: FieldSpec = QQ) -> int:
    """Leading projective-injective terms in the injective coresolution of B.

    The coresolution of B is the dual of the projective resolution of D(B)
    over the opposite algebra. Only ``cap`` terms are examined, so the value
    ``cap`` means "at least cap".
    """
    op = B.opposite()
    pi = set(projective_injective_objects(B, fld))
    res = min_proj_resolution(dual(regular(B, fld)), max_len=cap - 1, truncate=True)
    for k, F in enumerate(res.terms):
        if k >= cap:
            break
        if not set(F.gens) <= pi:
            return k
    if res.module.alg is not op:
        raise AssertionError("dual module built over the wrong algebra")
    return cap


def domdim(n: int, d: int, fld: FieldSpec = QQ) -> int:
    """Dominant dimension of A(n,d), capped at d+1."""
    return dominant_dimension(build_A(n, d), d + 1, fld)


# -- verdicts ----------------------------------------------------------------------


def _fmt(I) -> str:
    return "{" + ",".join(map(str, I)) + "}"


@dataclass
class Verdict:
    ok: bool
    payload: dict = field(default_factory=dict)


def cluster_tilting_check(n: int, d: int, fld: FieldSpec = QQ) -> Verdict:
    """Ext^k(A+DA, A+DA) for 0 < k <= d.

    ``ok`` needs vanishing for 0 < k < d. Nonvanishing of Ext^d(DA, A) is
    reported under ``top_degree_nonzero``.
    """
    A = build_A(n, d)
    objs = range(len(A.objects))
    P = [projective(A, x, fld) for x in objs]
    E = [injective(A, x, fld) for x in objs]
    table = {k: {"A,A": 0, "A,DA": 0, "DA,A": 0, "DA,DA": 0} for k in range(1, d + 1)}
    nonzero = []
    for mname, mods in (("A", P), ("DA", E)):
        for x, M in zip(objs, mods):
            res = min_proj_resolution(M)
            for nname, targets in (("A", P), ("DA", E)):
                for y, N in zip(objs, targets):
                    ext = ext_from_resolution(res, N, d)
                    for k in range(1, d + 1):
                        if ext[k]:
                            table[k][f"{mname},{nname}"] += ext[k]
                            if k < d:
                                nonzero.append({"k": k, "M": f"{mname}{_fmt(A.objects[x])}", "N": f"{nname}{_fmt(A.objects[y])}", "dim": ext[k]})
    vanishing = all(not v for k in range(1, d) for v in table[k].values())
    top = table[d]["DA,A"] > 0
    return Verdict(vanishing, {
        "n": n, "d": d, "field": fld.name,
        "ext_table": {str(k): v for k, v in table.items()},
        "vanishing_below_d": vanishing,
        "top_degree_nonzero": top,
        "counterexamples": nonzero,
    })


def koszul_ext_table(n: int, d: int, fld: FieldSpec = QQ) -> Verdict:
    """Compare dim Ext^k(S_I, S_J) over A(n,d) with the Koszul-graded algebra.

    Convention, pinned by the (2,1) case: Ext^k(S_I, S_J) corresponds to the
    basis element g_IJ : J -> I of degree k.
    """
    A = build_A(n, d)
    K = build_koszul_graded(n, d)
    objs = A.objects
    expected: dict[tuple, list[int]] = {(I, J): [0] * (d + 1) for I in objs for J in objs}
    for b in range(K.dim):
        I, J = K.objects[K.target[b]], K.objects[K.source[b]]
        if K.degree[b] <= d:
            expected[(I, J)][K.degree[b]] += 1
    S = [simple(A, x, fld) for x in range(len(objs))]
    got: dict[tuple, list[int]] = {}
    mismatches = []
    for x, I in enumerate(objs):
        res = min_proj_resolution(S[x])
        for y, J in enumerate(objs):
            got[(I, J)] = ext_from_resolution(res, S[y], d)
            if got[(I, J)] != expected[(I, J)]:
                mismatches.append({"I": list(I), "J": list(J), "ext": got[(I, J)], "expected": expected[(I, J)]})
    table = {
        f"{_fmt(I)},{_fmt(J)}": v for (I, J), v in sorted(got.items()) if any(v)
    }
    return Verdict(not mismatches, {
        "n": n, "d": d, "field": fld.name,
        "total": sum(sum(v) for v in got.values()),
        "table": table,
        "mismatches": mismatches,
    })


def _check_I(I: Sequence[int], n: int) -> IndexSet:
    I = tuple(I)
    if list(I) != sorted(set(I)):
        raise ValueError(f"{I} is not a strictly increasing set")
    if len(I) < 2:
        raise ValueError("need at least two elements")
    if 0 in I or any(not 1 <= i <= n for i in I):
        raise ValueError(f"{I} must be a subset of 1..{n}")
    return I


def standard_complex(I: Sequence[int], n: int, fld: FieldSpec = QQ) -> tuple[ProjResolution, list[IndexSet]]:
    """P_{X_d} -> ... -> P_{X_0} over the opposite of A(n,d), X_a = I minus i_a.

    Each map sends the generator to the basis element f_{X_{a-1} X_a}. The
    result is packaged as a (possibly non-exact) ProjResolution of the end
    cokernel.
    """
    I = _check_I(I, n)
    d = len(I) - 1
    B = build_A(n, d).opposite()
    X = [tuple(i for i in I if i != I[a]) for a in range(d + 1)]
    terms = [FreeModule(B, [B.obj_index(Xa)], fld, name=f"P{_fmt(Xa)}") for Xa in X]
    maps = []
    for a in range(1, d + 1):
        if not interleaved(X[a], X[a - 1]):
            raise AssertionError(f"{X[a]} and {X[a - 1]} are not interleaved")
        src, tgt = terms[a], terms[a - 1]
        y = src.gens[0]
        (b,) = B.between(tgt.gens[0], y)
        v = [fld.zero] * tgt.dims[y]
        v[tgt.pos[y][(0, b)]] = fld.one
        maps.append([v])
    return ProjResolution(AModule(B, [0] * len(B.objects), {}, fld), terms, maps, []), X


def standard_resolution(I: Sequence[int], n: int, fld: FieldSpec = QQ) -> tuple[ModuleComplex, Verdict]:
    """The standard complex of I and its verdict.

    Checks: consecutive composites vanish, homology vanishes at every term
    but the right end, and the end homology H is nonzero. When n lies in I,
    H must be isomorphic to the injective right module D(A f_JJ) with J the
    inverse rotation of I (0 dropped); this is certified by an explicit
    isomorphism. Otherwise H is recorded by its dimension vector.
    """
    res, X = standard_complex(I, n, fld)
    I = tuple(I)
    cx = res.complex()
    B = cx.terms[0].alg
    problems = []
    if not cx.composites_zero():
        problems.append("consecutive maps do not compose to zero")
    for k in range(1, len(cx.terms)):
        h = cx.homology_dims(k)
        if any(h):
            problems.append(f"homology at {_fmt(X[k])} has dimension vector {list(h)}")
    H = cokernel(cx.maps[0]) if cx.maps else cx.terms[0]
    if not H.dim:
        problems.append("end homology vanishes")
    payload = {
        "I": list(I), "n": n, "d": len(I) - 1, "field": fld.name,
        "terms": [_fmt(x) for x in reversed(X)],
        "end_homology_dims": {_fmt(B.objects[y]): H.dims[y] for y in range(len(H.dims)) if H.dims[y]},
    }
    if n in I:
        J = tuple(i + 1 for i in I if i != n)
        payload["injective"] = _fmt(J)
        E = injective(B, J, fld)
        iso = find_isomorphism(H, E)
        payload["isomorphic_to_injective"] = iso is not None
        if iso is None:
            problems.append(f"end homology is not isomorphic to E{_fmt(J)}")
        elif not iso.is_homomorphism():
            problems.append("isomorphism certificate fails to commute with the action")
    payload["problems"] = problems
    return cx, Verdict(not problems, payload)


def admissible_sets(n: int, d: int) -> list[IndexSet]:
    """All (d+1)-subsets of 1..n, the inputs of standard_resolution."""
    return enum_subsets(n, d + 1)
