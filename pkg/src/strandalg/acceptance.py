"""The acceptance suite, shared by ``strandalg check`` and the test-suite.

Each criterion returns a Result. The default scales are the full ones;
``check`` shrinks the (n, d) ranges with ``n_max`` and ``d_max``.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Callable, Sequence

from .auslander import (
    build_A,
    build_A_multichoose,
    hom_pattern_json,
    iso_sharp,
    sharp_gap_condition,
    sharp_gap_condition_reversed,
)
from .bruhat_cx import canonical_signature, flip_vertex, interval_complex, interval_homology, integral_homology
from .combinat import enum_subsets, unit_diff
from .exactla import F2, F3, QQ, ZZ, FieldSpec
from .homalg import admissible_sets, cluster_tilting_check, domdim, gldim, koszul_ext_table, standard_resolution
from .strands import h0_algebra, h0_isomorphism_problems, verify_dga
from .symgrp import all_perms, identity, interval

FIELDS = (QQ, F2, F3)
GOLDEN_DIR = Path(__file__).with_name("golden")


@dataclass
class Result:
    number: int
    title: str
    ok: bool = True
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str) -> None:
        self.ok = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.1f}s)"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok, "failures": self.failures}


def _dga_cells(n_max: int, d_max: int) -> list[tuple[int, int]]:
    cells = [(n, d) for d in range(1, min(4, d_max) + 1) for n in range(d, min(7, n_max) + 1)]
    if n_max >= 8 and d_max >= 4:
        cells.append((8, 4))
    return cells


def dga_axioms(n_max: int = 8, d_max: int = 4, fields: Sequence[FieldSpec] = FIELDS) -> Result:
    r = Result(1, "DGA axioms")
    for f in fields:
        for n, d in _dga_cells(n_max, d_max):
            rep = verify_dga(n, d, f)
            if not rep.ok:
                r.fail(f"({n},{d}) over {f.name}: {rep.violation}")
    return r


def cohomology_concentration(n_max: int = 8, d_max: int = 4, fields: Sequence[FieldSpec] = FIELDS) -> Result:
    r = Result(2, "cohomology concentration and H0 = A(n,d)")
    for f in fields:
        for n, d in _dga_cells(n_max, d_max):
            h0 = h0_algebra(n, d, f)
            for (I, J), hom in h0.cohomology.items():
                stray = {k: v for k, v in hom.items() if v and k != 0}
                if stray:
                    r.fail(f"({n},{d}) over {f.name}: H of hom({I},{J}) = {stray}")
            if h0.algebra.dim != comb(n + d, 2 * d):
                r.fail(f"({n},{d}) over {f.name}: dim H0 = {h0.algebra.dim}, expected {comb(n + d, 2 * d)}")
            for p in h0_isomorphism_problems(n, d, f, h0)[:3]:
                r.fail(f"({n},{d}) over {f.name}: {p}")
    return r


def _random_flips(top, rng: random.Random, fld: FieldSpec, reference: dict[int, int]) -> bool:
    s = canonical_signature(top)
    elems = interval(top).elements
    for _ in range(rng.randint(1, 8)):
        s = flip_vertex(s, rng.choice(elems))
    return interval_homology(top, fld, s) == reference


def bruhat_acyclicity(d_max: int = 4, fields: Sequence[FieldSpec] = FIELDS, flips: int = 100, seed: int = 1) -> Result:
    r = Result(3, "Bruhat interval acyclicity")
    rng = random.Random(seed)
    for d in range(1, d_max + 1):
        for p in all_perms(d):
            if p == identity(d):
                continue
            for f in fields:
                h = interval_homology(p, f)
                if any(h.values()):
                    r.fail(f"C[e,{p}] over {f.name} has homology {h}")
            for k, (free, tors) in integral_homology(interval_complex(p, canonical_signature(p), ZZ)).items():
                if free or tors:
                    r.fail(f"C[e,{p}] over Z: H_{k} = Z^{free} + {tors}")
            for _ in range(flips):
                for f in fields:
                    if not _random_flips(p, rng, f, {k: 0 for k in interval_homology(p, f)}):
                        r.fail(f"flipping changes the homology of C[e,{p}] over {f.name}")
    if d_max >= 3:
        ranks = interval((3, 2, 1)).level_sizes()
        if ranks != [1, 2, 2, 1]:
            r.fail(f"S3 interval ranks {ranks}")
    return r


def definition_equivalence(n_max: int = 6, d_max: int = 3) -> Result:
    r = Result(4, "build_A = build_A_multichoose")
    for n in range(1, n_max + 1):
        for d in range(1, min(n, d_max) + 1):
            Q, problems = build_A_multichoose(n, d)
            for p in problems[:3]:
                r.fail(f"({n},{d}): {p}")
            if Q.dim != build_A(n, d).dim:
                r.fail(f"({n},{d}): dimension {Q.dim}")
    return r


def complement_duality(n_max: int = 8) -> Result:
    r = Result(5, "complement duality and the gap condition")
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            _, problems = iso_sharp(n, d)
            for p in problems[:3]:
                r.fail(f"({n},{d}): {p}")
            S = enum_subsets(n, d)
            for I in S:
                for J in S:
                    if sharp_gap_condition(I, J, n) != unit_diff(I, J):
                        r.fail(f"gap condition disagrees with unit-diff at n={n}, I={I}, J={J}")
    if n_max >= 4 and sharp_gap_condition_reversed((1, 4), (3, 4), 4) == unit_diff((1, 4), (3, 4)):
        r.fail("the reversed gap condition unexpectedly agrees at n=4, I={1,4}, J={3,4}")
    return r


def homological_dimensions(n_max: int = 6, d_max: int = 3, fields: Sequence[FieldSpec] = FIELDS) -> Result:
    r = Result(6, "global and dominant dimension")
    for f in fields:
        for n in range(1, n_max + 1):
            for d in range(1, min(n, d_max) + 1):
                g = gldim(n, d, f)
                want = d if n > d else 0
                if g != want:
                    r.fail(f"gldim A({n},{d}) = {g} over {f.name}, expected {want}")
                dd = domdim(n, d, f)
                if dd < d:
                    r.fail(f"domdim A({n},{d}) = {dd} over {f.name}, expected >= {d}")
    return r


def koszul_ext(n_max: int = 5, d_max: int = 2, fields: Sequence[FieldSpec] = FIELDS) -> Result:
    r = Result(7, "Koszul Ext table")
    for f in fields:
        for n in range(1, n_max + 1):
            for d in range(1, min(n, d_max) + 1):
                v = koszul_ext_table(n, d, f)
                for m in v.payload["mismatches"][:3]:
                    r.fail(f"({n},{d}) over {f.name}: {m}")
    return r


CT_CELLS = ((3, 2), (4, 2), (5, 2), (4, 3))


def resolutions_and_ct(
    n_max: int = 5, d_max: int = 2, fields: Sequence[FieldSpec] = FIELDS, ct_cells: Sequence[tuple[int, int]] = CT_CELLS
) -> Result:
    r = Result(8, "standard resolutions and cluster tilting")
    for f in fields:
        for n in range(1, n_max + 1):
            for d in range(1, min(n, d_max) + 1):
                for I in admissible_sets(n, d):
                    _, v = standard_resolution(I, n, f)
                    if not v.ok:
                        r.fail(f"standard resolution of {I}, n={n}, over {f.name}: {v.payload['problems']}")
        for n, d in ct_cells:
            v = cluster_tilting_check(n, d, f)
            if not v.ok:
                r.fail(f"Ext below degree {d} at ({n},{d}) over {f.name}: {v.payload['counterexamples'][:3]}")
            if n > d and not v.payload["top_degree_nonzero"]:
                r.fail(f"Ext^{d}(DA, A) = 0 at ({n},{d}) over {f.name}")
    return r


def golden_name(n: int, d: int) -> str:
    return f"hom_pattern_n{n}_d{d}.json"


def golden_files(directory: Path = GOLDEN_DIR) -> Result:
    r = Result(9, "golden hom-pattern tables")
    for d in range(1, 5):
        path = directory / golden_name(5, d)
        if not path.exists():
            r.fail(f"missing {path.name}")
        elif path.read_bytes() != hom_pattern_json(5, d).encode():
            r.fail(f"{path.name} does not regenerate byte-identically")
    return r


def end_to_end(budget: float = 300.0) -> Result:
    r = Result(10, "check --n-max 5 --d-max 3 exits 0")
    cmd = [sys.executable, "-m", "strandalg", "check", "--n-max", "5", "--d-max", "3"]
    t = time.perf_counter()
    proc = subprocess.run(cmd, capture_output=True, text=True)
    spent = time.perf_counter() - t
    if proc.returncode != 0:
        r.fail(f"exit code {proc.returncode}: {proc.stdout[-500:]}{proc.stderr[-500:]}")
    if spent > budget:
        r.fail(f"took {spent:.0f}s, budget {budget:.0f}s")
    return r


def timed(fn: Callable[[], Result]) -> Result:
    t = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t
    return res


def run_suite(n_max: int, d_max: int, fields: Sequence[FieldSpec] = FIELDS) -> list[Result]:
    """Criteria 1-9 restricted to n <= n_max and d <= d_max."""
    fields = tuple(fields)
    jobs: list[Callable[[], Result]] = [
        lambda: dga_axioms(n_max, d_max, fields),
        lambda: cohomology_concentration(n_max, d_max, fields),
        lambda: bruhat_acyclicity(min(4, n_max), fields),
        lambda: definition_equivalence(min(6, n_max), min(3, d_max)),
        lambda: complement_duality(min(8, n_max)),
        lambda: homological_dimensions(min(6, n_max), min(3, d_max), fields),
        lambda: koszul_ext(min(5, n_max), min(2, d_max), fields),
        lambda: resolutions_and_ct(
            min(5, n_max), min(2, d_max), fields, [(n, d) for n, d in CT_CELLS if n <= n_max and d <= d_max]
        ),
        golden_files,
    ]
    return [timed(job) for job in jobs]
