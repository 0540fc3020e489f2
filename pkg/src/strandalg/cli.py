"""Command-line interface: ``strandalg <command> ...``.

Every command prints a JSON report (or DOT/text where offered) with sorted
keys, so equal arguments give identical bytes. Exit codes: 0 pass, 1 failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import SCHEMA_VERSION
from .acceptance import FIELDS, run_suite
from .auslander import (
    algebra_json,
    build_A,
    build_A_multichoose,
    build_koszul_graded,
    generated_in_degrees_0_1,
    iso_sharp,
    quiver_dot,
    quiver_text,
)
from .bruhat_cx import canonical_signature, flip_vertex, hasse_dot, integral_homology, interval_complex, oneline
from .combinat import IndexSet, poset_leq
from .exactla import ZZ, FieldSpec, homology
from .homalg import cluster_tilting_check, domdim, gldim, koszul_ext_table, standard_resolution
from .strands import h0_algebra, h0_isomorphism_problems, to_json, verify_dga
from .symgrp import identity, interval, parse_oneline

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _subset(s: str) -> IndexSet:
    try:
        body = s.strip().strip("{}")
        out = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise UsageError(f"bad subset {s!r}; use a comma list such as 1,3,4") from None
    if list(out) != sorted(set(out)):
        raise UsageError(f"subset {s!r} must be strictly increasing")
    return out


def _field(s: str, allow_z: bool = False) -> FieldSpec:
    try:
        f = FieldSpec.parse(s)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not (f.is_field or allow_z):
        raise UsageError("this command needs a field: q or f<prime>")
    return f


def _nd(args) -> tuple[int, int]:
    if not 1 <= args.d <= args.n:
        raise UsageError(f"need 1 <= d <= n, got n={args.n}, d={args.d}")
    return args.n, args.d


def _report(command: str, params: dict, ok: bool, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": params,
        "status": "pass" if ok else "fail",
        "payload": payload,
    }


def _matrix_rows(m) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.to_dense()]


# -- commands --------------------------------------------------------------------


def cmd_auslander(args) -> tuple[object, bool]:
    n, d = _nd(args)
    A = build_A(n, d)
    problems: list[str] = []
    if args.multichoose:
        _, problems = build_A_multichoose(n, d)
    if args.format == "dot":
        return quiver_dot(A), not problems
    if args.format == "text":
        return quiver_text(A), not problems
    payload = algebra_json(A)
    if args.multichoose:
        payload["multichoose_problems"] = problems
    return _report("auslander", {"n": n, "d": d, "multichoose": args.multichoose}, not problems, payload), not problems


def cmd_strands(args) -> tuple[object, bool]:
    n, d = _nd(args)
    f = _field(args.field)
    pair = None
    if args.pair:
        I, J = (_subset(x) for x in args.pair)
        if len(I) != d or len(J) != d or max(I + J) > n or min(I + J) < 1:
            raise UsageError(f"--pair needs two {d}-subsets of 1..{n}")
        if not poset_leq(I, J):
            raise UsageError(f"{I} <= {J} fails, so hom({I},{J}) is zero")
        pair = (I, J)
    payload = to_json(n, d, f, pair)
    rep = verify_dga(n, d, f)
    payload["verify_dga"] = rep.as_dict()
    params = {"n": n, "d": d, "field": f.name, "pair": [list(p) for p in pair] if pair else None}
    return _report("strands", params, rep.ok, payload), rep.ok


def cmd_cohomology(args) -> tuple[object, bool]:
    n, d = _nd(args)
    f = _field(args.field)
    h0 = h0_algebra(n, d, f)
    per_degree: dict[int, int] = {}
    for hom in h0.cohomology.values():
        for k, v in hom.items():
            per_degree[k] = per_degree.get(k, 0) + v
    problems = h0_isomorphism_problems(n, d, f, h0)
    concentrated = all(not v for k, v in per_degree.items() if k != 0)
    ok = concentrated and not problems
    payload = {
        "per_degree": {str(k): v for k, v in sorted(per_degree.items())},
        "h0_dim": h0.algebra.dim,
        "degree0_cochains": h0.degree0_dim,
        "coboundary_rank": h0.coboundary_rank,
        "concentrated_in_degree_0": concentrated,
        "h0_isomorphism": {"map": "e_JI -> f_JI", "problems": problems},
    }
    return _report("cohomology", {"n": n, "d": d, "field": f.name}, ok, payload), ok


def cmd_bruhat(args) -> tuple[object, bool]:
    try:
        p = parse_oneline(args.perm)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(p) != args.d:
        raise UsageError(f"--perm has {len(p)} entries, --d is {args.d}")
    f = _field(args.field, allow_z=True)
    s = canonical_signature(p)
    iv = interval(p)
    rng = random.Random(args.seed)
    flipped = []
    for _ in range(args.flips):
        v = rng.choice(iv.elements)
        flipped.append(oneline(v))
        s = flip_vertex(s, v)
    if args.format == "dot":
        return hasse_dot(s), True
    cx = interval_complex(p, s, f)
    hom = homology(cx)
    zhom = integral_homology(interval_complex(p, s, ZZ))
    acyclic = not any(hom.values())
    torsion_free = all(not t for _, t in zhom.values())
    ok = (acyclic or p == identity(args.d)) and torsion_free
    payload = {
        "levels": [[oneline(q) for q in level] for level in iv.levels],
        "ranks": iv.level_sizes(),
        "flipped_vertices": flipped,
        "signature": [[oneline(lo), oneline(hi), s.signs[(lo, hi)]] for lo, hi in iv.covers],
        "differentials": {str(k): _matrix_rows(cx.d(k)) for k in sorted(cx.diffs)},
        "homology": {str(k): v for k, v in sorted(hom.items())},
        "integral_homology": {str(k): {"free": fr, "torsion": t} for k, (fr, t) in sorted(zhom.items())},
        "acyclic": acyclic,
    }
    params = {"d": args.d, "perm": oneline(p), "flips": args.flips, "seed": args.seed, "field": f.name}
    return _report("bruhat", params, ok, payload), ok


def cmd_koszul(args) -> tuple[object, bool]:
    n, d = _nd(args)
    f = _field(args.field)
    K = build_koszul_graded(n, d)
    _, sharp_problems = iso_sharp(n, d)
    gen_problems = generated_in_degrees_0_1(K)
    ext = koszul_ext_table(n, d, f)
    ok = not sharp_problems and not gen_problems and ext.ok
    payload = {
        "algebra": algebra_json(K),
        "iso_sharp": {"target": f"A({n},{n - d})", "problems": sharp_problems},
        "not_generated_in_degree_1": gen_problems,
        "ext_table": ext.payload,
    }
    return _report("koszul", {"n": n, "d": d, "field": f.name}, ok, payload), ok


def cmd_resolve(args) -> tuple[object, bool]:
    n, d = _nd(args)
    f = _field(args.field)
    I = _subset(args.object)
    if len(I) != d + 1 or min(I, default=0) < 1 or max(I, default=0) > n:
        raise UsageError(f"--object needs {d + 1} elements of 1..{n} (0 is implicit)")
    _, v = standard_resolution(I, n, f)
    return _report("resolve", {"n": n, "d": d, "object": list(I), "field": f.name}, v.ok, v.payload), v.ok


def cmd_homdim(args) -> tuple[object, bool]:
    n, d = _nd(args)
    f = _field(args.field)
    g = gldim(n, d, f)
    dd = domdim(n, d, f)
    ct = cluster_tilting_check(n, d, f)
    ok = g <= d <= dd and ct.ok and (n == d or ct.payload["top_degree_nonzero"])
    payload = {
        "gldim": g,
        "domdim": dd,
        "domdim_capped_at": d + 1,
        "cluster_tilting": ct.payload,
    }
    return _report("homdim", {"n": n, "d": d, "field": f.name}, ok, payload), ok


def cmd_check(args) -> tuple[object, bool]:
    if args.n_max < 1 or args.d_max < 1:
        raise UsageError("--n-max and --d-max must be positive")
    fields = [_field(args.field)] if args.field else FIELDS
    results = run_suite(args.n_max, args.d_max, fields)
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.ok for r in results)
    params = {"n_max": args.n_max, "d_max": args.d_max, "field": args.field or "q,f2,f3"}
    return _report("check", params, ok, {"criteria": [r.as_dict() for r in results]}), ok


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")

    nd = argparse.ArgumentParser(add_help=False)
    nd.add_argument("--n", type=int, required=True)
    nd.add_argument("--d", type=int, required=True)

    def fld(p, default="q"):
        p.add_argument("--field", default=default, help="q, z or f<prime> (default %(default)s)")

    parser = argparse.ArgumentParser(prog="strandalg", description="Strand algebras, Bruhat complexes and higher Auslander algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("auslander", parents=[common, nd], help="build A(n,d)")
    p.add_argument("--multichoose", action="store_true", help="also certify the multiset description")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(func=cmd_auslander)

    p = sub.add_parser("strands", parents=[common, nd], help="strand algebra basis, differential, DGA check")
    p.add_argument("--pair", nargs=2, metavar=("I", "J"), help="restrict to hom(I,J)")
    fld(p)
    p.set_defaults(func=cmd_strands)

    p = sub.add_parser("cohomology", parents=[common, nd], help="cohomology of the strand algebra")
    fld(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("bruhat", parents=[common], help="Bruhat interval complex C[e,pi]")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--perm", required=True, help="one-line form, e.g. 321")
    p.add_argument("--flips", type=int, default=0, help="flip this many random vertices first")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    fld(p)
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("koszul", parents=[common, nd], help="Koszul-graded algebra, complement duality, Ext table")
    fld(p)
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("resolve", parents=[common, nd], help="standard resolution of an object")
    p.add_argument("--object", required=True, help="comma list of d+1 elements of 1..n")
    fld(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("homdim", parents=[common, nd], help="global/dominant dimension and cluster tilting")
    fld(p)
    p.set_defaults(func=cmd_homdim)

    p = sub.add_parser("check", parents=[common], help="run the acceptance suite")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--field", default=None, help="restrict to one field (default: q, f2 and f3)")
    p.set_defaults(func=cmd_check)
    return parser


def _emit(out: object, path: str | None) -> None:
    text = out if isinstance(out, str) else json.dumps(out, indent=1, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE
    try:
        out, ok = args.func(args)
    except UsageError as e:
        print(f"strandalg {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(out, args.out)
    return EXIT_PASS if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())

