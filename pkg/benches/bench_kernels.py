"""Time the compiled rref_modp kernel against its pure-Python twin.

    python3 benches/bench_kernels.py [--sizes 50 100 200] [--p 3] [--repeat 3]

Also times a full rank computation through SparseMatrix with each backend.
Matrices with a side of DENSE_LIMIT or more take the sparse elimination path,
so the two rank columns only differ below that size.
"""

import argparse
import random
import timeit

from strandalg.exactla import HAVE_EXT, FieldSpec, SparseMatrix, _kernels_py, rank, use_extension
from strandalg.exactla.matrix import DENSE_LIMIT


def random_matrix(n: int, p: int, density: float, rng: random.Random) -> list[list[int]]:
    return [[rng.randrange(1, p) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[30, 60, 100, 200])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"compiled kernel available: {HAVE_EXT}; dense path below {DENSE_LIMIT}")
    print(f"{'n':>6} {'python rref':>12} {'compiled':>10} {'speedup':>8} {'rank py':>9} {'rank ext':>9}")
    for n in args.sizes:
        a = random_matrix(n, args.p, args.density, rng)
        t_py = best(lambda: _kernels_py.rref_modp([r[:] for r in a], args.p), args.repeat)
        m = SparseMatrix.from_dense(a, FieldSpec("Fp", args.p))
        if HAVE_EXT:
            from strandalg.exactla import _kernels

            t_ext = best(lambda: _kernels.rref_modp([r[:] for r in a], args.p), args.repeat)
            use_extension(False)
            r_py = best(lambda: rank(m), args.repeat)
            use_extension(True)
            r_ext = best(lambda: rank(m), args.repeat)
            print(f"{n:>6} {t_py:>11.4f}s {t_ext:>9.4f}s {t_py / t_ext:>7.1f}x {r_py:>8.4f}s {r_ext:>8.4f}s")
        else:
            r_py = best(lambda: rank(m), args.repeat)
            print(f"{n:>6} {t_py:>11.4f}s {'-':>10} {'-':>8} {r_py:>8.4f}s {'-':>9}")


if __name__ == "__main__":
    main()
