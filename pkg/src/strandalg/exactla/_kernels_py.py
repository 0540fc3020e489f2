"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations


def rref_modp(a: list[list[int]], p: int) -> list[int]:
    """Reduce ``a`` (entries in [0, p)) to reduced row echelon form in place.

    Pivots are taken column by column, first nonzero row wins. Returns the
    pivot columns.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), -1)
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        row = a[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            for j in range(c, n):
                row[j] = row[j] * inv % p
        for i in range(m):
            f = a[i][c]
            if i != r and f:
                other = a[i]
                for j in range(c, n):
                    if row[j]:
                        other[j] = (other[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return pivots
