"""Pure-Python integer Gauss-Jordan elimination (fallback for ``_echelon``)."""

from __future__ import annotations

from math import gcd

__all__ = ["rref_int"]


def rref_int(rows: list[list[int]], ncols: int) -> list[int]:
    """Row-reduce an integer matrix in place and return its pivot columns.

    Fraction-free: each elimination step replaces ``row`` by
    ``(a/g)*row - (b/g)*pivot_row`` with ``g = gcd(a, b)`` and then divides the
    row by its content, so entries stay integral and small. On return the first
    ``len(pivots)`` rows are the pivot rows, every pivot is positive and is the
    only nonzero entry in its column. Pivots are chosen as the first nonzero
    entry by position, so the output is deterministic.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not rows[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        g = gcd(*prow)
        if prow[c] < 0:
            g = -g
        if g != 1:
            prow = rows[r] = [x // g for x in prow]
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if not b:
                continue
            g = gcd(a, b)
            ma, mb = a // g, b // g
            if ma == 1:
                row = [x - mb * y for x, y in zip(row, prow)]
            else:
                row = [ma * x - mb * y for x, y in zip(row, prow)]
            g = gcd(*row)
            if g > 1:
                row = [x // g for x in row]
            rows[i] = row
        pivots.append(c)
        r += 1
    return pivots
