"""Exact linear algebra over Q on top of an integer row-reduction kernel.

The kernel is the compiled ``_echelon`` extension when it is importable and
``MODULI_KAPPA_PURE_PYTHON`` is unset; otherwise the pure-Python twin. Both
return identical results.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from . import _echelon_py

Scalar = Union[int, Fraction]

if os.environ.get("MODULI_KAPPA_PURE_PYTHON"):
    _rref_int = _echelon_py.rref_int
    BACKEND = "python"
else:
    try:
        from ._echelon import rref_int as _rref_int

        BACKEND = "cython"
    except ImportError:  # extension not built
        _rref_int = _echelon_py.rref_int
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "ReducedBasis",
    "integer_rows",
    "nullspace",
    "rank",
    "rref",
    "span_contains",
]


def integer_rows(matrix: Sequence[Sequence[Scalar]]) -> list[list[int]]:
    """Clear denominators row by row; row scaling leaves the row space unchanged."""
    out = []
    for row in matrix:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([x.numerator * (den // x.denominator) for x in fr])
    return out


def _reduce(matrix: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[list[int]], list[int]]:
    rows = integer_rows(matrix)
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a matrix with {ncols} columns")
    pivots = _rref_int(rows, ncols)
    return rows, pivots


def rref(matrix: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q (nonzero rows only) and the pivot columns."""
    rows, pivots = _reduce(matrix, ncols)
    out = []
    for r, c in enumerate(pivots):
        a = rows[r][c]
        out.append([Fraction(x, a) for x in rows[r]])
    return out, pivots


def rank(matrix: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return len(_reduce(matrix, ncols)[1])


def nullspace(
    matrix: Sequence[Sequence[Scalar]], ncols: int
) -> tuple[list[list[Fraction]], list[int], int]:
    """Kernel of ``v -> matrix @ v``.

    Returns ``(basis, free_columns, rank)``. Basis vector ``k`` has a 1 in
    ``free_columns[k]`` and 0 in every other free column.
    """
    rows, pivots = _reduce(matrix, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            x = rows[r][f]
            if x:
                v[c] = Fraction(-x, rows[r][c])
        basis.append(v)
    return basis, free, len(pivots)


@dataclass(frozen=True)
class ReducedBasis:
    """Vectors reduced at ``positions``: vector ``k`` is 1 at ``positions[k]`` and 0 at the others.

    Membership of ``v`` in the span is read off from its entries at
    ``positions``, which are its coordinates.
    """

    vectors: tuple[tuple[Fraction, ...], ...]
    positions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def coordinates(self, v: Sequence[Scalar]) -> list[Fraction] | None:
        coords = [Fraction(v[p]) for p in self.positions]
        n = len(v)
        recon = [Fraction(0)] * n
        for c, vec in zip(coords, self.vectors):
            if c:
                for j, x in enumerate(vec):
                    if x:
                        recon[j] += c * x
        if any(Fraction(a) != b for a, b in zip(v, recon)):
            return None
        return coords

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.coordinates(v) is not None


def span_contains(vectors: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    """Whether ``v`` lies in the span of ``vectors`` (rank test)."""
    ncols = len(v)
    if not vectors:
        return not any(v)
    return rank(list(vectors) + [list(v)], ncols) == rank(vectors, ncols)
