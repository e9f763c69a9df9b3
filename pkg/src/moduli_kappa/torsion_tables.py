"""Finitely generated abelian groups and tabulated abelianizations.

The ``ko_7(BG)`` summands below are imported data, not computed here. Their
sources are recorded in ``citation`` on every result.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce

from sympy import factorint, isprime

__all__ = [
    "EXAMPLES",
    "FinAbGroup",
    "GammaResult",
    "direct_sum",
    "gamma_ab",
    "mt_theta_pi1",
]


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum of cyclic groups as presented: ``0`` is Z, ``k >= 2`` is Z/k.

    Factors equal to 1 are dropped and the rest sorted with Z last, so
    equality compares presentations. Use ``isomorphic`` to compare up to
    isomorphism.
    """

    cyclic_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for k in self.cyclic_factors:
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise ValueError(f"cyclic factor must be a non-negative integer, got {k!r}")
        canon = tuple(sorted((k for k in self.cyclic_factors if k != 1), key=lambda k: (k == 0, k)))
        object.__setattr__(self, "cyclic_factors", canon)

    @classmethod
    def of(cls, *factors: int) -> FinAbGroup:
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return self.cyclic_factors.count(0)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        """Product of the factors, or ``None`` if the group is infinite."""
        if not self.is_finite:
            return None
        return reduce(lambda a, b: a * b, self.cyclic_factors, 1)

    def primary_decomposition(self) -> tuple[int, ...]:
        """Prime-power factors (sorted) followed by one 0 per copy of Z."""
        out = []
        for k in self.cyclic_factors:
            if k:
                out.extend(p**e for p, e in factorint(k).items())
        return tuple(sorted(out)) + (0,) * self.rank

    def isomorphic(self, other: FinAbGroup) -> bool:
        return self.primary_decomposition() == other.primary_decomposition()

    def __str__(self) -> str:
        if not self.cyclic_factors:
            return "0"
        parts = []
        for k, n in Counter(self.cyclic_factors).items():
            base = "Z" if k == 0 else f"Z/{k}"
            parts.append(base if n == 1 else f"({base})^{n}")
        return " + ".join(parts)


def direct_sum(*groups: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(tuple(k for g in groups for k in g.cyclic_factors))


_MT_THETA_PI1 = {
    1: (),
    2: (2, 2),
    3: (),
    4: (2, 2, 2, 2),
    5: (4,),
    6: (2, 2, 3),
    7: (2,),
}


def mt_theta_pi1(n: int) -> FinAbGroup:
    """``pi_1(MT theta_n)`` for the ``n``-connected cover of ``BO(2n)``, ``1 <= n <= 7``."""
    if n not in _MT_THETA_PI1:
        raise ValueError(f"n must be in 1..7, got {n}")
    return FinAbGroup(_MT_THETA_PI1[n])


@dataclass(frozen=True)
class GammaResult:
    example: str
    g_ab: FinAbGroup
    ko7: FinAbGroup
    citation: str

    @property
    def group(self) -> FinAbGroup:
        return direct_sum(self.g_ab, self.ko7)


_GB_KO = (
    "Bruner-Greenlees, Connective real K-theory of finite groups, "
    "Example 7.3.1"
)
_ODD = "Atiyah-Hirzebruch spectral sequence with ko[1/2] a summand of ku[1/2] (Bruner-Greenlees, Remark 3.4.6)"

EXAMPLES = ("lens", "quaternion-Q8", "poincare-sphere")


def _lens(p: int) -> GammaResult:
    if p == 2:
        ko7, cite = FinAbGroup.of(4), _GB_KO
    elif p == 3:
        ko7, cite = FinAbGroup.of(9), _ODD
    else:
        ko7, cite = FinAbGroup.of(p, p), _ODD
    return GammaResult(f"lens({p})", FinAbGroup.of(p), ko7, "imported data: " + cite)


def gamma_ab(example: str, p: int | None = None, genus: int | None = None, hirsch: int = 0) -> GammaResult:
    """``Gamma_d(W)^ab = G^ab + ko_7(BG)`` for ``W = (M^3 x D^3) # g(S^3 x S^3)``.

    ``example`` is ``lens`` (with prime ``p``), ``quaternion-Q8`` or
    ``poincare-sphere``. The splitting needs genus ``>= 7 + hirsch``; pass
    ``genus`` to have that checked.
    """
    if genus is not None and genus < 7 + hirsch:
        raise ValueError(f"genus {genus} is below the required 7 + h = {7 + hirsch}")
    if example in ("lens", "lens-space"):
        if p is None:
            raise ValueError("lens example needs a prime p")
        if not isprime(p):
            raise ValueError(f"p must be prime, got {p}")
        return _lens(p)
    if p is not None:
        raise ValueError(f"example {example!r} takes no p")
    if example in ("quaternion-Q8", "q8"):
        return GammaResult(
            "quaternion-Q8",
            FinAbGroup.of(2, 2),
            FinAbGroup.of(4, 4, 64),
            "imported data: Bruner-Greenlees, Connective real K-theory of finite groups, p. 138",
        )
    if example in ("poincare-sphere", "poincare"):
        return GammaResult(
            "poincare-sphere",
            FinAbGroup(),
            FinAbGroup.of(5, 5, 9, 64),
            "imported data: localized at 2, 3, 5 from the Q8 and lens-space entries "
            "(Bruner-Greenlees, p. 138 and Example 7.3.1)",
        )
    raise ValueError(f"unknown example {example!r}; known: {', '.join(EXAMPLES)}")

