"""Genus estimates and the stable ranges they control."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .ci_invariants import CompleteIntersection, euler_characteristic, signature

__all__ = [
    "ManifoldInvariants",
    "algebraic_genus",
    "dim6_exact_genus",
    "floor_range",
    "genus_interval",
    "invariants_of_complete_intersection",
    "polycyclic_stable_range",
    "stable_range",
]


@dataclass(frozen=True)
class ManifoldInvariants:
    """Numerical data of a closed ``2n``-manifold ``W`` with ``n``-connected structure map.

    ``betti_below`` lists ``b_0 .. b_{n-1}``; ``e_generators`` is the minimal
    number of generators of ``H_n(B; Z)``. ``n_connected`` is a user assertion
    that the structure map is ``n``-connected; nothing here can check it.
    """

    half_dim: int
    euler_char: int
    betti_below: tuple[int, ...]
    signature: int = 0
    e_generators: int = 0
    hirsch_length: int = 0
    spherical: bool = False
    n_connected: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "betti_below", tuple(self.betti_below))
        n = self.half_dim
        if n < 1:
            raise ValueError("half_dim must be at least 1")
        if len(self.betti_below) != n:
            raise ValueError(f"expected {n} Betti numbers b_0..b_{n - 1}")
        if self.betti_below[0] < 1 or any(b < 0 for b in self.betti_below):
            raise ValueError("b_0 must be >= 1 and all Betti numbers >= 0")
        if n % 2 and self.signature != 0:
            raise ValueError("signature must vanish when n is odd")
        if self.e_generators < 0 or self.hirsch_length < 0:
            raise ValueError("e_generators and hirsch_length must be >= 0")


def algebraic_genus(inv: ManifoldInvariants) -> int:
    n = inv.half_dim
    alt = sum((-1) ** i * b for i, b in enumerate(inv.betti_below))
    g = (-1) ** n * (Fraction(inv.euler_char, 2) - alt) - Fraction(abs(inv.signature), 2)
    if g.denominator != 1:
        raise ValueError(f"inconsistent invariants: algebraic genus {g} is not an integer")
    return int(g)


def genus_interval(inv: ManifoldInvariants) -> tuple[int, int]:
    """``(g^a - c, g^a)`` bracketing the genus.

    ``c = e`` when ``n`` is even or ``n`` is 3 or 7, otherwise ``c = 1 + e``.
    """
    n = inv.half_dim
    if n <= 2:
        raise ValueError("genus estimate needs dimension 2n > 4")
    ga = algebraic_genus(inv)
    c = inv.e_generators if (n % 2 == 0 or n in (3, 7)) else 1 + inv.e_generators
    return ga - c, ga


def dim6_exact_genus(b3: int) -> int:
    """Genus of a simply-connected 6-manifold: half its third Betti number."""
    if b3 < 0 or b3 % 2:
        raise ValueError(f"third Betti number must be even and >= 0, got {b3}")
    return b3 // 2


def stable_range(g: int, spherical: bool, hirsch: int = 0) -> Fraction:
    """Upper bound on cohomological degrees where the kappa-class map is an isomorphism.

    Simply-connected fibres (``hirsch == 0``) use ``(g-3)/2`` (spherical) or
    ``(g-4)/3``; virtually polycyclic fundamental group of Hirsch length
    ``h > 0`` uses ``(g-h-5)/2`` or ``(g-h-6)/3``.
    """
    if g < 0 or hirsch < 0:
        raise ValueError("genus and Hirsch length must be non-negative")
    if hirsch == 0:
        return Fraction(g - 3, 2) if spherical else Fraction(g - 4, 3)
    return polycyclic_stable_range(g, spherical, hirsch)


def polycyclic_stable_range(g: int, spherical: bool, hirsch: int) -> Fraction:
    """The offset range for virtually polycyclic ``pi_1``, valid for any ``hirsch >= 0``."""
    if spherical:
        return Fraction(g - hirsch - 5, 2)
    return Fraction(g - hirsch - 6, 3)


def floor_range(bound: Fraction) -> int:
    return floor(bound)


def invariants_of_complete_intersection(
    ci: CompleteIntersection, e_generators: int = 0, spherical: bool = False
) -> ManifoldInvariants:
    """Lefschetz: below the middle, Betti numbers agree with those of ``CP^n``."""
    n = ci.complex_dim
    return ManifoldInvariants(
        half_dim=n,
        euler_char=euler_characteristic(ci),
        betti_below=tuple(1 - i % 2 for i in range(n)),
        signature=signature(ci),
        e_generators=e_generators,
        spherical=spherical,
    )
