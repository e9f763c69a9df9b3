"""Characteristic classes and numbers of complete intersections in CP^m.

All Chern roots of the tangent bundle are integer multiples of the pulled-back
hyperplane class ``t``, so every characteristic class is a rational multiple of
a power of ``t``. Series below are in a variable ``x`` standing for ``t``; the
coefficient of ``x^k`` is the scalar in front of ``t^k`` and ``t^n`` integrates
to the total degree ``N = prod(d_i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping, Union

from .exact_series import (
    TruncatedSeries,
    scale_variable,
    series_int_pow,
    series_inv,
    x_over_tanh,
)

__all__ = [
    "CompleteIntersection",
    "TangentialClassData",
    "char_number",
    "euler_characteristic",
    "middle_betti",
    "parse_char_monomial",
    "signature",
    "tangential_data",
    "total_chern_series",
    "total_pontryagin_series",
    "w2_parity",
]


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of multidegree ``degrees`` in ``CP^ambient_dim``."""

    ambient_dim: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.degrees:
            raise ValueError("at least one defining degree is required")
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be positive, got {self.degrees}")
        if self.complex_dim < 1:
            raise ValueError(
                f"complex dimension {self.complex_dim} < 1 "
                f"(ambient CP^{self.ambient_dim}, {len(self.degrees)} equations)"
            )

    @property
    def complex_dim(self) -> int:
        return self.ambient_dim - len(self.degrees)

    @property
    def total_degree(self) -> int:
        return prod(self.degrees)


@dataclass(frozen=True)
class TangentialClassData:
    euler_char: int
    signature: int
    p1_coeff: Fraction
    e_coeff: Fraction
    w2_parity: int
    middle_betti: int
    pontryagin_coeffs: tuple[Fraction, ...]


def total_chern_series(ci: CompleteIntersection) -> TruncatedSeries:
    """``(1+x)^(m+1) / prod(1 + d_i x)`` modulo ``x^(n+1)``."""
    order = ci.complex_dim + 1
    one_plus_x = TruncatedSeries.from_coeffs([1, 1], order)
    num = series_int_pow(one_plus_x, ci.ambient_dim + 1)
    for d in ci.degrees:
        num = num * series_inv(TruncatedSeries.from_coeffs([1, d], order))
    return num


def total_pontryagin_series(ci: CompleteIntersection) -> TruncatedSeries:
    """Total Pontryagin class; the coefficient of ``x^(2i)`` is the multiple of ``t^(2i)`` in ``p_i``.

    Built as ``c(x) * c(-x)`` followed by ``x^2 -> -x^2``, which is exact
    because every Chern root is a multiple of ``t``.
    """
    c = total_chern_series(ci)
    cc = c * scale_variable(c, -1)
    # cc = prod(1 - a^2 x^2); flip the sign of x^(4k+2) terms.
    return TruncatedSeries(
        tuple(-a if k % 4 == 2 else a for k, a in enumerate(cc.coeffs))
    )


def euler_characteristic(ci: CompleteIntersection) -> int:
    top = total_chern_series(ci)[ci.complex_dim] * ci.total_degree
    assert top.denominator == 1
    return int(top)


def signature(ci: CompleteIntersection) -> int:
    """Signature via the L-class; zero in odd complex dimension."""
    n = ci.complex_dim
    if n % 2:
        return 0
    order = n + 1
    f = x_over_tanh(order)
    total = series_int_pow(f, ci.ambient_dim + 1)
    for d in ci.degrees:
        total = total * series_inv(scale_variable(f, d))
    value = total[n] * ci.total_degree
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral signature {value} for {ci}")
    return int(value)


def middle_betti(ci: CompleteIntersection) -> int:
    """``b_n`` from Euler characteristic, with Lefschetz giving ``b_i(CP^n)`` off the middle."""
    n = ci.complex_dim
    # even degrees 0..2n other than the middle each carry one class
    off_middle = n + 1 - (1 if n % 2 == 0 else 0)
    b = (-1) ** n * (euler_characteristic(ci) - off_middle)
    if b < 0:
        raise ArithmeticError(f"negative middle Betti number {b} for {ci}")
    return b


def w2_parity(ci: CompleteIntersection) -> int:
    """1 iff ``w_2 = (m + 1 - sum d_i) t mod 2`` is nonzero."""
    return (ci.ambient_dim + 1 - sum(ci.degrees)) % 2


_FACTOR = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_char_monomial(text: str) -> dict[str, int]:
    """Parse ``"t^2 p1"``-style monomials (``*`` also accepted as separator)."""
    exps: dict[str, int] = {}
    for tok in text.replace("*", " ").split():
        m = _FACTOR.match(tok)
        if not m:
            raise ValueError(f"cannot parse monomial factor {tok!r} in {text!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        exps[name] = exps.get(name, 0) + e
    return {k: v for k, v in exps.items() if v}


def char_number(
    ci: CompleteIntersection, monomial: Union[str, Mapping[str, int]]
) -> Fraction:
    """Integral over the complete intersection of a monomial in ``t``, ``p_i``, ``e``.

    Degrees (real grading) are ``|t| = 2``, ``|p_i| = 4i``, ``|e| = 2n``; the
    monomial must have total degree ``2n``.
    """
    exps = parse_char_monomial(monomial) if isinstance(monomial, str) else dict(monomial)
    n = ci.complex_dim
    pont = total_pontryagin_series(ci)
    chern = total_chern_series(ci)
    value = Fraction(ci.total_degree)
    degree = 0
    for name, k in exps.items():
        if k < 0:
            raise ValueError(f"negative exponent for {name}")
        if name == "t":
            degree += 2 * k
        elif name == "e":
            degree += 2 * n * k
            value *= chern[n] ** k
        elif name.startswith("p") and name[1:].isdigit() and int(name[1:]) >= 1:
            i = int(name[1:])
            if 2 * i > n:
                raise ValueError(f"{name} is beyond the range p_1..p_{n // 2}")
            degree += 4 * i * k
            value *= pont[2 * i] ** k
        else:
            raise ValueError(f"unknown characteristic class {name!r}")
    if degree != 2 * n:
        raise ValueError(f"monomial has degree {degree}, expected {2 * n}")
    return value


def tangential_data(ci: CompleteIntersection) -> TangentialClassData:
    n = ci.complex_dim
    pont = total_pontryagin_series(ci)
    return TangentialClassData(
        euler_char=euler_characteristic(ci),
        signature=signature(ci),
        p1_coeff=pont[2] if n >= 2 else Fraction(0),
        e_coeff=total_chern_series(ci)[n],
        w2_parity=w2_parity(ci),
        middle_betti=middle_betti(ci),
        pontryagin_coeffs=tuple(pont[2 * i] for i in range(1, n // 2 + 1)),
    )
