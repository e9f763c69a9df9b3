"""Exact univariate power series truncated at a fixed order.

Coefficients are :class:`fractions.Fraction`, so every operation is exact.
The truncation order travels with each series; combining series of different
orders is an error rather than a silent re-truncation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "TruncatedSeries",
    "bernoulli",
    "scale_variable",
    "series_int_pow",
    "series_inv",
    "series_mul",
    "x_over_tanh",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``sum coeffs[k] x^k`` known modulo ``x^order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("truncation order must be at least 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
        """Pad with zeros or drop high terms so the result has ``order`` coefficients."""
        cs = list(coeffs)[:order]
        cs.extend([0] * (order - len(cs)))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncatedSeries:
        return cls.from_coeffs([c], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.constant(1, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} and {other.order}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(tuple(a * other for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, series_inv(other))

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_int_pow(self, k)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, dropping every term of degree >= the common order."""
    a._check(b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(tuple(out))


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / c0
    out = [inv0]
    for k in range(1, a.order):
        s = sum((a.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-s * inv0)
    return TruncatedSeries(tuple(out))


def series_int_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a**k`` by repeated squaring; negative ``k`` goes through :func:`series_inv`."""
    if k < 0:
        a = series_inv(a)
        k = -k
    result = TruncatedSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def scale_variable(a: TruncatedSeries, c: Scalar) -> TruncatedSeries:
    """Substitute ``x -> c*x``."""
    c = Fraction(c)
    out = []
    p = Fraction(1)
    for coeff in a.coeffs:
        out.append(coeff * p)
        p *= c
    return TruncatedSeries(tuple(out))


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Bernoulli number ``B_k`` with ``x/(e^x - 1) = sum B_k x^k / k!`` (so ``B_1 = -1/2``)."""
    if k < 0:
        raise ValueError("bernoulli index must be non-negative")
    if k < len(_bernoulli_cache):
        return _bernoulli_cache[k]
    with _bernoulli_lock:
        cache = _bernoulli_cache
        for m in range(len(cache), k + 1):
            # sum_{j<=m} C(m+1, j) B_j = 0
            s = sum((comb(m + 1, j) * cache[j] for j in range(m)), Fraction(0))
            cache.append(-s / (m + 1))
    return _bernoulli_cache[k]


def x_over_tanh(order: int) -> TruncatedSeries:
    """The even series ``x/tanh(x) = sum 4^k B_{2k} x^{2k} / (2k)!``."""
    if order < 1:
        raise ValueError("truncation order must be at least 1")
    coeffs = [Fraction(0)] * order
    fact = 1
    for m in range(order):
        if m:
            fact *= m
        if m % 2 == 0:
            coeffs[m] = Fraction(2**m) * bernoulli(m) / fact
    return TruncatedSeries(tuple(coeffs))
