"""Free graded-commutative algebras over Q on weighted generators.

A monomial is a tuple of exponents aligned with the generator order of its
:class:`GeneratorSet`; it denotes the ordered product ``g_0^a_0 g_1^a_1 ...``.
Odd generators square to zero and anticommute with each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Generator",
    "GeneratorSet",
    "GradedPolynomial",
    "Monomial",
    "format_monomial",
    "from_vector",
    "hilbert_dims",
    "monomial_basis",
    "monomial_product",
    "multiply",
    "to_vector",
]

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    odd: bool = False

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Generator, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        index: dict[str, int] = {}
        for i, g in enumerate(gens):
            if g.name in index:
                raise ValueError(f"duplicate generator name {g.name!r}")
            if g.degree < 1:
                raise ValueError(f"generator {g.name!r} must have positive degree")
            if g.degree % 2 and not g.odd:
                raise ValueError(f"odd-degree generator {g.name!r} must be declared odd")
            index[g.name] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *specs: Union[tuple[str, int], tuple[str, int, str]]) -> GeneratorSet:
        """``GeneratorSet.of(("t", 2), ("iota", 3, "odd"))``; parity defaults from degree."""
        gens = []
        for spec in specs:
            name, degree = spec[0], spec[1]
            parity = spec[2] if len(spec) > 2 else ("odd" if degree % 2 else "even")
            if parity not in ("odd", "even"):
                raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
            gens.append(Generator(name, degree, parity == "odd"))
        return cls(tuple(gens))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, i: int) -> Generator:
        return self.generators[i]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no generator named {name!r}") from None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def degree(self, m: Monomial) -> int:
        return sum(a * g.degree for a, g in zip(m, self.generators))

    def unit(self) -> Monomial:
        return (0,) * len(self.generators)

    def gen(self, name: str) -> GradedPolynomial:
        """The generator ``name`` as a polynomial."""
        m = [0] * len(self.generators)
        m[self.index(name)] = 1
        return GradedPolynomial(self, {tuple(m): Fraction(1)})

    def monomial_from_exponents(self, exps: Mapping[str, int]) -> Monomial:
        m = [0] * len(self.generators)
        for name, e in exps.items():
            m[self.index(name)] += e
        return tuple(m)


def format_monomial(gens: GeneratorSet, m: Monomial, sep: str = "*") -> str:
    parts = []
    for a, g in zip(m, gens.generators):
        if a == 1:
            parts.append(g.name)
        elif a > 1:
            parts.append(f"{g.name}^{a}")
    return sep.join(parts) if parts else "1"


@lru_cache(maxsize=None)
def _reachable(degrees: tuple[int, ...], odd: tuple[bool, ...], top: int) -> tuple[tuple[bool, ...], ...]:
    """``table[i][k]``: can generators ``i..`` form degree ``k``."""
    n = len(degrees)
    table = [[False] * (top + 1) for _ in range(n + 1)]
    table[n][0] = True
    for i in range(n - 1, -1, -1):
        d, row, nxt = degrees[i], table[i], table[i + 1]
        for k in range(top + 1):
            if nxt[k]:
                row[k] = True
            elif odd[i]:
                row[k] = k >= d and nxt[k - d]
            else:
                row[k] = k >= d and row[k - d]
    return tuple(tuple(r) for r in table)


@lru_cache(maxsize=4096)
def monomial_basis(gens: GeneratorSet, degree: int) -> tuple[Monomial, ...]:
    """All monomials of the given degree, in descending lexicographic order of exponents.

    Within a single degree this is graded-lex with the generator order as
    tiebreak: higher powers of earlier generators come first.
    """
    if degree < 0:
        return ()
    degrees = gens.degrees
    odd = tuple(g.odd for g in gens)
    reach = _reachable(degrees, odd, degree)
    n = len(degrees)
    out: list[Monomial] = []
    prefix = [0] * n

    def rec(i: int, remaining: int) -> None:
        if i == n:
            out.append(tuple(prefix))
            return
        d = degrees[i]
        top = 1 if odd[i] else remaining // d
        top = min(top, remaining // d)
        nxt = reach[i + 1]
        for e in range(top, -1, -1):
            r = remaining - e * d
            if nxt[r]:
                prefix[i] = e
                rec(i + 1, r)
        prefix[i] = 0

    if reach[0][degree]:
        rec(0, degree)
    return tuple(out)


def hilbert_dims(gens: GeneratorSet, max_degree: int) -> list[int]:
    """Dimensions of the graded pieces in degrees ``0..max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    dims = [1] + [0] * max_degree
    for g in gens:
        d = g.degree
        if d > max_degree:
            continue
        if g.odd:
            for k in range(max_degree, d - 1, -1):
                dims[k] += dims[k - d]
        else:
            for k in range(d, max_degree + 1):
                dims[k] += dims[k - d]
    return dims


def monomial_product(
    odd: Sequence[bool], m1: Monomial, m2: Monomial
) -> tuple[int, Monomial]:
    """Product of two monomials as ``(sign, monomial)``; sign 0 when an odd generator repeats."""
    sign = 1
    odd_seen_later = 0  # odd generators of m1 at indices > current, scanned right to left
    for i in range(len(m1) - 1, -1, -1):
        if odd[i]:
            if m1[i] and m2[i]:
                return 0, m1
            if m2[i] and odd_seen_later % 2:
                sign = -sign
            if m1[i]:
                odd_seen_later += 1
    return sign, tuple(a + b for a, b in zip(m1, m2))


class GradedPolynomial:
    """Element of the free graded-commutative algebra on ``gens`` with rational coefficients."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: Mapping[Monomial, Scalar] | None = None):
        self.gens = gens
        clean: dict[Monomial, Fraction] = {}
        if terms:
            n = len(gens)
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not match {n} generators")
                if c:
                    clean[tuple(m)] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, gens: GeneratorSet, c: Scalar) -> GradedPolynomial:
        return cls(gens, {gens.unit(): c})

    @classmethod
    def zero(cls, gens: GeneratorSet) -> GradedPolynomial:
        return cls(gens)

    @property
    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; ``None`` for zero or inhomogeneous elements."""
        degs = {self.gens.degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other: GradedPolynomial | Scalar) -> GradedPolynomial:
        if isinstance(other, GradedPolynomial):
            if other.gens != self.gens:
                raise ValueError("generator sets differ")
            return other
        return GradedPolynomial.constant(self.gens, other)

    def __add__(self, other: GradedPolynomial | Scalar) -> GradedPolynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(self.gens, out)

    __radd__ = __add__

    def __neg__(self) -> GradedPolynomial:
        return GradedPolynomial(self.gens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: GradedPolynomial | Scalar) -> GradedPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> GradedPolynomial:
        return (-self) + other

    def __mul__(self, other: GradedPolynomial | Scalar) -> GradedPolynomial:
        if not isinstance(other, GradedPolynomial):
            c = Fraction(other)
            return GradedPolynomial(self.gens, {m: v * c for m, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other: Scalar) -> GradedPolynomial:
        return self * other

    def __pow__(self, k: int) -> GradedPolynomial:
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = GradedPolynomial.constant(self.gens, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedPolynomial):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == GradedPolynomial.constant(self.gens, other).terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by descending degree, then descending lex."""
        return sorted(
            self.terms.items(), key=lambda mc: (self.gens.degree(mc[0]), mc[0]), reverse=True
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = format_monomial(self.gens, m)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"


def multiply(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    """Graded-commutative product with Koszul signs on odd generators."""
    if a.gens != b.gens:
        raise ValueError("generator sets differ")
    odd = tuple(g.odd for g in a.gens)
    any_odd = any(odd)
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if any_odd:
                sign, m = monomial_product(odd, m1, m2)
                if not sign:
                    continue
            else:
                sign, m = 1, tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + sign * c1 * c2
    return GradedPolynomial(a.gens, out)


def to_vector(p: GradedPolynomial, basis: Sequence[Monomial]) -> list[Fraction]:
    """Coordinates of ``p`` in a monomial basis; raises if ``p`` has other terms."""
    pos = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in p.terms.items():
        if m not in pos:
            raise ValueError(f"term {format_monomial(p.gens, m)} is outside the basis")
        vec[pos[m]] = c
    return vec


def from_vector(
    gens: GeneratorSet, basis: Sequence[Monomial], vec: Iterable[Scalar]
) -> GradedPolynomial:
    return GradedPolynomial(gens, {m: c for m, c in zip(basis, vec) if c})
