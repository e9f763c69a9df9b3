"""The derivation ``d3`` on a kappa-class algebra and its kernel.

The two-column page ``Lambda[iota_3] (x) A`` is never built. Its only
differential is recorded as a degree ``-2`` derivation ``d3: A -> A`` with

    d3(k[t^a c]) = a * k[t^(a-1) c],

where a class ``k[t^(a-1) c]`` of degree 0 is replaced by the scalar
``boundary[t^(a-1) c]``, a characteristic number of the fibre. Cohomology of
the total space in the stable range is ``ker d3``; with the involution
``t -> -t`` it is the invariant part of that kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .ci_invariants import CompleteIntersection, char_number, parse_char_monomial
from .graded_algebra import (
    GeneratorSet,
    GradedPolynomial,
    Monomial,
    format_monomial,
    from_vector,
    monomial_basis,
    monomial_product,
    to_vector,
)
from .kappa_rings import (
    StructurePreset,
    kappa_generator_set,
    parse_kappa_name,
    vd_spinc_preset,
)
from .linalg import ReducedBasis, nullspace, rank

__all__ = [
    "DerivationSpec",
    "KernelReport",
    "MissingBoundaryError",
    "apply_d3",
    "apply_involution",
    "d3_matrix",
    "kernel_report",
    "mg_spec",
    "relation_check_details",
    "sum_of_squares_relation_check",
    "surjectivity_check",
    "vd_spec",
]

Scalar = Union[int, Fraction]


class MissingBoundaryError(ValueError):
    """A degree-0 kappa class was reached for which no boundary value is known."""


# generator image under d3: (coefficient, monomial) or a missing-boundary marker
_Image = Union[tuple[Fraction, Monomial], Monomial, None]


@dataclass(frozen=True)
class DerivationSpec:
    """Kappa algebra with the data needed to evaluate ``d3``.

    ``boundary`` maps base monomials of degree ``fiber_dim`` (exponent tuples
    over ``base``) to rationals.
    """

    algebra: GeneratorSet
    base: GeneratorSet
    t_symbol: str
    boundary: Mapping[Monomial, Fraction]
    fiber_dim: int
    _base_monos: tuple[Monomial, ...] = field(init=False, repr=False, compare=False)
    _t_exps: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _images: tuple[_Image, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        base, n2 = self.base, self.fiber_dim
        t = base.index(self.t_symbol)
        if base[t].degree != 2:
            raise ValueError(f"{self.t_symbol!r} must have degree 2")
        bnd = {}
        for c, v in self.boundary.items():
            c = tuple(c)
            if base.degree(c) != n2:
                raise ValueError(
                    f"boundary monomial {format_monomial(base, c, ' ')} has degree "
                    f"{base.degree(c)}, expected {n2}"
                )
            bnd[c] = Fraction(v)
        object.__setattr__(self, "boundary", bnd)
        monos = []
        lookup = {}
        for i, g in enumerate(self.algebra):
            c = parse_kappa_name(g.name, base)
            if base.degree(c) - n2 != g.degree:
                raise ValueError(f"{g.name} has degree {g.degree}, expected {base.degree(c) - n2}")
            if base.degree(c) <= n2:
                raise ValueError(f"{g.name}: base monomial degree must exceed {n2}")
            monos.append(c)
            lookup[c] = i
        images: list[_Image] = []
        unit = self.algebra.unit()
        for c in monos:
            a = c[t]
            if a == 0:
                images.append(None)
                continue
            lower = c[:t] + (a - 1,) + c[t + 1 :]
            deg = base.degree(lower) - n2
            if deg < 0:
                images.append(None)
            elif deg == 0:
                if lower in bnd:
                    v = a * bnd[lower]
                    images.append((v, unit) if v else None)
                else:
                    images.append(lower)  # resolved (and reported) on use
            else:
                m = [0] * len(monos)
                m[lookup[lower]] = 1
                images.append((Fraction(a), tuple(m)))
        object.__setattr__(self, "_base_monos", tuple(monos))
        object.__setattr__(self, "_t_exps", tuple(c[t] for c in monos))
        object.__setattr__(self, "_images", tuple(images))

    @classmethod
    def from_preset(
        cls,
        preset: StructurePreset,
        boundary: Mapping[Union[str, Monomial], Scalar],
        max_degree: int,
        t_symbol: str = "t",
    ) -> DerivationSpec:
        base = preset.base_generators
        parsed = {}
        for key, v in boundary.items():
            c = base.monomial_from_exponents(parse_char_monomial(key)) if isinstance(key, str) else tuple(key)
            parsed[c] = Fraction(v)
        return cls(
            algebra=kappa_generator_set(preset, max_degree),
            base=base,
            t_symbol=t_symbol,
            boundary=parsed,
            fiber_dim=preset.fiber_dim,
        )

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.algebra), default=0)

    def base_monomial(self, i: int) -> Monomial:
        return self._base_monos[i]

    def t_exponent(self, i: int) -> int:
        return self._t_exps[i]

    def boundary_value(self, key: Union[str, Monomial]) -> Fraction:
        c = self.base.monomial_from_exponents(parse_char_monomial(key)) if isinstance(key, str) else tuple(key)
        if c not in self.boundary:
            raise MissingBoundaryError(f"no boundary value for {format_monomial(self.base, c, ' ')}")
        return self.boundary[c]

    def generator_image(self, i: int) -> tuple[Fraction, Monomial] | None:
        img = self._images[i]
        if img is not None and not isinstance(img[0], Fraction):
            raise MissingBoundaryError(
                f"d3({self.algebra[i].name}) needs a boundary value for "
                f"{format_monomial(self.base, img, ' ')}"  # type: ignore[arg-type]
            )
        return img  # type: ignore[return-value]


def vd_spec(d: int, max_degree: int) -> DerivationSpec:
    """Degree-``d`` hypersurface in CP^4; boundary values are its characteristic numbers."""
    preset = vd_spinc_preset()
    ci = CompleteIntersection(4, (d,))
    base = preset.base_generators
    boundary = {
        c: char_number(ci, {g.name: a for a, g in zip(c, base) if a})
        for c in monomial_basis(base, preset.fiber_dim)
    }
    return DerivationSpec.from_preset(preset, boundary, max_degree)


def mg_spec(g: int, max_degree: int) -> DerivationSpec:
    """Spin^c(6) example of genus ``g``: boundary ``e -> 4 - 2g``, ``t p1 -> 0``, ``t^3 -> 0``."""
    return DerivationSpec.from_preset(
        vd_spinc_preset(), {"e": 4 - 2 * g, "t p1": 0, "t^3": 0}, max_degree
    )


def _d3_monomial(spec: DerivationSpec, m: Monomial, odd: Sequence[bool], any_odd: bool) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for i, a in enumerate(m):
        if not a:
            continue
        img = spec.generator_image(i)
        if img is None:
            continue
        coef, im = img
        if not any_odd:
            new = list(m)
            new[i] -= 1
            for j, b in enumerate(im):
                if b:
                    new[j] += b
            key = tuple(new)
            out[key] = out.get(key, 0) + a * coef
            continue
        # m = A * g_i^a * B; replace one g_i by its image in place
        n = len(m)
        head = m[:i] + (0,) * (n - i)
        tail = (0,) * (i + 1) + m[i + 1 :]
        mid = [0] * n
        mid[i] = a - 1
        s0, mid_t = monomial_product(odd, tuple(mid), im)
        if not s0:
            continue
        s1, x = monomial_product(odd, head, mid_t)
        if not s1:
            continue
        s2, y = monomial_product(odd, x, tail)
        if not s2:
            continue
        out[y] = out.get(y, 0) + s0 * s1 * s2 * a * coef
    return out


def apply_d3(spec: DerivationSpec, p: GradedPolynomial) -> GradedPolynomial:
    """Apply the derivation; linear and Leibniz (no signs, ``d3`` is even)."""
    if p.gens != spec.algebra:
        raise ValueError("polynomial is not in the kappa algebra of this derivation")
    if p and p.homogeneous_degree is None:
        raise ValueError("apply_d3 needs a homogeneous element")
    odd = tuple(g.odd for g in spec.algebra)
    any_odd = any(odd)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        for mm, v in _d3_monomial(spec, m, odd, any_odd).items():
            out[mm] = out.get(mm, 0) + c * v
    return GradedPolynomial(spec.algebra, out)


def apply_involution(spec: DerivationSpec, p: GradedPolynomial) -> GradedPolynomial:
    """``t -> -t``: ``k[t^a c] -> (-1)^a k[t^a c]``."""
    return GradedPolynomial(spec.algebra, {m: c * _sign(spec, m) for m, c in p.terms.items()})


def _sign(spec: DerivationSpec, m: Monomial) -> int:
    return -1 if sum(a * t for a, t in zip(m, spec._t_exps)) % 2 else 1


def _check_degree(spec: DerivationSpec, k: int) -> None:
    if k > spec.max_degree and k > 0:
        raise ValueError(
            f"degree {k} exceeds the algebra's generators (max kappa degree {spec.max_degree})"
        )


def d3_matrix(spec: DerivationSpec, k: int) -> list[list[Fraction]]:
    """Matrix of ``d3`` from degree ``k`` to ``k - 2`` in the monomial bases.

    Rows follow ``monomial_basis(algebra, k - 2)``, columns ``monomial_basis(algebra, k)``.
    """
    _check_degree(spec, k)
    src = monomial_basis(spec.algebra, k)
    tgt = monomial_basis(spec.algebra, k - 2)
    pos = {m: i for i, m in enumerate(tgt)}
    mat = [[Fraction(0)] * len(src) for _ in tgt]
    odd = tuple(g.odd for g in spec.algebra)
    any_odd = any(odd)
    for j, m in enumerate(src):
        for mm, v in _d3_monomial(spec, m, odd, any_odd).items():
            if v:
                mat[pos[mm]][j] = Fraction(v)
    return mat


@dataclass
class KernelReport:
    degree: int
    ambient_dim: int
    kernel_dim: int
    image_dim: int
    kernel_basis: list[GradedPolynomial]
    invariant_dim: int | None = None
    invariant_basis: list[GradedPolynomial] | None = None
    basis_monomials: tuple[Monomial, ...] = ()
    target_dim: int = 0
    _kernel: ReducedBasis | None = field(default=None, repr=False)
    _invariant: ReducedBasis | None = field(default=None, repr=False)

    @property
    def surjective(self) -> bool:
        return self.image_dim == self.target_dim

    def in_kernel_span(self, p: GradedPolynomial) -> bool:
        assert self._kernel is not None
        return self._kernel.contains(to_vector(p, self.basis_monomials))

    def in_invariant_span(self, p: GradedPolynomial) -> bool:
        if self._invariant is None:
            raise ValueError("report was computed without the involution")
        return self._invariant.contains(to_vector(p, self.basis_monomials))


def _lift(vectors: list[list[Fraction]], cols: list[int], width: int) -> list[list[Fraction]]:
    out = []
    for v in vectors:
        full = [Fraction(0)] * width
        for x, c in zip(v, cols):
            full[c] = x
        out.append(full)
    return out


def kernel_report(spec: DerivationSpec, k: int, involution: bool = False) -> KernelReport:
    """Kernel of ``d3`` in degree ``k`` by exact elimination, optionally with its ``t -> -t`` invariants."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    mat = d3_matrix(spec, k)
    src = monomial_basis(spec.algebra, k)
    basis, free, rk = nullspace(mat, len(src))
    report = KernelReport(
        degree=k,
        ambient_dim=len(src),
        kernel_dim=len(basis),
        image_dim=rk,
        kernel_basis=[from_vector(spec.algebra, src, v) for v in basis],
        basis_monomials=src,
        target_dim=len(mat),
        _kernel=ReducedBasis(tuple(map(tuple, basis)), tuple(free)),
    )
    if involution:
        plus = [j for j, m in enumerate(src) if _sign(spec, m) == 1]
        sub = [[row[j] for j in plus] for row in mat]
        inv_basis, inv_free, _ = nullspace(sub, len(plus))
        lifted = _lift(inv_basis, plus, len(src))
        report.invariant_dim = len(lifted)
        report.invariant_basis = [from_vector(spec.algebra, src, v) for v in lifted]
        report._invariant = ReducedBasis(tuple(map(tuple, lifted)), tuple(plus[f] for f in inv_free))
    return report


def surjectivity_check(spec: DerivationSpec, up_to_degree: int) -> list[tuple[int, bool]]:
    """Whether ``d3`` maps degree ``k`` onto degree ``k - 2``, for ``k = 0..D``."""
    out = []
    for k in range(up_to_degree + 1):
        mat = d3_matrix(spec, k)
        if not mat:
            out.append((k, True))
            continue
        ncols = len(mat[0])
        out.append((k, rank(mat, ncols) == len(mat)))
    return out


def relation_check_details(spec: DerivationSpec) -> dict[str, bool]:
    """Checks behind the degree-16 relation among squares in the ``t -> -t`` invariant ring.

    Builds the four anti-invariant and two invariant degree-4 kernel classes
    of the ``Spin^c(6)`` example from ``chi = boundary[e]``.
    """
    chi = spec.boundary_value("e")
    k = spec.algebra.gen
    a = k("k[t e]") * k("k[p2]") - chi * k("k[t p2]")
    b = k("k[t e]") * k("k[p1^2]") - chi * k("k[t p1^2]")
    anti = [
        a,
        b,
        chi * k("k[t^3 p1]") - 3 * k("k[t^2 p1]") * k("k[t e]"),
        chi * k("k[t^5]") - 5 * k("k[t^4]") * k("k[t e]"),
    ]
    inv = [k("k[p1 e]"), k("k[t e]") ** 2 - chi * k("k[t^2 e]")]
    checks = {
        "kernel": all(apply_d3(spec, x).is_zero() for x in anti + inv),
        "anti_invariant": all(apply_involution(spec, x) == -x for x in anti),
        "invariant": all(apply_involution(spec, x) == x for x in inv),
        "degree16_identity": (a * b) ** 2 == a**2 * b**2,
    }
    report8 = kernel_report(spec, 8, involution=True)
    products = [anti[i] * anti[j] for i in range(4) for j in range(i, 4)]
    checks["products_invariant"] = all(report8.in_invariant_span(x) for x in products)
    return checks


def sum_of_squares_relation_check(spec: DerivationSpec) -> bool:
    return all(relation_check_details(spec).values())
