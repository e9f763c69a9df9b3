"""Generator sets of kappa-class rings and their graded dimensions.

For a structure space ``B`` with ``H^*(B;Q)`` free on ``base_generators`` and
fibre dimension ``2n``, there is one kappa class ``k[c]`` of degree
``|c| - 2n`` for every base monomial ``c`` with ``|c| > 2n``.
"""

from __future__ import annotations

import os
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Union

from .ci_invariants import parse_char_monomial
from .genus_bounds import stable_range
from .graded_algebra import (
    Generator,
    GeneratorSet,
    GradedPolynomial,
    Monomial,
    hilbert_dims,
    monomial_basis,
)

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "StructurePreset",
    "bso_cover_generators",
    "bso_cover_preset",
    "full_bso_generators",
    "kappa_generator_set",
    "kappa_name",
    "leray_hirsch_dims",
    "max_kappa_degree",
    "parse_kappa_name",
    "preset_from_dict",
    "resolve_preset",
    "rewrite_kappa",
    "stable_cohomology_dims",
    "vd_spinc_preset",
    "wg_closed_generator_set",
]

DEFAULT_MAX_DEGREE = 24


def max_kappa_degree() -> int:
    """Computation-size cap from ``MODULI_KAPPA_MAX_DEGREE`` (default 24)."""
    raw = os.environ.get("MODULI_KAPPA_MAX_DEGREE")
    if not raw:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"MODULI_KAPPA_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("MODULI_KAPPA_MAX_DEGREE must be >= 1")
    return value


@dataclass(frozen=True)
class StructurePreset:
    name: str
    fiber_dim: int
    base_generators: GeneratorSet
    oriented: bool = True

    def __post_init__(self) -> None:
        if not self.oriented:
            raise ValueError(
                f"preset {self.name!r}: non-orientable structures (twisted coefficients) "
                "are not supported"
            )
        if self.fiber_dim < 2 or self.fiber_dim % 2:
            raise ValueError(f"fiber dimension must be even and >= 2, got {self.fiber_dim}")
        if len(self.base_generators) == 0:
            raise ValueError("at least one generator is required")
        if self.fiber_dim < 6:
            warnings.warn(
                f"preset {self.name!r}: fibre dimension {self.fiber_dim} < 6, "
                "below the dimensions where kappa classes are known to be stable",
                stacklevel=2,
            )

    @property
    def half_dim(self) -> int:
        return self.fiber_dim // 2


def _p_then_e(n: int, p_indices: range) -> GeneratorSet:
    gens = [Generator(f"p{i}", 4 * i) for i in p_indices]
    gens.append(Generator("e", 2 * n))
    # stable sort by degree keeps p_i ahead of e on ties
    gens.sort(key=lambda g: g.degree)
    return GeneratorSet(tuple(gens))


def bso_cover_generators(n: int) -> GeneratorSet:
    """Rational cohomology generators of the ``n``-connected cover of ``BSO(2n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _p_then_e(n, range(-(-(n + 1) // 4), n))


def full_bso_generators(n: int) -> GeneratorSet:
    """``p_1 .. p_{n-1}, e``: rational cohomology generators of ``BSO(2n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _p_then_e(n, range(1, n))


def bso_cover_preset(n: int) -> StructurePreset:
    return StructurePreset(f"bso-cover({n})", 2 * n, bso_cover_generators(n))


def vd_spinc_preset() -> StructurePreset:
    """Structure space of hypersurfaces in CP^4: ``Q[t, p1, e, p2]``, fibre dimension 6."""
    return StructurePreset("vd-spinc", 6, GeneratorSet.of(("t", 2), ("p1", 4), ("e", 6), ("p2", 8)))


_BSO_COVER = re.compile(r"^bso-cover(?:\((\d+)\))?$")


def resolve_preset(name: str, n: int | None = None) -> StructurePreset:
    """Built-in presets: ``vd-spinc`` and ``bso-cover(n)`` (or ``bso-cover`` with ``n``)."""
    if name == "vd-spinc":
        return vd_spinc_preset()
    m = _BSO_COVER.match(name)
    if m:
        if m.group(1) is not None:
            n = int(m.group(1))
        if n is None:
            raise ValueError("preset bso-cover needs n, e.g. 'bso-cover(3)'")
        return bso_cover_preset(n)
    raise ValueError(f"unknown preset {name!r}; known: vd-spinc, bso-cover(n), custom file")


def preset_from_dict(obj: Mapping[str, Any], name: str = "custom") -> StructurePreset:
    """Custom preset from ``{"fiber_dim": 6, "generators": [{"name", "degree", "parity"}, ...]}``."""
    if "fiber_dim" not in obj:
        raise ValueError("field 'fiber_dim' is required")
    gens_raw = obj.get("generators")
    if not isinstance(gens_raw, list):
        raise ValueError("field 'generators' must be a list")
    if not gens_raw:
        raise ValueError("field 'generators': at least one generator is required")
    specs = []
    for i, g in enumerate(gens_raw):
        if not isinstance(g, Mapping) or "name" not in g or "degree" not in g:
            raise ValueError(f"field 'generators[{i}]' needs 'name' and 'degree'")
        degree = g["degree"]
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise ValueError(f"field 'generators[{i}].degree' must be an integer")
        parity = g.get("parity", "odd" if degree % 2 else "even")
        specs.append((str(g["name"]), degree, parity))
    fiber_dim = obj["fiber_dim"]
    if not isinstance(fiber_dim, int) or isinstance(fiber_dim, bool):
        raise ValueError("field 'fiber_dim' must be an integer")
    return StructurePreset(
        name=str(obj.get("name", name)),
        fiber_dim=fiber_dim,
        base_generators=GeneratorSet.of(*specs),
        oriented=bool(obj.get("oriented", True)),
    )


def kappa_name(base: GeneratorSet, c: Monomial) -> str:
    parts = []
    for a, g in zip(c, base.generators):
        if a == 1:
            parts.append(g.name)
        elif a > 1:
            parts.append(f"{g.name}^{a}")
    return "k[" + " ".join(parts) + "]"


def parse_kappa_name(name: str, base: GeneratorSet) -> Monomial:
    if not (name.startswith("k[") and name.endswith("]")):
        raise ValueError(f"{name!r} is not a kappa-class name")
    return base.monomial_from_exponents(parse_char_monomial(name[2:-1]))


def _is_odd(base: GeneratorSet, c: Monomial, degree: int) -> bool:
    odd_factors = sum(a for a, g in zip(c, base.generators) if g.odd)
    return bool(degree % 2) or bool(odd_factors % 2)


def kappa_generator_set(preset: StructurePreset, max_kappa_degree: int) -> GeneratorSet:
    """One generator per base monomial ``c`` with ``2n < |c| <= D + 2n``.

    Ordered by degree, then by ascending exponent vector of ``c`` (so fewer
    powers of the first base generator come first).
    """
    if max_kappa_degree < 1:
        raise ValueError("max kappa degree must be >= 1")
    base = preset.base_generators
    shift = preset.fiber_dim
    gens = []
    for k in range(1, max_kappa_degree + 1):
        for c in reversed(monomial_basis(base, k + shift)):
            gens.append(Generator(kappa_name(base, c), k, _is_odd(base, c, k)))
    return GeneratorSet(tuple(gens))


def wg_closed_generator_set(n: int, max_kappa_degree: int) -> GeneratorSet:
    """Kappa generators for closed ``W_g = #g(S^n x S^n)``.

    Monomials in the ``n``-connected-cover generators of degree above ``2n``,
    plus ``k[p_i e]`` for ``1 <= i <= floor(n/4)`` (degree ``4i``). Names use
    the full ``BSO(2n)`` generator order.
    """
    if n < 3:
        raise ValueError("closed W_g generator set needs n >= 3")
    cover = bso_cover_generators(n)
    full = full_bso_generators(n)
    embed = [full.index(g.name) for g in cover]
    gens = []
    for k in range(1, max_kappa_degree + 1):
        for c in reversed(monomial_basis(cover, k + 2 * n)):
            cf = [0] * len(full)
            for a, j in zip(c, embed):
                cf[j] = a
            gens.append(Generator(kappa_name(full, tuple(cf)), k))
        if k % 4 == 0 and k // 4 <= n // 4:
            i = k // 4
            gens.append(Generator(kappa_name(full, full.monomial_from_exponents({f"p{i}": 1, "e": 1})), k))
    return GeneratorSet(tuple(gens))


def stable_cohomology_dims(
    preset: StructurePreset,
    genus: int,
    spherical: bool,
    max_degree: int | None = None,
    hirsch: int = 0,
) -> list[tuple[int, int, bool]]:
    """``(degree, dimension, in_stable_range)`` for degrees ``0..max_degree``."""
    if max_degree is None:
        max_degree = max_kappa_degree()
    bound = stable_range(genus, spherical, hirsch)
    if max_degree < 1:
        return [(0, 1, 0 <= bound)]
    dims = hilbert_dims(kappa_generator_set(preset, max_degree), max_degree)
    return [(k, dim, k <= bound) for k, dim in enumerate(dims)]


def leray_hirsch_dims(n: int, max_degree: int) -> list[int]:
    """Dimensions of ``Q[k_c | c in B] (x) Q[p_1, ..., p_floor(n/4)]`` in degrees ``0..max_degree``."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if max_degree < 1:
        return [1]
    kappa = hilbert_dims(kappa_generator_set(bso_cover_preset(n), max_degree), max_degree)
    pont = hilbert_dims(GeneratorSet.of(*((f"p{i}", 4 * i) for i in range(1, n // 4 + 1))), max_degree)
    return [sum(kappa[i] * pont[k - i] for i in range(k + 1)) for k in range(max_degree + 1)]


def rewrite_kappa(
    c: Union[str, Mapping[str, int]], n: int, g: int, max_kappa_degree: int
) -> GradedPolynomial:
    """Express ``k[c]`` for a monomial ``c`` in ``p_1 .. p_{n-1}, e`` via the closed-``W_g`` generators.

    ``k[c] = prod_{i <= n/4} (k[p_i e] / chi)^{j_i} * k[rest]``, where ``rest``
    drops the low Pontryagin classes and ``chi = 2 + (-1)^n 2g`` must be
    nonzero. A ``rest`` of degree exactly ``2n`` evaluates to a characteristic
    number of the stably parallelizable ``W_g``: ``chi`` for ``e`` and 0 for
    any Pontryagin monomial.
    """
    exps = parse_char_monomial(c) if isinstance(c, str) else dict(c)
    chi = 2 + (-1) ** n * 2 * g
    if chi == 0:
        raise ValueError("rewriting needs chi(W_g) != 0")
    gens = wg_closed_generator_set(n, max_kappa_degree)
    full = full_bso_generators(n)
    for name in exps:
        full.index(name)
    k = n // 4
    result = GradedPolynomial.constant(gens, 1)
    rest = dict(exps)
    for i in range(1, k + 1):
        j = rest.pop(f"p{i}", 0)
        if j:
            kp = gens.gen(kappa_name(full, full.monomial_from_exponents({f"p{i}": 1, "e": 1})))
            result = result * (kp * Fraction(1, chi)) ** j
    rest_mono = full.monomial_from_exponents(rest)
    deg = full.degree(rest_mono)
    if deg > 2 * n:
        if deg - 2 * n > max_kappa_degree:
            raise ValueError("max_kappa_degree too small for this monomial")
        return result * gens.gen(kappa_name(full, rest_mono))
    if deg == 2 * n and rest == {"e": 1}:
        return result * chi
    return GradedPolynomial.zero(gens)
