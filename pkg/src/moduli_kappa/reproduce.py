"""Acceptance checks, each comparing a computed result with an independent value.

Every check returns a ``CheckResult``; nothing here raises on a mismatch.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .ci_invariants import CompleteIntersection, euler_characteristic, middle_betti, signature
from .genus_bounds import ManifoldInvariants, algebraic_genus, genus_interval, stable_range
from .graded_algebra import Generator, GeneratorSet, GradedPolynomial, hilbert_dims, monomial_basis, to_vector
from .kappa_rings import (
    bso_cover_preset,
    kappa_generator_set,
    leray_hirsch_dims,
    wg_closed_generator_set,
)
from .linalg import rank
from .serre_kernel import (
    DerivationSpec,
    apply_d3,
    kernel_report,
    mg_spec,
    relation_check_details,
    surjectivity_check,
    vd_spec,
)
from .torsion_tables import FinAbGroup, gamma_ab, mt_theta_pi1

__all__ = ["CHECKS", "CheckResult", "random_homogeneous", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: list[str], ok_detail: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:5])
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return CheckResult(name, False, shown + more)
    return CheckResult(name, True, ok_detail)


def check_hypersurface_invariants() -> CheckResult:
    from .cli import ci_payload

    failures = []
    for d in range(1, 11):
        got = ci_payload(4, [d])
        b3 = d**4 - 5 * d**3 + 10 * d**2 - 10 * d + 4
        want = {
            "euler_char": d * (10 - 10 * d + 5 * d**2 - d**3),
            "p1_coeff": 5 - d**2,
            "w2_parity": (5 - d) % 2,
            "middle_betti": b3,
            "genus": Fraction(b3, 2),
        }
        for key, value in want.items():
            if got[key] != value:
                failures.append(f"d={d} {key}: got {got[key]}, want {value}")
    return _result("hypersurface-invariants", failures, "d=1..10: chi, p1, w2, b3, genus match closed forms")


def check_classical_cross_checks() -> CheckResult:
    failures = []
    quartic = CompleteIntersection(3, (4,))
    if signature(quartic) != -16:
        failures.append(f"signature(K3) = {signature(quartic)}")
    if euler_characteristic(quartic) != 24:
        failures.append(f"chi(K3) = {euler_characteristic(quartic)}")
    cubic = middle_betti(CompleteIntersection(4, (3,)))
    if cubic != 10:
        failures.append(f"b3(cubic threefold) = {cubic}")
    for m in range(2, 10):
        linear = CompleteIntersection(m, (1,))
        k = m - 1
        want = (m, 1 if k % 2 == 0 else 0, 1 if k % 2 == 0 else 0)
        got = (euler_characteristic(linear), signature(linear), middle_betti(linear))
        if got != want:
            failures.append(f"V_1 in CP^{m}: got {got}, want {want}")
    return _result("classical-cross-checks", failures, "K3 sigma=-16 chi=24, cubic b3=10, hyperplanes = CP^(m-1)")


def _brute_force_counts(n: int, top: int) -> list[int]:
    """Monomials in ``p_i`` (``ceil((n+1)/4) <= i < n``) and ``e`` of degree ``k + 2n``, ``k = 0..top``."""
    degrees = [4 * i for i in range(-(-(n + 1) // 4), n)] + [2 * n]
    counts = [0] * (top + 1)
    bound = top + 2 * n
    ranges = [range(bound // d + 1) for d in degrees]
    for exps in itertools.product(*ranges):
        deg = sum(a * d for a, d in zip(exps, degrees))
        if 2 * n < deg <= bound:
            counts[deg - 2 * n] += 1
    return counts


def check_kappa_generator_counts() -> CheckResult:
    failures = []
    for n in (3, 4, 5):
        gens = kappa_generator_set(bso_cover_preset(n), 20)
        got = [0] * 21
        for g in gens:
            got[g.degree] += 1
        want = _brute_force_counts(n, 20)
        if got != want:
            failures.append(f"n={n}: counts {got} != brute force {want}")
    dims = hilbert_dims(kappa_generator_set(bso_cover_preset(3), 4), 4)
    if (dims[2], dims[4]) != (2, 4):
        failures.append(f"n=3 algebra dims at 2, 4: {dims[2]}, {dims[4]}")
    counts3 = _brute_force_counts(3, 6)
    if counts3[2] != 2 or counts3[4] != 1 or counts3[6] != 3:
        failures.append(f"n=3 brute-force counts {counts3}")
    return _result("kappa-generator-counts", failures, "n=3,4,5 to degree 20 match enumeration; n=3 dims 2, 4")


def check_closed_wg_equivalence() -> CheckResult:
    failures = []
    for n in range(3, 7):
        a = leray_hirsch_dims(n, 16)
        b = hilbert_dims(wg_closed_generator_set(n, 16), 16)
        if a != b:
            failures.append(f"n={n}: {a} != {b}")
    return _result("closed-wg-equivalence", failures, "n=3..6 to degree 16 agree")


def _vd_displayed_classes(spec: DerivationSpec, d: int) -> list[GradedPolynomial]:
    k = spec.algebra.gen
    return [
        k("k[p2]"),
        k("k[p1^2]"),
        k("k[t e]") - Fraction(10 - 10 * d + 5 * d**2 - d**3, 4) * k("k[t^4]"),
        k("k[t^2 p1]") - Fraction(5 - d**2, 2) * k("k[t^4]"),
    ]


def check_vd_kernel() -> CheckResult:
    failures = []
    for d in (2, 3, 5):
        spec = vd_spec(d, 10)
        report = kernel_report(spec, 2)
        if report.kernel_dim != 4:
            failures.append(f"d={d}: kernel dim {report.kernel_dim}")
        classes = _vd_displayed_classes(spec, d)
        vecs = [to_vector(p, report.basis_monomials) for p in classes]
        if rank(vecs, report.ambient_dim) != 4 or not all(report.in_kernel_span(p) for p in classes):
            failures.append(f"d={d}: displayed classes do not span the kernel")
        bad = [k for k, ok in surjectivity_check(spec, 10) if not ok]
        if bad:
            failures.append(f"d={d}: d3 not surjective in degrees {bad}")
    return _result("vd-kernel", failures, "d=2,3,5: H^2 dim 4 with the displayed span; d3 onto in degrees <= 10")


def check_spinc6_example() -> CheckResult:
    failures = []
    spec = mg_spec(5, 8)
    r2 = kernel_report(spec, 2, involution=True)
    r4 = kernel_report(spec, 4, involution=True)
    got = (r2.kernel_dim, r2.invariant_dim, r4.ambient_dim, r4.kernel_dim, r4.invariant_dim)
    if got != (4, 4, 21, 16, 12):
        failures.append(f"(ker2, inv2, amb4, ker4, inv4) = {got}, want (4, 4, 21, 16, 12)")
    for key, ok in relation_check_details(spec).items():
        if not ok:
            failures.append(f"relation check {key} failed")
    return _result("spinc6-example", failures, "g=5: dims 4/4 and 21/16/12; six classes and degree-16 relation verified")


def random_homogeneous(rng: random.Random, gens: GeneratorSet, degree: int, terms: int = 4) -> GradedPolynomial:
    basis = monomial_basis(gens, degree)
    if not basis:
        return GradedPolynomial.zero(gens)
    chosen = rng.sample(basis, min(terms, len(basis)))
    return GradedPolynomial(gens, {m: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for m in chosen})


def _derivation_law_failures(spec: DerivationSpec, rng: random.Random, trials: int) -> list[str]:
    failures = []
    gens = spec.algebra
    top = spec.max_degree
    degrees = [k for k in range(1, top + 1) if monomial_basis(gens, k)]
    leibniz = 0
    while leibniz < trials:
        k1 = rng.choice(degrees)
        rest = [k for k in degrees if k + k1 <= top]
        if not rest:
            continue
        k2 = rng.choice(rest)
        p, q = random_homogeneous(rng, gens, k1), random_homogeneous(rng, gens, k2)
        lhs = apply_d3(spec, p * q)
        rhs = apply_d3(spec, p) * q + p * apply_d3(spec, q)
        if lhs != rhs:
            failures.append(f"Leibniz fails for ({p}) * ({q})")
        leibniz += 1
    t = spec.base.index(spec.t_symbol)
    eligible = [
        i for i in range(len(gens))
        if spec.t_exponent(i) >= 2 and spec.base.degree(spec.base_monomial(i)) - 4 > spec.fiber_dim
    ]
    lookup = {spec.base_monomial(i): i for i in range(len(gens))}
    for _ in range(trials):
        # generators of one degree, so the input is homogeneous
        deg = gens[rng.choice(eligible)].degree
        same = [i for i in eligible if gens[i].degree == deg]
        picks = rng.sample(same, min(3, len(same)))
        coeffs = [rng.randint(-4, 4) or 1 for _ in picks]
        p = GradedPolynomial.zero(gens)
        want = GradedPolynomial.zero(gens)
        for i, c in zip(picks, coeffs):
            a = spec.t_exponent(i)
            p = p + c * gens.gen(gens[i].name)
            lower = list(spec.base_monomial(i))
            lower[t] -= 2
            want = want + c * a * (a - 1) * gens.gen(gens[lookup[tuple(lower)]].name)
        got = apply_d3(spec, apply_d3(spec, p))
        if got != want:
            failures.append(f"d3^2({p}) = {got}, want {want}")
    return failures


def check_derivation_laws(trials: int = 200, seed: int = 20240531) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for label, spec in (("V_3", vd_spec(3, 10)), ("V_5", vd_spec(5, 10)), ("M_5", mg_spec(5, 10))):
        failures.extend(f"{label}: {msg}" for msg in _derivation_law_failures(spec, rng, trials))
    return _result("derivation-laws", failures, f"Leibniz and d3^2 = d^2/dt^2 on {trials} random inputs per spec")


def check_genus_formulas() -> CheckResult:
    failures = []
    for g in range(0, 21):
        inv = ManifoldInvariants(3, 2 - 2 * g, (1, 0, 0), 0)
        if algebraic_genus(inv) != g:
            failures.append(f"W_{g}: algebraic genus {algebraic_genus(inv)}")
    for n in range(3, 12):
        for e in range(4):
            betti = tuple(1 - i % 2 for i in range(n))
            chi = sum((-1) ** i * b for i, b in enumerate(betti)) * 2 + (-1) ** n * 10
            sigma = 0 if n % 2 else 2
            inv = ManifoldInvariants(n, chi, betti, sigma, e_generators=e)
            lo, hi = genus_interval(inv)
            want = e if (n % 2 == 0 or n in (3, 7)) else 1 + e
            if hi - lo != want:
                failures.append(f"n={n} e={e}: width {hi - lo}, want {want}")
    if stable_range(9, True) != 3:
        failures.append(f"stable_range(9, spherical) = {stable_range(9, True)}")
    if stable_range(4, False) != 0:
        failures.append(f"stable_range(4) = {stable_range(4, False)}")
    return _result("genus-formulas", failures, "W_g genus for g=0..20, interval widths, stable ranges 3 and 0")


def _series_dims(gens: Iterable[Generator], top: int) -> list[int]:
    """Coefficients of prod 1/(1-q^d) (even) * prod (1+q^d) (odd), by direct polynomial products."""
    series = [1] + [0] * top
    for g in gens:
        if g.odd:
            factor = [0] * (top + 1)
            factor[0] = 1
            if g.degree <= top:
                factor[g.degree] = 1
        else:
            factor = [1 if k % g.degree == 0 else 0 for k in range(top + 1)]
        series = [sum(series[i] * factor[k - i] for i in range(k + 1)) for k in range(top + 1)]
    return series


def random_generator_set(rng: random.Random) -> GeneratorSet:
    gens = []
    for i in range(rng.randint(1, 6)):
        deg = rng.randint(1, 8)
        odd = bool(deg % 2) or rng.random() < 0.2
        gens.append(Generator(f"x{i}", deg, odd))
    return GeneratorSet(tuple(gens))


def check_hilbert_series(samples: int = 50, seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        gens = random_generator_set(rng)
        got = hilbert_dims(gens, 20)
        want = _series_dims(gens, 20)
        if got != want:
            failures.append(f"{[(g.degree, g.parity) for g in gens]}: {got} != {want}")
    return _result("hilbert-series", failures, f"{samples} random generator sets agree to degree 20")


def check_abelianization_tables() -> CheckResult:
    failures = []
    table = {1: (), 2: (2, 2), 3: (), 4: (2, 2, 2, 2), 5: (4,), 6: (2, 2, 3), 7: (2,)}
    for n, factors in table.items():
        if mt_theta_pi1(n) != FinAbGroup(factors):
            failures.append(f"pi_1 MT theta_{n} = {mt_theta_pi1(n)}")
    expected = {
        ("lens", 2): (2, 4),
        ("lens", 3): (3, 9),
        ("lens", 5): (5, 5, 5),
        ("lens", 7): (7, 7, 7),
        ("lens", 11): (11, 11, 11),
        ("quaternion-Q8", None): (2, 2, 4, 4, 64),
        ("poincare-sphere", None): (5, 5, 9, 64),
    }
    for (example, p), factors in expected.items():
        res = gamma_ab(example, p)
        if res.group != FinAbGroup(factors):
            failures.append(f"{example} p={p}: {res.group}")
        if res.group.order != res.g_ab.order * res.ko7.order:
            failures.append(f"{example} p={p}: order mismatch")
        if "imported data" not in res.citation:
            failures.append(f"{example}: citation missing")
    return _result("abelianization-tables", failures, "seven table entries and three examples reproduced; orders consistent")


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "hypersurface-invariants": check_hypersurface_invariants,
    "classical-cross-checks": check_classical_cross_checks,
    "kappa-generator-counts": check_kappa_generator_counts,
    "closed-wg-equivalence": check_closed_wg_equivalence,
    "vd-kernel": check_vd_kernel,
    "spinc6-example": check_spinc6_example,
    "derivation-laws": check_derivation_laws,
    "genus-formulas": check_genus_formulas,
    "hilbert-series": check_hilbert_series,
    "abelianization-tables": check_abelianization_tables,
}


def run_checks(names: Iterable[str] | None = None) -> list[CheckResult]:
    out = []
    for name in names if names is not None else CHECKS:
        try:
            out.append(CHECKS[name]())
        except Exception as exc:  # a crash is a failure, reported not raised
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return out
