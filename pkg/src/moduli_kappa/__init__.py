"""Exact computations for stable cohomology of moduli spaces of manifolds.

Characteristic numbers of complete intersections, genus bounds, kappa-class
algebras, the ``d3`` derivation and its kernels, and tabulated abelianizations.
"""

from .ci_invariants import CompleteIntersection, char_number, euler_characteristic, signature, tangential_data
from .genus_bounds import ManifoldInvariants, algebraic_genus, genus_interval, stable_range
from .graded_algebra import Generator, GeneratorSet, GradedPolynomial, hilbert_dims, monomial_basis
from .kappa_rings import (
    StructurePreset,
    bso_cover_generators,
    kappa_generator_set,
    leray_hirsch_dims,
    resolve_preset,
    stable_cohomology_dims,
    wg_closed_generator_set,
)
from .linalg import BACKEND
from .serre_kernel import (
    DerivationSpec,
    KernelReport,
    MissingBoundaryError,
    apply_d3,
    d3_matrix,
    kernel_report,
    mg_spec,
    sum_of_squares_relation_check,
    surjectivity_check,
    vd_spec,
)
from .specfile import load_spec_file
from .torsion_tables import FinAbGroup, direct_sum, gamma_ab, mt_theta_pi1

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompleteIntersection",
    "DerivationSpec",
    "FinAbGroup",
    "Generator",
    "GeneratorSet",
    "GradedPolynomial",
    "KernelReport",
    "ManifoldInvariants",
    "MissingBoundaryError",
    "StructurePreset",
    "algebraic_genus",
    "apply_d3",
    "bso_cover_generators",
    "char_number",
    "d3_matrix",
    "direct_sum",
    "euler_characteristic",
    "gamma_ab",
    "genus_interval",
    "hilbert_dims",
    "kappa_generator_set",
    "kernel_report",
    "leray_hirsch_dims",
    "load_spec_file",
    "mg_spec",
    "monomial_basis",
    "mt_theta_pi1",
    "resolve_preset",
    "signature",
    "stable_cohomology_dims",
    "stable_range",
    "sum_of_squares_relation_check",
    "surjectivity_check",
    "tangential_data",
    "vd_spec",
    "wg_closed_generator_set",
]
