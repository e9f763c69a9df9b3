"""Command-line front end: ``moduli-kappa <subcommand> ...``.

Output is canonical JSON by default (sorted keys, integers as decimal strings,
rationals as ``"p/q"``); ``--format table`` gives a plain-text rendering.
Degrees given on the command line are cohomological degrees of the moduli
space, not degrees of base classes.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .ci_invariants import CompleteIntersection, char_number, tangential_data
from .genus_bounds import (
    ManifoldInvariants,
    algebraic_genus,
    floor_range,
    genus_interval,
    invariants_of_complete_intersection,
    stable_range,
)
from .graded_algebra import GeneratorSet, format_monomial, hilbert_dims, monomial_basis
from .kappa_rings import (
    StructurePreset,
    kappa_generator_set,
    leray_hirsch_dims,
    max_kappa_degree,
    resolve_preset,
    wg_closed_generator_set,
)
from .serre_kernel import DerivationSpec, MissingBoundaryError, kernel_report, mg_spec, vd_spec
from .specfile import DEFAULT_KERNEL_DEGREE, SpecFileError, read_spec_file
from .torsion_tables import EXAMPLES, gamma_ab, mt_theta_pi1

__all__ = ["UsageError", "dumps", "main", "run", "to_jsonable"]


class UsageError(Exception):
    pass


# --- output -----------------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    """Exact, float-free JSON view: numbers become strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        raise TypeError("floating point values are not part of the output contract")
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False)


def _cell(v: Any) -> str:
    v = to_jsonable(v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ", ".join(_cell(x) for x in v) if v else "-"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_cell(x)}" for k, x in sorted(v.items()))
    return str(v)


def render_table(payload: dict) -> str:
    lines = []
    tables = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            tables.append((key, value))
        else:
            lines.append(f"{key}: {_cell(value)}")
    for key, rows in tables:
        cols = list(rows[0])
        cells = [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("")
        lines.append(f"{key}:")
        lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        for row in cells:
            lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


# --- payload builders ---------------------------------------------------------


def _ci_char_numbers(ci: CompleteIntersection) -> dict[str, Fraction]:
    n = ci.complex_dim
    gens = GeneratorSet.of(("t", 2), *((f"p{i}", 4 * i) for i in range(1, n // 2 + 1)), ("e", 2 * n))
    out = {}
    for m in monomial_basis(gens, 2 * n):
        exps = {g.name: a for a, g in zip(m, gens) if a}
        out[" ".join(f"{k}^{v}" if v > 1 else k for k, v in exps.items())] = char_number(ci, exps)
    return out


def ci_payload(ambient: int, degrees: Sequence[int]) -> dict:
    ci = CompleteIntersection(ambient, tuple(degrees))
    data = tangential_data(ci)
    out: dict[str, Any] = {
        "ambient_dim": ambient,
        "degrees": list(ci.degrees),
        "complex_dim": ci.complex_dim,
        "euler_char": data.euler_char,
        "signature": data.signature,
        "p1_coeff": data.p1_coeff,
        "e_coeff": data.e_coeff,
        "w2_parity": data.w2_parity,
        "middle_betti": data.middle_betti,
        "pontryagin_coeffs": list(data.pontryagin_coeffs),
        "char_numbers": _ci_char_numbers(ci),
        "genus": None,
        "genus_interval": None,
    }
    inv = invariants_of_complete_intersection(ci)
    out["genus"] = algebraic_genus(inv)
    if ci.complex_dim > 2:
        out["genus_interval"] = list(genus_interval(inv))
    return out


def genus_payload(inv: ManifoldInvariants) -> dict:
    ga = algebraic_genus(inv)
    lo, hi = genus_interval(inv)
    g = max(lo, 0)
    bound = stable_range(g, inv.spherical, inv.hirsch_length)
    return {
        "algebraic_genus": ga,
        "genus_interval": [lo, hi],
        "interval_width": hi - lo,
        "stable_range": {"genus": g, "bound": bound, "max_degree": floor_range(bound)},
    }


def _gens_payload(gens: GeneratorSet) -> list[dict]:
    return [{"name": g.name, "degree": g.degree, "parity": g.parity} for g in gens]


def ring_payload(
    preset: StructurePreset | None,
    max_degree: int,
    genus: int | None = None,
    spherical: bool = False,
    closed_wg: int | None = None,
) -> dict:
    if closed_wg is not None:
        gens = wg_closed_generator_set(closed_wg, max_degree)
        name, fiber, base = f"closed-wg({closed_wg})", 2 * closed_wg, None
    else:
        assert preset is not None
        gens = kappa_generator_set(preset, max_degree)
        name, fiber, base = preset.name, preset.fiber_dim, preset.base_generators
    dims = hilbert_dims(gens, max_degree)
    bound = stable_range(genus, spherical) if genus is not None else None
    rows = []
    for k, dim in enumerate(dims):
        row: dict[str, Any] = {"degree": k, "dim": dim}
        if bound is not None:
            row["in_stable_range"] = k <= bound
        rows.append(row)
    out: dict[str, Any] = {
        "preset": name,
        "fiber_dim": fiber,
        "max_degree": max_degree,
        "generators": _gens_payload(gens),
        "dims": rows,
    }
    if base is not None:
        out["base_generators"] = _gens_payload(base)
    if bound is not None:
        out["stable_range"] = bound
    if closed_wg is not None:
        out["leray_hirsch_dims"] = leray_hirsch_dims(closed_wg, max_degree)
        out["leray_hirsch_agrees"] = out["leray_hirsch_dims"] == dims
    return out


def kernel_payload(spec: DerivationSpec, max_degree: int, involution: bool, basis: bool, label: str) -> dict:
    rows = []
    for k in range(max_degree + 1):
        r = kernel_report(spec, k, involution=involution)
        row: dict[str, Any] = {
            "degree": k,
            "ambient_dim": r.ambient_dim,
            "kernel_dim": r.kernel_dim,
            "image_dim": r.image_dim,
            "surjective": r.surjective,
        }
        if involution:
            row["invariant_dim"] = r.invariant_dim
        if basis:
            row["kernel_basis"] = [str(p) for p in r.kernel_basis]
            if involution:
                row["invariant_basis"] = [str(p) for p in r.invariant_basis or []]
        rows.append(row)
    return {
        "spec": label,
        "fiber_dim": spec.fiber_dim,
        "boundary": {format_monomial(spec.base, c, " "): v for c, v in sorted(spec.boundary.items())},
        "max_degree": max_degree,
        "involution": involution,
        "degrees": rows,
    }


def abelianization_payload(example: str, p: int | None, n: int | None, genus: int | None) -> dict:
    if example == "mt-theta":
        if n is None:
            raise UsageError("example mt-theta needs --n")
        grp = mt_theta_pi1(n)
        return {
            "example": f"mt-theta({n})",
            "group": str(grp),
            "cyclic_factors": list(grp.cyclic_factors),
            "order": grp.order,
            "citation": "imported data: tabulated homotopy groups",
        }
    res = gamma_ab(example, p, genus=genus)
    grp = res.group
    return {
        "example": res.example,
        "g_ab": str(res.g_ab),
        "ko7": str(res.ko7),
        "group": str(grp),
        "cyclic_factors": list(grp.cyclic_factors),
        "order": grp.order,
        "citation": res.citation,
    }


# --- argument parsing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table"), default=None, help="output format (default json)")
    fmt.add_argument("--table", dest="format", action="store_const", const="table", help="same as --format table")
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")

    parser = _Parser(prog="moduli-kappa", description="Exact stable-cohomology computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ci", parents=[fmt], help="invariants of a complete intersection")
    p.add_argument("--ambient", type=int, required=True, help="m, for CP^m")
    p.add_argument("--degrees", type=_int_list, required=True, help="comma-separated multidegree")

    p = sub.add_parser("genus", parents=[fmt], help="genus bounds and stable range")
    p.add_argument("--n", type=int, required=True, help="half the manifold dimension")
    p.add_argument("--chi", type=int, required=True, help="Euler characteristic")
    p.add_argument("--betti", type=_int_list, required=True, help="b_0,...,b_{n-1}")
    p.add_argument("--sigma", type=int, default=0, help="signature")
    p.add_argument("--e-gens", type=int, default=0, help="generators of H_n(B;Z)")
    p.add_argument("--hirsch", type=int, default=0, help="Hirsch length of pi_1")
    p.add_argument("--spherical", action="store_true", help="structure is spherical")

    p = sub.add_parser("ring", parents=[fmt], help="kappa generators and Hilbert dimensions")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--preset", help="vd-spinc or bso-cover(n)")
    src.add_argument("--spec-file", help="JSON preset file")
    src.add_argument("--closed-wg", type=int, metavar="N", help="closed W_g of dimension 2N")
    p.add_argument("--n", type=int, help="n for --preset bso-cover")
    p.add_argument("--max-degree", type=int, default=None, help="top cohomological degree (default 12)")
    p.add_argument("--genus", type=int, help="flag degrees in the stable range for this genus")
    p.add_argument("--spherical", action="store_true", help="use the spherical stable range")

    p = sub.add_parser("kernel", parents=[fmt], help="kernel of d3 on a kappa algebra")
    p.add_argument("--preset", default="vd-spinc", help="structure preset (default vd-spinc)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--d", type=int, help="hypersurface degree in CP^4")
    src.add_argument("--g", type=int, help="genus for the Spin^c(6) example")
    src.add_argument("--boundary-file", help="JSON derivation spec")
    p.add_argument("--involution", action="store_true", help="also compute t -> -t invariants")
    p.add_argument("--max-degree", type=int, default=None, help=f"top degree (default {DEFAULT_KERNEL_DEGREE})")
    p.add_argument("--basis", action="store_true", help="include kernel bases")

    p = sub.add_parser("abelianization", parents=[fmt], help="tabulated abelianizations")
    p.add_argument("--example", required=True, choices=(*EXAMPLES, "mt-theta"))
    p.add_argument("--p", type=int, help="prime for the lens example")
    p.add_argument("--n", type=int, help="n for mt-theta")
    p.add_argument("--genus", type=int, help="assert genus >= 7 (checked)")

    p = sub.add_parser("reproduce", parents=[fmt], help="run acceptance checks")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--all", action="store_true")
    src.add_argument("--name", action="append", help="run one check (repeatable)")
    src.add_argument("--list", action="store_true", help="list check names")
    return parser


def _degree_cap(value: int | None, default: int) -> int:
    cap = max_kappa_degree()
    if value is None:
        return min(default, cap)
    if value < 1:
        raise UsageError("--max-degree must be >= 1")
    if value > cap:
        raise UsageError(f"--max-degree {value} exceeds the cap {cap} (set MODULI_KAPPA_MAX_DEGREE to raise it)")
    return value


def _dispatch(args: argparse.Namespace) -> tuple[Any, int]:
    cmd = args.command
    if cmd == "ci":
        return ci_payload(args.ambient, args.degrees), 0
    if cmd == "genus":
        inv = ManifoldInvariants(
            half_dim=args.n,
            euler_char=args.chi,
            betti_below=tuple(args.betti),
            signature=args.sigma,
            e_generators=args.e_gens,
            hirsch_length=args.hirsch,
            spherical=args.spherical,
        )
        return genus_payload(inv), 0
    if cmd == "ring":
        max_degree = _degree_cap(args.max_degree, 12)
        if args.closed_wg is not None:
            return ring_payload(None, max_degree, args.genus, args.spherical, closed_wg=args.closed_wg), 0
        if args.spec_file:
            loaded = read_spec_file(args.spec_file).value
            preset = loaded if isinstance(loaded, StructurePreset) else None
            if preset is None:
                raise UsageError("ring --spec-file expects a preset file (fiber_dim and generators)")
        else:
            preset = resolve_preset(args.preset or "vd-spinc", args.n)
        return ring_payload(preset, max_degree, args.genus, args.spherical), 0
    if cmd == "kernel":
        involution = args.involution
        if args.boundary_file:
            loaded = read_spec_file(args.boundary_file)
            if not isinstance(loaded.value, DerivationSpec):
                raise UsageError("--boundary-file needs a 'boundary', 'd' or 'g' field")
            max_degree = _degree_cap(args.max_degree if args.max_degree is not None else loaded.max_degree,
                                     DEFAULT_KERNEL_DEGREE)
            spec = loaded.value
            if spec.max_degree < max_degree:
                raise UsageError(f"--max-degree {max_degree} exceeds the file's max_degree {spec.max_degree}")
            involution = involution or loaded.involution
            label = args.boundary_file
        else:
            if args.preset != "vd-spinc":
                raise UsageError("--d and --g apply to preset vd-spinc; use --boundary-file for others")
            max_degree = _degree_cap(args.max_degree, DEFAULT_KERNEL_DEGREE)
            if args.d is not None:
                if args.d < 1:
                    raise UsageError("--d must be >= 1")
                spec, label = vd_spec(args.d, max_degree), f"vd-spinc(d={args.d})"
            else:
                if args.g < 0:
                    raise UsageError("--g must be >= 0")
                spec, label = mg_spec(args.g, max_degree), f"spinc6(g={args.g})"
        return kernel_payload(spec, max_degree, involution, args.basis, label), 0
    if cmd == "abelianization":
        return abelianization_payload(args.example, args.p, args.n, args.genus), 0
    if cmd == "reproduce":
        from .reproduce import CHECKS, run_checks

        if args.list:
            return {"checks": [{"name": name, "criterion": i + 1} for i, name in enumerate(CHECKS)]}, 0
        names = list(CHECKS) if args.all else args.name
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; see 'reproduce --list'")
        results = run_checks(names)
        payload = {
            "checks": [{"name": r.name, "status": "PASS" if r.passed else "FAIL", "detail": r.detail} for r in results],
            "passed": sum(r.passed for r in results),
            "total": len(results),
        }
        return payload, 0 if all(r.passed for r in results) else 1
    raise UsageError(f"unknown command {cmd!r}")


def _emit_error(category: str, exc: BaseException, fmt: str, err) -> None:
    if fmt == "table":
        print(f"error ({category}): {exc}", file=err)
    else:
        print(dumps({"error": {"category": category, "type": type(exc).__name__, "message": str(exc)}}), file=err)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "table" if "--table" in argv or "--format=table" in argv else "json"
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit_error("usage", exc, fmt, err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    default_fmt = "table" if args.command == "reproduce" else "json"
    fmt = args.format or default_fmt
    try:
        payload, code = _dispatch(args)
    except (UsageError, SpecFileError) as exc:
        _emit_error("usage", exc, fmt, err)
        return 2
    except MissingBoundaryError as exc:
        _emit_error("missing-boundary", exc, fmt, err)
        return 1
    except (ValueError, ArithmeticError) as exc:
        _emit_error("domain", exc, fmt, err)
        return 1
    if fmt == "table" and args.command == "reproduce":
        for row in payload["checks"]:
            print(f"{row['status']}  {row['name']}: {row['detail']}", file=out)
        print(f"{payload['passed']}/{payload['total']} checks passed", file=out)
    elif fmt == "table":
        print(render_table(payload), file=out)
    else:
        print(dumps(payload), file=out)
    return code


def main() -> None:
    sys.exit(run())
