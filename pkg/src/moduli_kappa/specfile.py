"""JSON input files for presets and derivation specs.

Structure preset::

    {"fiber_dim": 6, "generators": [{"name": "t", "degree": 2, "parity": "even"}, ...]}

Derivation spec (rationals are strings ``"p/q"`` or integers)::

    {"preset": "vd-spinc", "boundary": {"e": "-200", "t p1": "-100", "t^3": "5"},
     "involution": true, "max_degree": 8}

A ``vd-spinc`` file may give ``"d"`` (hypersurface degree) or ``"g"`` instead
of ``boundary``; the boundary values are then computed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .kappa_rings import StructurePreset, max_kappa_degree, preset_from_dict, resolve_preset
from .serre_kernel import DerivationSpec, mg_spec, vd_spec

__all__ = [
    "DEFAULT_KERNEL_DEGREE",
    "SpecFile",
    "SpecFileError",
    "load_spec_file",
    "parse_rational",
    "read_spec_file",
    "spec_from_dict",
]

DEFAULT_KERNEL_DEGREE = 8

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")
_KNOWN_KEYS = {"preset", "name", "fiber_dim", "generators", "oriented", "boundary", "d", "g", "involution", "max_degree"}


class SpecFileError(ValueError):
    pass


@dataclass(frozen=True)
class SpecFile:
    value: Union[DerivationSpec, StructurePreset]
    involution: bool = False
    max_degree: int | None = None


def parse_rational(value: Any, where: str = "value") -> Fraction:
    """Exact rational from an integer or a ``"p/q"`` string; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecFileError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise SpecFileError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    m = _RATIONAL.match(value)
    if not m:
        raise SpecFileError(f"{where}: malformed rational {value!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise SpecFileError(f"{where}: zero denominator in {value!r}")
    return Fraction(num, den)


def _int_field(obj: dict, key: str) -> int | None:
    if key not in obj:
        return None
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise SpecFileError(f"field '{key}': expected an integer, got {v!r}")
    return v


def spec_from_dict(obj: Any) -> SpecFile:
    if not isinstance(obj, dict):
        raise SpecFileError("top level: expected a JSON object")
    unknown = sorted(set(obj) - _KNOWN_KEYS)
    if unknown:
        raise SpecFileError(f"unknown field(s): {', '.join(unknown)}")
    involution = obj.get("involution", False)
    if not isinstance(involution, bool):
        raise SpecFileError("field 'involution': expected true or false")
    max_degree = _int_field(obj, "max_degree")
    if max_degree is not None:
        if max_degree < 1:
            raise SpecFileError("field 'max_degree': must be >= 1")
        cap = max_kappa_degree()
        if max_degree > cap:
            raise SpecFileError(f"field 'max_degree': {max_degree} exceeds the cap {cap} (MODULI_KAPPA_MAX_DEGREE)")
    d, g = _int_field(obj, "d"), _int_field(obj, "g")

    try:
        if "generators" in obj:
            if "preset" in obj:
                raise SpecFileError("give either 'preset' or 'generators', not both")
            preset = preset_from_dict(obj)
        elif "preset" in obj:
            if not isinstance(obj["preset"], str):
                raise SpecFileError("field 'preset': expected a string")
            preset = resolve_preset(obj["preset"])
        else:
            raise SpecFileError("one of 'preset' or 'generators' is required")
    except SpecFileError:
        raise
    except ValueError as exc:
        raise SpecFileError(str(exc)) from None

    sources = [k for k in ("boundary", "d", "g") if k in obj]
    if len(sources) > 1:
        raise SpecFileError(f"fields {', '.join(sources)} are mutually exclusive")
    if not sources:
        return SpecFile(preset, involution, max_degree)

    degree = max_degree or DEFAULT_KERNEL_DEGREE
    try:
        if d is not None or g is not None:
            if preset.name != "vd-spinc":
                raise SpecFileError(f"field '{sources[0]}' needs preset 'vd-spinc'")
            if d is not None:
                if d < 1:
                    raise SpecFileError("field 'd': must be >= 1")
                spec = vd_spec(d, degree)
            else:
                if g < 0:
                    raise SpecFileError("field 'g': must be >= 0")
                spec = mg_spec(g, degree)
        else:
            raw = obj["boundary"]
            if not isinstance(raw, dict):
                raise SpecFileError("field 'boundary': expected an object")
            boundary = {k: parse_rational(v, f"field 'boundary.{k}'") for k, v in raw.items()}
            spec = DerivationSpec.from_preset(preset, boundary, degree)
    except SpecFileError:
        raise
    except ValueError as exc:
        raise SpecFileError(f"invariant violated: {exc}") from None
    return SpecFile(spec, involution, degree)


def read_spec_file(path: Union[str, Path]) -> SpecFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc.strerror or exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return spec_from_dict(obj)
    except SpecFileError as exc:
        raise SpecFileError(f"{path}: {exc}") from None


def load_spec_file(path: Union[str, Path]) -> Union[DerivationSpec, StructurePreset]:
    return read_spec_file(path).value
