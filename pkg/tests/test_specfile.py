import json
from fractions import Fraction

import pytest

from moduli_kappa.kappa_rings import StructurePreset
from moduli_kappa.serre_kernel import DerivationSpec, kernel_report
from moduli_kappa.specfile import SpecFileError, load_spec_file, parse_rational, read_spec_file


def write(tmp_path, obj, name="spec.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return path


def test_parse_rational():
    assert parse_rational("-200") == -200
    assert parse_rational(" 3/4 ") == Fraction(3, 4)
    assert parse_rational(7) == 7
    for bad in ("1/0", "1.5", 1.5, True, "x", None):
        with pytest.raises(SpecFileError):
            parse_rational(bad)


def test_boundary_file(tmp_path):
    path = write(tmp_path, {
        "preset": "vd-spinc",
        "boundary": {"e": "-200", "t p1": "-100", "t^3": "5"},
        "involution": True,
        "max_degree": 4,
    })
    loaded = read_spec_file(path)
    assert isinstance(loaded.value, DerivationSpec)
    assert loaded.involution and loaded.max_degree == 4
    assert loaded.value.boundary_value("t p1") == -100
    assert kernel_report(loaded.value, 2).kernel_dim == 4


def test_vd_file_with_degree(tmp_path):
    spec = load_spec_file(write(tmp_path, {"preset": "vd-spinc", "d": 3, "max_degree": 4}))
    assert spec.boundary_value("e") == -6
    assert spec.boundary_value("t p1") == -12
    assert spec.boundary_value("t^3") == 3


def test_custom_preset_file(tmp_path):
    preset = load_spec_file(write(tmp_path, {
        "fiber_dim": 6,
        "generators": [{"name": "t", "degree": 2, "parity": "even"}, {"name": "e", "degree": 6}],
    }))
    assert isinstance(preset, StructurePreset)
    assert preset.base_generators.names == ("t", "e")


@pytest.mark.parametrize(
    "obj, message",
    [
        ({"fiber_dim": 6, "generators": []}, "at least one generator"),
        ({"preset": "vd-spinc", "boundary": {"e": "1/0"}}, "boundary.e"),
        ({"preset": "vd-spinc", "boundary": {"t^2": "1"}}, "invariant violated"),
        ({"preset": "vd-spinc", "d": 3, "g": 2}, "mutually exclusive"),
        ({"preset": "vd-spinc", "colour": 1}, "unknown field"),
        ({"preset": "nope"}, "unknown preset"),
        ({"boundary": {}}, "required"),
        ({"preset": "vd-spinc", "max_degree": 1000}, "cap"),
        ([1, 2], "JSON object"),
    ],
)
def test_errors_name_the_field(tmp_path, obj, message):
    with pytest.raises(SpecFileError, match=message):
        load_spec_file(write(tmp_path, obj))


def test_parse_error_reports_line(tmp_path):
    with pytest.raises(SpecFileError, match="line 3"):
        load_spec_file(write(tmp_path, '{\n "preset": "vd-spinc",\n "d": ,\n}'))


def test_missing_file(tmp_path):
    with pytest.raises(SpecFileError):
        load_spec_file(tmp_path / "absent.json")
