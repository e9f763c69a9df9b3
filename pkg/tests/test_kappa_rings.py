import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moduli_kappa.graded_algebra import GeneratorSet, hilbert_dims
from moduli_kappa.kappa_rings import (
    StructurePreset,
    bso_cover_generators,
    bso_cover_preset,
    full_bso_generators,
    kappa_generator_set,
    kappa_name,
    leray_hirsch_dims,
    max_kappa_degree,
    parse_kappa_name,
    preset_from_dict,
    resolve_preset,
    rewrite_kappa,
    stable_cohomology_dims,
    vd_spinc_preset,
    wg_closed_generator_set,
)


def _spec(gens):
    return [(g.name, g.degree) for g in gens]


def test_bso_cover_generators():
    assert _spec(bso_cover_generators(3)) == [("p1", 4), ("e", 6), ("p2", 8)]
    assert _spec(bso_cover_generators(4)) == [("p2", 8), ("e", 8), ("p3", 12)]
    assert _spec(bso_cover_generators(1)) == [("e", 2)]
    assert not any(g.odd for g in bso_cover_generators(7))


def test_kappa_generators_small_degrees():
    gens = kappa_generator_set(bso_cover_preset(3), 2)
    assert gens.names == ("k[p2]", "k[p1^2]")
    gens = kappa_generator_set(bso_cover_preset(3), 4)
    assert gens.names == ("k[p2]", "k[p1^2]", "k[p1 e]")
    vd = kappa_generator_set(vd_spinc_preset(), 2)
    assert vd.names == ("k[p2]", "k[p1^2]", "k[t e]", "k[t^2 p1]", "k[t^4]")
    assert all(g.degree == 2 for g in vd)


def _partition_count(parts, total):
    return sum(
        1 for exps in itertools.product(*(range(total // p + 1) for p in parts))
        if sum(a * p for a, p in zip(exps, parts)) == total
    )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generator_counts_against_partitions(n):
    parts = [4 * i for i in range(-(-(n + 1) // 4), n)] + [2 * n]
    gens = kappa_generator_set(bso_cover_preset(n), 20)
    for k in range(1, 21):
        assert sum(1 for g in gens if g.degree == k) == _partition_count(parts, k + 2 * n)


@pytest.mark.parametrize("n", range(3, 7))
def test_leray_hirsch_equals_closed_wg_algebra(n):
    assert leray_hirsch_dims(n, 16) == hilbert_dims(wg_closed_generator_set(n, 16), 16)


def test_closed_wg_extra_generators():
    assert wg_closed_generator_set(3, 8) == kappa_generator_set(bso_cover_preset(3), 8)
    assert "k[p1 e]" in wg_closed_generator_set(4, 4).names
    g5 = wg_closed_generator_set(5, 4)
    assert g5[g5.index("k[p1 e]")].degree == 4
    with pytest.raises(ValueError):
        wg_closed_generator_set(2, 4)


@given(st.integers(1, 8), st.integers(1, 12))
def test_kappa_degrees_positive_and_names_round_trip(n, top):
    preset = StructurePreset("x", 2 * n, bso_cover_generators(n)) if n >= 3 else None
    if preset is None:
        return
    gens = kappa_generator_set(preset, top)
    base = preset.base_generators
    for g in gens:
        assert 1 <= g.degree <= top
        c = parse_kappa_name(g.name, base)
        assert base.degree(c) - 2 * n == g.degree
        assert kappa_name(base, c) == g.name


def test_stable_cohomology_dims():
    rows = stable_cohomology_dims(bso_cover_preset(3), genus=10, spherical=False, max_degree=4)
    assert rows[0] == (0, 1, True)
    assert rows[2] == (2, 2, True)
    assert rows[4] == (4, 4, False)


def test_presets():
    assert resolve_preset("bso-cover(4)").fiber_dim == 8
    assert resolve_preset("bso-cover", n=5).fiber_dim == 10
    assert resolve_preset("vd-spinc").base_generators.names == ("t", "p1", "e", "p2")
    with pytest.raises(ValueError, match="unknown preset"):
        resolve_preset("bso")
    with pytest.raises(ValueError, match="needs n"):
        resolve_preset("bso-cover")


def test_preset_validation():
    with pytest.raises(ValueError, match="non-orientable"):
        StructurePreset("x", 6, GeneratorSet.of(("t", 2)), oriented=False)
    with pytest.raises(ValueError, match="even"):
        StructurePreset("x", 5, GeneratorSet.of(("t", 2)))
    with pytest.warns(UserWarning):
        StructurePreset("x", 4, GeneratorSet.of(("t", 2)))
    with pytest.raises(ValueError, match="at least one generator"):
        preset_from_dict({"fiber_dim": 6, "generators": []})
    p = preset_from_dict({"fiber_dim": 6, "generators": [{"name": "t", "degree": 2}, {"name": "y", "degree": 3}]})
    assert p.base_generators[1].odd


def test_max_degree_env(monkeypatch):
    monkeypatch.delenv("MODULI_KAPPA_MAX_DEGREE", raising=False)
    assert max_kappa_degree() == 24
    monkeypatch.setenv("MODULI_KAPPA_MAX_DEGREE", "10")
    assert max_kappa_degree() == 10
    monkeypatch.setenv("MODULI_KAPPA_MAX_DEGREE", "ten")
    with pytest.raises(ValueError):
        max_kappa_degree()


def test_rewrite_kappa():
    n, g = 4, 3
    chi = 2 + 2 * g
    gens = wg_closed_generator_set(n, 12)
    kpe = gens.gen("k[p1 e]")
    assert rewrite_kappa("p1 e", n, g, 12) == kpe
    # each p1 becomes k[p1 e]/chi; a leftover Pontryagin number vanishes
    assert rewrite_kappa("p1^2 p2", n, g, 12).is_zero()
    assert rewrite_kappa("p1^2 e", n, g, 12) == Fraction(1, chi**2) * kpe**2 * chi
    assert rewrite_kappa("p1 p2 e", n, g, 12) == Fraction(1, chi) * kpe * gens.gen("k[p2 e]")
    with pytest.raises(ValueError, match="chi"):
        rewrite_kappa("p1 e", 3, 1, 8)
    assert full_bso_generators(4).names == ("p1", "p2", "e", "p3")
