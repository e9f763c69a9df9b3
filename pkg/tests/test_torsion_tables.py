import pytest
from hypothesis import given
from hypothesis import strategies as st

from moduli_kappa.torsion_tables import FinAbGroup, direct_sum, gamma_ab, mt_theta_pi1

groups = st.lists(st.integers(0, 30), max_size=5).map(lambda fs: FinAbGroup(tuple(fs)))


@given(groups, groups, groups)
def test_direct_sum_laws(a, b, c):
    assert direct_sum(a, b) == direct_sum(b, a)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert direct_sum(a, FinAbGroup()) == a


@given(groups, groups)
def test_order_is_multiplicative(a, b):
    s = direct_sum(a, b)
    if a.is_finite and b.is_finite:
        assert s.order == a.order * b.order
    else:
        assert s.order is None


def test_direct_sum_examples():
    assert direct_sum(FinAbGroup.of(2), FinAbGroup()) == FinAbGroup.of(2)
    assert direct_sum(FinAbGroup.of(2), FinAbGroup.of(4)).cyclic_factors == (2, 4)
    assert direct_sum(FinAbGroup.of(0), FinAbGroup.of(3)).cyclic_factors == (3, 0)
    assert FinAbGroup.of(1, 1) == FinAbGroup()


def test_presentation_vs_isomorphism():
    assert FinAbGroup.of(6) != FinAbGroup.of(2, 3)
    assert FinAbGroup.of(6).isomorphic(FinAbGroup.of(2, 3))
    assert not FinAbGroup.of(4).isomorphic(FinAbGroup.of(2, 2))
    assert FinAbGroup.of(12, 0).primary_decomposition() == (3, 4, 0)


def test_pi1_table():
    want = ["0", "(Z/2)^2", "0", "(Z/2)^4", "Z/4", "(Z/2)^2 + Z/3", "Z/2"]
    assert [str(mt_theta_pi1(n)) for n in range(1, 8)] == want
    with pytest.raises(ValueError):
        mt_theta_pi1(8)


@pytest.mark.parametrize(
    "example, p, text",
    [
        ("lens", 2, "Z/2 + Z/4"),
        ("lens", 3, "Z/3 + Z/9"),
        ("lens", 5, "(Z/5)^3"),
        ("lens", 13, "(Z/13)^3"),
        ("quaternion-Q8", None, "(Z/2)^2 + (Z/4)^2 + Z/64"),
        ("poincare-sphere", None, "(Z/5)^2 + Z/9 + Z/64"),
    ],
)
def test_gamma_ab_examples(example, p, text):
    res = gamma_ab(example, p)
    assert str(res.group) == text
    assert res.group.order == res.g_ab.order * res.ko7.order
    assert res.citation.startswith("imported data")


def test_gamma_ab_errors():
    with pytest.raises(ValueError, match="prime"):
        gamma_ab("lens", 9)
    with pytest.raises(ValueError, match="unknown"):
        gamma_ab("dodecahedral")
    with pytest.raises(ValueError, match="genus"):
        gamma_ab("quaternion-Q8", genus=6)
    with pytest.raises(ValueError):
        FinAbGroup.of(-2)
