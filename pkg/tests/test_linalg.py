import importlib
import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from moduli_kappa import _echelon_py, linalg
from moduli_kappa.serre_kernel import d3_matrix, mg_spec, vd_spec

try:
    from moduli_kappa import _echelon
except ImportError:  # extension not built
    _echelon = None

needs_ext = pytest.mark.skipif(_echelon is None, reason="compiled extension not built")

small = st.integers(-6, 6)


@st.composite
def matrices(draw, max_rows=7, max_cols=7, elements=small):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(elements, min_size=c, max_size=c)) for _ in range(r)], c


def _check_rref_shape(rows, pivots, ncols):
    for r, c in enumerate(pivots):
        assert rows[r][c] > 0
        for i in range(len(rows)):
            if i != r:
                assert rows[i][c] == 0
    for row in rows[len(pivots):]:
        assert not any(row)


@given(matrices())
def test_rank_and_nullspace_match_sympy(mc):
    m, c = mc
    want = sp.Matrix(m) if m else sp.zeros(0, c)
    assert linalg.rank(m, c) == (want.rank() if m else 0)
    basis, free, rk = linalg.nullspace(m, c)
    assert len(basis) == c - rk
    for v in basis:
        for row in m:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    if m:
        assert len(basis) == len(want.nullspace())


@given(matrices())
def test_python_backend_shape(mc):
    m, c = mc
    rows = [list(r) for r in m]
    pivots = _echelon_py.rref_int(rows, c)
    _check_rref_shape(rows, pivots, c)


@needs_ext
@given(matrices(elements=st.integers(-(2**70), 2**70)))
def test_backends_identical_on_big_entries(mc):
    m, c = mc
    a, b = [list(r) for r in m], [list(r) for r in m]
    assert _echelon.rref_int(a, c) == _echelon_py.rref_int(b, c)
    assert a == b


@needs_ext
@given(matrices(max_rows=10, max_cols=10, elements=st.integers(-(2**40), 2**40)))
def test_backends_identical_near_overflow(mc):
    m, c = mc
    a, b = [list(r) for r in m], [list(r) for r in m]
    assert _echelon.rref_int(a, c) == _echelon_py.rref_int(b, c)
    assert a == b


@needs_ext
def test_backends_identical_on_d3_matrices():
    for spec in (vd_spec(5, 10), mg_spec(3, 10)):
        for k in (4, 6, 8, 10):
            ints = linalg.integer_rows(d3_matrix(spec, k))
            ncols = len(ints[0])
            a, b = [list(r) for r in ints], [list(r) for r in ints]
            assert _echelon.rref_int(a, ncols) == _echelon_py.rref_int(b, ncols)
            assert a == b


@needs_ext
def test_int64_boundary_values():
    big = 2**63 - 1
    for m in ([[big, 1], [1, big]], [[-big, 3], [big, -7]], [[2**62, 2**62 + 1], [3, 5]]):
        a, b = [list(r) for r in m], [list(r) for r in m]
        assert _echelon.rref_int(a, 2) == _echelon_py.rref_int(b, 2)
        assert a == b


def test_rational_rref():
    rows, pivots = linalg.rref([[Fraction(1, 2), 1], [1, 2]], 2)
    assert pivots == [0]
    assert rows == [[1, 2]]


def test_reduced_basis_coordinates():
    basis, free, _ = linalg.nullspace([[1, 1, 1]], 3)
    rb = linalg.ReducedBasis(tuple(map(tuple, basis)), tuple(free))
    assert rb.coordinates([-5, 2, 3]) == [2, 3]
    assert rb.coordinates([1, 1, 1]) is None
    assert linalg.span_contains(basis, [-5, 2, 3])
    assert not linalg.span_contains([], [0, 1, 0])


def test_row_length_checked():
    with pytest.raises(ValueError):
        linalg.rank([[1, 2], [1]], 2)


def test_pure_python_env_switch(monkeypatch):
    monkeypatch.setenv("MODULI_KAPPA_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(linalg)
        assert mod.BACKEND == "python"
        rng = random.Random(3)
        m = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(5)]
        assert mod.rank(m, 6) == sp.Matrix(m).rank()
    finally:
        monkeypatch.delenv("MODULI_KAPPA_PURE_PYTHON")
        importlib.reload(linalg)
