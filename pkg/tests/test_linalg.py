from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibsuper.catalog import nf_algebra
from leibsuper.cochains import differential_matrix
from leibsuper.linalg import (
    Matrix,
    RowReducer,
    VectorSpaceBasis,
    as_fraction,
    column_space_basis,
    determinant,
    in_span,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
)
from leibsuper.modules import adjoint_module

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, cols=c)


def test_rref_duplicate_row():
    r, piv = rref(Matrix.from_rows([[1, 2], [2, 4]]))
    assert r.to_lists() == [[1, 2], [0, 0]]
    assert piv == [0]


def test_rref_identity():
    r, piv = rref(Matrix.identity(3))
    assert r == Matrix.identity(3)
    assert piv == [0, 1, 2]


def test_rank_trivial():
    assert rank(Matrix.zeros(4, 4)) == 0
    assert rank(Matrix.identity(5)) == 5


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k.dim == 1
    v = k.vectors[0]
    assert v[0] + v[1] == 0 and v != [0, 0]


def test_in_span_examples():
    b = VectorSpaceBasis(2, [[1, 0]])
    assert in_span(b, [3, 0])
    assert not in_span(b, [0, 1])
    with pytest.raises(ValueError):
        in_span(b, [1, 0, 0])


def test_d2_of_nf3_has_19_pivots():
    a = nf_algebra(3)
    _, piv = rref(differential_matrix(a, adjoint_module(a), 2, 0))
    assert len(piv) == 19


def test_d1_of_nf4_has_rank_12():
    a = nf_algebra(4)
    assert rank(differential_matrix(a, adjoint_module(a), 1, 0)) == 12


def test_floats_refused():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("3/6") == Fraction(1, 2)


def test_inverse_and_determinant():
    m = Matrix.from_rows([[2, 1], [7, 4]])
    assert determinant(m) == 1
    assert m @ inverse(m) == Matrix.identity(2)
    with pytest.raises(ValueError):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, [1, 2]) is None
    x = solve(m, [2, 2])
    assert m.apply(x) == [2, 2]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert (r2, piv2) == (r, piv)
    assert piv == sorted(piv)
    for i, p in enumerate(piv):
        assert r[i, p] == 1
        assert all(r[k, p] == 0 for k in range(r.rows) if k != i)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())
    assert rank(m) == column_space_basis(m).dim


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_property(m):
    k = kernel_basis(m)
    assert k.dim + rank(m) == m.cols
    for v in k.vectors:
        assert all(c == 0 for c in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(), st.permutations(range(4)))
def test_rref_is_deterministic_in_row_order(m, perm):
    rows = m.to_lists()
    order = [p for p in perm if p < len(rows)] + list(range(4, len(rows)))
    shuffled = Matrix.from_rows([rows[i] for i in order], cols=m.cols)
    assert rref(shuffled) == rref(m)


def test_row_reducer_reports_dependence():
    rr = RowReducer(3)
    assert rr.insert({0: Fraction(1), 1: Fraction(2)})
    assert not rr.insert({0: Fraction(2), 1: Fraction(4)})
    assert rr.rank == 1
