from fractions import Fraction

import pytest

from leibsuper.algebra import (
    NotNilpotentError,
    Parity,
    SuperAlgebra,
    abelian,
    change_basis,
    check_leibniz_superidentity,
    direct_sum,
    generator_certificate,
    is_leibniz,
    is_null_filiform,
    lower_central_series,
    minimal_generator_count,
    name_to_index,
)
from leibsuper.catalog import nf_algebra, nf_superalgebra
from leibsuper.deformations import FamilyParams, family
from leibsuper.linalg import Matrix

from conftest import small_catalog


def test_nf3_table():
    a = nf_algebra(3)
    assert a.describe() == ["[x1, x1] = x2", "[x2, x1] = x3"]


def test_nf1_is_abelian():
    assert nf_algebra(1) == abelian(1)


def test_nf_super_product_count():
    assert len(nf_superalgebra(2, 3).table) == 7
    assert len(nf_superalgebra(3, 3).table) == 3 + 2 + 2 + 2


@pytest.mark.parametrize("n,m", [(3, 5), (3, 2), (0, 0)])
def test_nf_super_rejects_bad_m(n, m):
    with pytest.raises(ValueError):
        nf_superalgebra(n, m)


def test_wrong_parity_product_rejected():
    with pytest.raises(ValueError, match="wrong parity"):
        SuperAlgebra.from_names(1, 1, {("x1", "x1"): {"y1": 1}})


def test_names():
    assert name_to_index("y2", 3, 2) == 4
    with pytest.raises(ValueError):
        name_to_index("y3", 3, 2)
    with pytest.raises(ValueError):
        name_to_index("x0", 3, 2)


@pytest.mark.parametrize("label,a", small_catalog())
def test_catalog_satisfies_identity(label, a):
    assert check_leibniz_superidentity(a) == []


def test_larger_catalog_satisfies_identity():
    assert is_leibniz(nf_algebra(5))
    assert is_leibniz(nf_superalgebra(3, 4))


def test_injected_product_breaks_identity():
    a = SuperAlgebra.from_names(3, 0, {("x1", "x1"): {"x2": 1}, ("x2", "x1"): {"x3": 1}, ("x1", "x3"): {"x1": 1}})
    violations = {v.indices: v.residual for v in check_leibniz_superidentity(a)}
    assert violations
    # [x1,[x1,x3]] - [[x1,x1],x3] + [[x1,x3],x1] = x2 - 0 + x2
    assert violations[(0, 0, 2)] == (0, 2, 0)


def test_odd_sign_matters():
    # Dropping the sign flip for two odd arguments must break NF^{1,1}.
    a = nf_superalgebra(2, 2)
    table = a.table
    table[(a.index("y1"), a.index("y1"))] = {a.index("x1"): Fraction(-1)}
    assert not is_leibniz(SuperAlgebra(2, 2, table))


def test_central_series_examples():
    assert lower_central_series(nf_algebra(4)).dims == (4, 3, 2, 1, 0)
    assert lower_central_series(nf_algebra(4)).nilindex == 5
    assert lower_central_series(nf_superalgebra(2, 3)).dims == (5, 4, 3, 2, 1, 0)
    rep = lower_central_series(abelian(3))
    assert rep.dims == (3, 0) and rep.nilindex == 2


def test_null_filiform():
    assert is_null_filiform(nf_algebra(6))
    assert is_null_filiform(nf_superalgebra(3, 4))
    assert not is_null_filiform(abelian(2))
    mu = family(FamilyParams("mu", 4, (0, 0, 1)), 1)
    rep = lower_central_series(mu)
    assert not rep.nilpotent and rep.dims[-1] > 0
    assert not is_null_filiform(mu)


def test_generator_counts():
    assert minimal_generator_count(nf_algebra(5)) == 1
    assert minimal_generator_count(abelian(3)) == 3
    assert minimal_generator_count(direct_sum(nf_algebra(2), nf_algebra(2))) == 2
    with pytest.raises(NotNilpotentError, match="not nilpotent"):
        minimal_generator_count(family(FamilyParams("mu", 3, (1, 0)), 1))


def test_generator_certificates():
    cert = dict(generator_certificate(nf_algebra(3)))
    assert cert[0] == 1 and cert[1] == 0 and cert[2] == 0
    mu = family(FamilyParams("mu", 3, (1, 0)), 1)
    # rows x1, x2, x3 once more: [x3, x1] = x2 does not enter the first three powers
    assert dict(generator_certificate(mu))[0] == 1
    with pytest.raises(ValueError):
        generator_certificate(nf_superalgebra(1, 1))


def test_change_basis_round_trip():
    a = nf_algebra(3)
    m = Matrix.from_rows([[1, 0, 0], [2, 1, 0], [0, 3, 1]])
    b = change_basis(a, m)
    assert is_leibniz(b)
    from leibsuper.linalg import inverse
    assert change_basis(b, inverse(m)) == a


def test_change_basis_refuses_parity_mixing():
    a = nf_superalgebra(1, 1)
    with pytest.raises(ValueError, match="mixes"):
        change_basis(a, Matrix.from_rows([[1, 1], [0, 1]]))


def test_parity_arithmetic():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert Parity.parse("odd") is Parity.ODD
    assert str(Parity.EVEN) == "even"
