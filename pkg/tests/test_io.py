from fractions import Fraction

import pytest

from leibsuper.catalog import nf_algebra, nf_superalgebra
from leibsuper.deformations import FamilyParams, family
from leibsuper.io import (
    SchemaError,
    algebra_from_doc,
    algebra_to_doc,
    cochain_from_doc,
    cochain_to_doc,
    digest,
    parse_rational,
)
from leibsuper.modules import Bimodule, adjoint_module
from leibsuper.named import nf_psi, super_psi

CATALOG = [nf_algebra(n) for n in range(1, 5)] + [nf_superalgebra(n, m) for n in range(1, 4) for m in (n, n + 1)] + [
    family(FamilyParams("mu", 3, (Fraction(1, 3), -2)), 1),
    family(FamilyParams("nu", 2, (Fraction(-5, 7),)), 1),
    family(FamilyParams("eta", 3, (1, 1)), Fraction(2, 9)),
]


@pytest.mark.parametrize("a", CATALOG)
def test_algebra_round_trip(a):
    doc = algebra_to_doc(a)
    b, mod = algebra_from_doc(doc)
    assert b == a and mod is None
    assert algebra_to_doc(b) == doc


def test_module_round_trip():
    a = nf_superalgebra(2, 2)
    doc = algebra_to_doc(a, adjoint_module(a))
    b, mod = algebra_from_doc(doc)
    assert mod == adjoint_module(b)
    triv = Bimodule(a, 1, 0, left={}, right={})
    _, mod2 = algebra_from_doc(algebra_to_doc(a, triv))
    assert mod2 == triv


@pytest.mark.parametrize("phi", [nf_psi(3, 1), super_psi(2, 3, 1, 1)])
def test_cochain_round_trip(phi):
    a = nf_algebra(3) if phi.source_dims == (3, 0) else nf_superalgebra(2, 3)
    assert cochain_from_doc(cochain_to_doc(phi), a) == phi


def test_rationals():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ["1.5", "3/0", "1e3", "", "x", 3, None, "1/-2"]:
        with pytest.raises(SchemaError):
            parse_rational(bad)


@pytest.mark.parametrize("doc", [
    [],
    {"even_dim": -1, "odd_dim": 0},
    {"even_dim": 2, "odd_dim": 0, "table": {}},
    {"even_dim": 2, "odd_dim": 0, "table": [{"left": "x1", "right": "x3", "value": {}}]},
    {"even_dim": 2, "odd_dim": 0, "table": [{"left": "x1", "right": "x1", "value": {"x2": 0.5}}]},
    {"even_dim": 1, "odd_dim": 1, "table": [{"left": "x1", "right": "x1", "value": {"y1": "1"}}]},
    {"even_dim": 2, "odd_dim": 0, "table": [{"left": "x1", "value": {"x2": "1"}}]},
    {"even_dim": 2, "odd_dim": 0, "module": []},
])
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        algebra_from_doc(doc)


def test_digest_is_key_order_independent():
    assert digest({"a": 1, "b": [1, 2]}) == digest({"b": [1, 2], "a": 1})
    assert digest({"a": 1}).startswith("sha256:")
