"""JSON documents for algebras, bimodules and cochains.

Algebra document::

    {"even_dim": 3, "odd_dim": 0,
     "table": [{"left": "x1", "right": "x1", "value": {"x2": "1"}}, ...],
     "module": {"even_dim": .., "odd_dim": .., "left": [...], "right": [...]}}

``module`` is optional.  In its ``left`` entries ``left`` names an algebra
element and ``right`` a module element; ``right`` entries are the other way
round.  Module elements use the same x/y naming.  Cochain documents carry
``degree`` and ``parity`` next to ``even_dim``/``odd_dim``; degree-2 entries use
``left``/``right``, any degree may use ``"args": [...]``.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .algebra import SuperAlgebra, basis_names, name_to_index
from .cochains import Cochain
from .modules import Bimodule

_RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


class SchemaError(ValueError):
    """The document does not follow the schema."""


def parse_rational(text: Any) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise SchemaError(f"not a rational string: {text!r}")
    s = text.strip()
    if "/" in s and int(s.split("/")[1]) == 0:
        raise SchemaError(f"zero denominator in {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def _dim(doc: Mapping, key: str) -> int:
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise SchemaError(f"{key} must be a non-negative integer")
    return v


def _index(name: Any, dims: tuple[int, int]) -> int:
    if not isinstance(name, str):
        raise SchemaError(f"basis name must be a string, got {name!r}")
    try:
        return name_to_index(name, *dims)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def _value(val: Any, dims: tuple[int, int]) -> dict[int, Fraction]:
    if not isinstance(val, Mapping):
        raise SchemaError("value must be an object mapping basis names to rationals")
    out: dict[int, Fraction] = {}
    for name, c in val.items():
        k = _index(name, dims)
        out[k] = out.get(k, Fraction(0)) + parse_rational(c)
    return out


def _entries(entries: Any, left_dims, right_dims, out_dims) -> dict[tuple[int, int], dict[int, Fraction]]:
    if not isinstance(entries, list):
        raise SchemaError("table must be a list")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for e in entries:
        if not isinstance(e, Mapping) or not {"left", "right", "value"} <= set(e):
            raise SchemaError("table entries need left, right and value")
        key = (_index(e["left"], left_dims), _index(e["right"], right_dims))
        acc = table.setdefault(key, {})
        for k, c in _value(e["value"], out_dims).items():
            acc[k] = acc.get(k, Fraction(0)) + c
    return table


def _emit_entries(table: Mapping[tuple[int, int], Mapping[int, Fraction]], left_names, right_names, out_names):
    return [{"left": left_names[i], "right": right_names[j],
             "value": {out_names[k]: format_rational(c) for k, c in sorted(vec.items())}}
            for (i, j), vec in sorted(table.items())]


def algebra_from_doc(doc: Any) -> tuple[SuperAlgebra, Bimodule | None]:
    if not isinstance(doc, Mapping):
        raise SchemaError("algebra document must be a JSON object")
    dims = (_dim(doc, "even_dim"), _dim(doc, "odd_dim"))
    table = _entries(doc.get("table", []), dims, dims, dims)
    try:
        a = SuperAlgebra(*dims, table)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    mod = None
    if "module" in doc:
        block = doc["module"]
        if not isinstance(block, Mapping):
            raise SchemaError("module must be an object")
        mdims = (_dim(block, "even_dim"), _dim(block, "odd_dim"))
        left = _entries(block.get("left", []), dims, mdims, mdims)
        right = _entries(block.get("right", []), mdims, dims, mdims)
        try:
            mod = Bimodule(a, *mdims, left=left, right=right)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    return a, mod


def algebra_to_doc(a: SuperAlgebra, mod: Bimodule | None = None) -> dict:
    names = a.names()
    doc = {"even_dim": a.even_dim, "odd_dim": a.odd_dim,
           "table": _emit_entries(a.table, names, names, names)}
    if mod is not None:
        mnames = mod.names()
        doc["module"] = {"even_dim": mod.even_dim, "odd_dim": mod.odd_dim,
                         "left": _emit_entries(mod.left, names, mnames, mnames),
                         "right": _emit_entries(mod.right, mnames, names, mnames)}
    return doc


def cochain_from_doc(doc: Any, a: SuperAlgebra) -> Cochain:
    """Read an adjoint-valued cochain on ``a``."""
    if not isinstance(doc, Mapping):
        raise SchemaError("cochain document must be a JSON object")
    dims = (_dim(doc, "even_dim"), _dim(doc, "odd_dim"))
    if dims != (a.even_dim, a.odd_dim):
        raise SchemaError(f"cochain is for dimensions {dims}, algebra has {(a.even_dim, a.odd_dim)}")
    degree = _dim(doc, "degree")
    parity = doc.get("parity", "even")
    if parity not in ("even", "odd"):
        raise SchemaError("parity must be 'even' or 'odd'")
    entries = doc.get("table", [])
    if not isinstance(entries, list):
        raise SchemaError("table must be a list")
    values: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for e in entries:
        if not isinstance(e, Mapping) or "value" not in e:
            raise SchemaError("cochain entries need a value")
        if "args" in e:
            if not isinstance(e["args"], list):
                raise SchemaError("args must be a list of basis names")
            args = tuple(_index(s, dims) for s in e["args"])
        elif {"left", "right"} <= set(e):
            args = (_index(e["left"], dims), _index(e["right"], dims))
        else:
            raise SchemaError("cochain entries need left/right or args")
        if len(args) != degree:
            raise SchemaError(f"entry {e} does not have {degree} arguments")
        acc = values.setdefault(args, {})
        for k, c in _value(e["value"], dims).items():
            acc[k] = acc.get(k, Fraction(0)) + c
    try:
        return Cochain(a, a, degree, parity, values)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def cochain_to_doc(f: Cochain) -> dict:
    src = basis_names(*f.source_dims)
    tgt = basis_names(*f.target_dims)
    entries = []
    for args, vec in sorted(f.items()):
        value = {tgt[k]: format_rational(c) for k, c in sorted(vec.items())}
        if f.degree == 2:
            entries.append({"left": src[args[0]], "right": src[args[1]], "value": value})
        else:
            entries.append({"args": [src[i] for i in args], "value": value})
    return {"degree": f.degree, "parity": str(f.parity),
            "even_dim": f.source_dims[0], "odd_dim": f.source_dims[1], "table": entries}


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def digest(doc: Any) -> str:
    canon = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()
