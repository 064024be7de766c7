"""Command line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import os
import random
import sys
from fractions import Fraction
from typing import Callable

from . import __version__
from .algebra import (
    NotNilpotentError,
    Parity,
    check_leibniz_superidentity,
    is_null_filiform,
    lower_central_series,
)
from .catalog import nf_algebra, nf_superalgebra
from .cochains import CochainSpace, cohomology, differential
from .deformations import (
    FamilyParams,
    NotSingleGeneratedError,
    canonical_single_generated,
    family,
    is_linearly_integrable,
)
from .io import (
    SchemaError,
    algebra_from_doc,
    algebra_to_doc,
    cochain_from_doc,
    digest,
    dumps,
    format_rational,
    parse_rational,
)
from .modules import adjoint_module, check_module_axioms

MAX_DEGREE = 3
DEFAULT_CAPS = {"nf": 8, "nn": 6, "nn1": 6}
ALL_CHECKS = ("identity", "module", "nilpotent", "null-filiform", "dsquared")

EXPECTED: dict[str, Callable[[int], tuple[int, int, int]]] = {
    "nf": lambda n: (n * n - 1, n * n - n, n - 1),
    "nn": lambda n: (2 * n * n - 1, 2 * n * n - n, n - 1),
    "nn1": lambda n: (2 * n * n + 2 * n - 1, 2 * n * n + n, n - 1),
}


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _result(command: str, doc, payload: dict, ok: bool) -> dict:
    return {"command": command, "input_digest": digest(doc), "status": "ok" if ok else "fail",
            "payload": payload}


def _witness(residual) -> list[str]:
    return [format_rational(c) for c in residual]


def _cap(variant: str) -> int:
    env = os.environ.get("LEIBNIZ_DIM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError("LEIBNIZ_DIM_CAP must be an integer") from None
    return DEFAULT_CAPS[variant]


def _parse_params(text: str | None) -> list[Fraction]:
    if not text:
        return []
    try:
        return [parse_rational(p) for p in text.split(",")]
    except SchemaError as exc:
        raise UsageError(str(exc)) from None


# -- commands ----------------------------------------------------------------

def cmd_catalog(args) -> int:
    kind = args.kind
    try:
        if kind == "nf":
            a = nf_algebra(args.n)
        elif kind == "nf-super":
            if args.m is None:
                raise UsageError("nf-super needs --m")
            a = nf_superalgebra(args.n, args.m)
        else:
            t = parse_rational(args.t) if args.t is not None else Fraction(1)
            a = family(FamilyParams(kind, args.n, _parse_params(args.params)), t)
    except (ValueError, SchemaError) as exc:
        raise UsageError(str(exc)) from None
    _write(dumps(algebra_to_doc(a)), args.out)
    return 0


def cmd_cohomology(args) -> int:
    doc = _read_json(args.input)
    a, mod = algebra_from_doc(doc)
    if args.degree < 1:
        raise UsageError("degree must be at least 1")
    if args.degree > MAX_DEGREE and not args.force:
        raise UsageError(f"degree is capped at {MAX_DEGREE}; pass --force to override")
    violations = check_leibniz_superidentity(a)
    if violations:
        payload = {"reason": "input is not a Leibniz superalgebra",
                   "violations": [{"indices": [a.name(i) for i in v.indices], "residual": _witness(v.residual)}
                                  for v in violations[:20]]}
        _write(dumps(_result("cohomology", doc, payload, False)), args.out)
        return 1
    mod = mod or adjoint_module(a)
    h = cohomology(a, mod, args.degree, args.parity)
    payload = {"degree": args.degree, "parity": args.parity,
               "dim_cochains": h.space.dim, "dim_ZL": h.cocycles.dim,
               "dim_BL": h.coboundaries.dim, "dim_HL": h.hl_dim}
    if args.emit_basis:
        names, mnames = a.names(), mod.names()
        payload["cochain_basis"] = [
            "(" + ",".join(names[i] for i in inputs) + ")->" + mnames[o] for inputs, o in h.space.basis]
        payload["cocycle_basis"] = [[format_rational(c) for c in v] for v in h.cocycles.vectors]
        payload["coboundary_basis"] = [[format_rational(c) for c in v] for v in h.coboundaries.vectors]
    _write(dumps(_result("cohomology", doc, payload, True)), args.out)
    return 0


def _dsquared(a, mod, rng: random.Random, samples: int) -> dict:
    failures = 0
    tried = 0
    for k in (1, 2):
        for p in (Parity.EVEN, Parity.ODD):
            space = CochainSpace(a, mod, k, p)
            if not space.dim:
                continue
            for _ in range(samples):
                size = rng.randint(1, min(space.dim, 8))
                vec = {i: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                       for i in rng.sample(range(space.dim), size)}
                f = space.from_vector(vec)
                tried += 1
                if not differential(a, mod, differential(a, mod, f)).is_zero():
                    failures += 1
    return {"pass": failures == 0, "samples": tried, "failures": failures}


def cmd_verify(args) -> int:
    doc = _read_json(args.input)
    a, mod = algebra_from_doc(doc)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else list(ALL_CHECKS)
    results: dict[str, dict] = {}
    for check in checks:
        if check == "identity":
            v = check_leibniz_superidentity(a)
            results[check] = {"pass": not v, "violations": [
                {"indices": [a.name(i) for i in x.indices], "residual": _witness(x.residual)} for x in v[:20]]}
        elif check == "module":
            m = mod or adjoint_module(a)
            v = check_module_axioms(a, m)
            results[check] = {"pass": not v, "violations": [
                {"axiom": x.axiom, "indices": list(x.indices), "residual": _witness(x.residual)} for x in v[:20]]}
        elif check == "nilpotent":
            rep = lower_central_series(a)
            results[check] = {"pass": rep.nilpotent, "dims": list(rep.dims), "nilindex": rep.nilindex}
        elif check == "null-filiform":
            rep = lower_central_series(a)
            results[check] = {"pass": is_null_filiform(a), "dims": list(rep.dims)}
        elif check == "dsquared":
            results[check] = _dsquared(a, mod or adjoint_module(a), random.Random(args.seed), args.samples)
        elif check.startswith("integrable:"):
            phi = cochain_from_doc(_read_json(check.split(":", 1)[1]), a)
            try:
                ok, v = is_linearly_integrable(a, phi)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            cocycle = differential(a, adjoint_module(a), phi).is_zero()
            results[check] = {"pass": ok, "cocycle": cocycle, "violations": [
                {"indices": [a.name(i) for i in x.indices], "residual": _witness(x.residual)} for x in v[:20]]}
        else:
            raise UsageError(f"unknown check {check!r}")
    ok = all(r["pass"] for r in results.values())
    _write(dumps(_result("verify", doc, {"checks": results}, ok)), args.out)
    return 0 if ok else 1


def cmd_canonicalize(args) -> int:
    doc = _read_json(args.input)
    a, _ = algebra_from_doc(doc)
    if a.odd_dim:
        raise UsageError("canonicalize needs an algebra with trivial odd part")
    try:
        cf = canonical_single_generated(a)
    except (NotSingleGeneratedError, NotNilpotentError) as exc:
        _write(dumps(_result("canonicalize", doc, {"reason": str(exc)}, False)), args.out)
        return 1
    except AssertionError as exc:
        _write(dumps(_result("canonicalize", doc, {"reason": str(exc)}, False)), args.out)
        return 1
    payload = {
        "generator": a.name(cf.generator),
        "basis": [[format_rational(cf.basis[r, c]) for r in range(a.dim)] for c in range(a.dim)],
        "params": [format_rational(p) for p in cf.params],
        "normalized": cf.normalized,
        "normalized_params": None if cf.normalized_params is None else [format_rational(p) for p in cf.normalized_params],
        "scale_note": cf.scale_note,
        "canonical": algebra_to_doc(cf.algebra),
    }
    _write(dumps(_result("canonicalize", doc, payload, True)), args.out)
    return 0


def _table_algebra(variant: str, n: int):
    if variant == "nf":
        return nf_algebra(n)
    return nf_superalgebra(n, n if variant == "nn" else n + 1)


def cmd_table(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError("need 1 <= n-min <= n-max")
    cap = _cap(args.variant)
    if args.n_max > cap and not args.force:
        raise UsageError(f"n-max {args.n_max} exceeds the cap {cap} for {args.variant}; pass --force")
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        a = _table_algebra(args.variant, n)
        z, b, h = cohomology(a, adjoint_module(a), 2, Parity.EVEN).dims
        ez, eb, eh = EXPECTED[args.variant](n)
        rows.append({"n": n, "dim_ZL2": z, "dim_BL2": b, "dim_HL2": h,
                     "expected_ZL2": ez, "expected_BL2": eb, "expected_HL2": eh,
                     "match": (z, b, h) == (ez, eb, eh)})
    ok = all(r["match"] for r in rows)
    if args.format == "json":
        request = {"variant": args.variant, "n_min": args.n_min, "n_max": args.n_max}
        text = dumps(_result("table", request, {"variant": args.variant, "rows": rows}, ok))
    elif args.format == "csv":
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        cols = list(rows[0])
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        lines += ["| " + " | ".join(str(r[c]).lower() if isinstance(r[c], bool) else str(r[c]) for c in cols) + " |"
                  for r in rows]
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leibsuper", description="Loday cohomology and deformations of Leibniz superalgebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", help="write a catalog algebra as JSON")
    p.add_argument("kind", choices=["nf", "nf-super", "mu", "nu", "eta"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--params", help="comma-separated rationals, e.g. 1,2/3")
    p.add_argument("--t", help="deformation parameter (rational string)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("cohomology", help="dimensions (and bases) of ZL, BL, HL")
    p.add_argument("input", help="algebra JSON file, or - for stdin")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--parity", choices=["even", "odd"], default="even")
    p.add_argument("--emit-basis", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", help="run identity/module/nilpotency/d^2/integrability checks")
    p.add_argument("input")
    p.add_argument("--checks", help="comma-separated subset of " + ", ".join(ALL_CHECKS) + ", integrable:<file>")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canonicalize", help="normal form of a single-generated Leibniz algebra")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("table", help="degree-2 even cohomology dimensions over a range of n")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--variant", choices=["nf", "nn", "nn1"], default="nf")
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SchemaError) as exc:
        print(f"leibsuper: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
