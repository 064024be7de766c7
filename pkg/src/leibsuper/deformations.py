"""Linear deformations mu_0 + t*phi of Leibniz superalgebras.

Covers the integrability condition for a single even 2-cocycle, the three
one-parameter families built on the null-filiform algebras, equivalence of
infinitesimal deformations up to coboundaries, and the normal form of a
single-generated Leibniz algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import (
    IdentityViolation,
    NotNilpotentError,
    Parity,
    SuperAlgebra,
    change_basis,
    derived_square,
    generator_certificate,
    lower_central_series,
    right_powers,
)
from .catalog import nf_algebra, nf_superalgebra
from .cochains import Cochain, CohomologySpaces, cohomology, derivations, differential
from .linalg import Matrix, SparseVec, as_fraction, axpy, dense, solve
from .modules import adjoint_module

FAMILIES = ("mu", "nu", "eta")


class NotSingleGeneratedError(ValueError):
    pass


def _check_even_2cochain(a: SuperAlgebra, phi: Cochain) -> None:
    if phi.degree != 2 or phi.parity != Parity.EVEN:
        raise ValueError("expected an even 2-cochain")
    if phi.source_dims != (a.even_dim, a.odd_dim) or phi.target_dims != (a.even_dim, a.odd_dim):
        raise ValueError("cochain does not take values in the algebra itself")


def is_cocycle(a: SuperAlgebra, phi: Cochain) -> bool:
    return differential(a, adjoint_module(a), phi).is_zero()


@dataclass(frozen=True)
class Deformation:
    base: SuperAlgebra
    direction: Cochain
    t: Fraction = Fraction(1)

    def __post_init__(self):
        _check_even_2cochain(self.base, self.direction)
        object.__setattr__(self, "t", as_fraction(self.t))
        if not is_cocycle(self.base, self.direction):
            raise ValueError("deformation direction is not a 2-cocycle")


def deform(d: Deformation) -> SuperAlgebra:
    """The algebra with product mu_0 + t*phi (no identity check is made)."""
    table = d.base.table
    for key, vec in d.direction.items():
        acc = table.setdefault(key, {})
        axpy(acc, d.t, vec)
    return SuperAlgebra(d.base.even_dim, d.base.odd_dim, table)


def _phi_apply(phi: Cochain, u: SparseVec, v: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for i, a in u.items():
        for j, b in v.items():
            val = phi(i, j)
            if val:
                axpy(out, a * b, val)
    return out


def is_linearly_integrable(a: SuperAlgebra, phi: Cochain) -> tuple[bool, list[IdentityViolation]]:
    """Check phi(x, phi(y,z)) - phi(phi(x,y), z) + (-1)^{|y||z|} phi(phi(x,z), y) = 0.

    This is exactly the condition for mu_0 + t*phi to stay Leibniz for every t
    when phi is already a cocycle.
    """
    _check_even_2cochain(a, phi)
    par = a.parities
    one = Fraction(1)
    violations = []
    for x in range(a.dim):
        ex = {x: one}
        for y in range(a.dim):
            ey = {y: one}
            xy = phi(x, y)
            for z in range(a.dim):
                res = _phi_apply(phi, ex, phi(y, z))
                axpy(res, -one, _phi_apply(phi, xy, {z: one}))
                sign = -one if par[y] and par[z] else one
                axpy(res, sign, _phi_apply(phi, phi(x, z), ey))
                if res:
                    violations.append(IdentityViolation((x, y, z), tuple(dense(res, a.dim))))
    return (not violations, violations)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int
    params: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 2:
            raise ValueError("families need n >= 2")
        params = tuple(as_fraction(p) for p in self.params)
        if len(params) != self.n - 1:
            raise ValueError(f"{self.family} with n={self.n} takes {self.n - 1} parameters, got {len(params)}")
        object.__setattr__(self, "params", params)

    def coefficient(self, k: int) -> Fraction:
        """Parameter attached to index k, 2 <= k <= n."""
        return self.params[k - 2]


def family(fp: FamilyParams, t=1) -> SuperAlgebra:
    """mu_t, nu_t or eta_t with the given parameters."""
    t = as_fraction(t)
    n = fp.n
    c = {k: t * fp.coefficient(k) for k in range(2, n + 1)}
    if fp.family == "mu":
        base = nf_algebra(n)
        x = lambda i: i - 1  # noqa: E731
        extra = {(x(n), x(1)): {x(k): c[k] for k in c}}
    elif fp.family == "nu":
        base = nf_superalgebra(n, n)
        x = lambda i: i - 1  # noqa: E731
        y = lambda j: n + j - 1  # noqa: E731
        extra = {
            (x(n), y(1)): {y(k): c[k] for k in c},
            (y(n), x(1)): {y(k): 2 * c[k] for k in c},
            (x(n), x(1)): {x(k): 2 * c[k] for k in c},
        }
    else:
        base = nf_superalgebra(n, n + 1)
        x = lambda i: i - 1  # noqa: E731
        y = lambda j: n + j - 1  # noqa: E731
        extra = {
            (x(n), x(1)): {x(k): c[k] for k in c},
            (y(n + 1), x(1)): {y(k + 1): c[k] for k in c},
            (y(n + 1), y(1)): {x(k): c[k] for k in c},
        }
    table = base.table
    for key, vec in extra.items():
        axpy(table.setdefault(key, {}), Fraction(1), vec)
    return SuperAlgebra(base.even_dim, base.odd_dim, table)


@lru_cache(maxsize=32)
def _even_h2(a: SuperAlgebra) -> CohomologySpaces:
    return cohomology(a, adjoint_module(a), 2, Parity.EVEN)


def cohomologous(a: SuperAlgebra, phi1: Cochain, phi2: Cochain) -> bool:
    """True when phi1 - phi2 is a coboundary, i.e. the deformations are equivalent to first order."""
    for phi in (phi1, phi2):
        _check_even_2cochain(a, phi)
        if not is_cocycle(a, phi):
            raise ValueError("cohomologous() needs 2-cocycles")
    h2 = _even_h2(a)
    return h2.is_coboundary(phi1 - phi2)


def derivation_dim_of_family(fp: FamilyParams) -> int:
    if not any(fp.params):
        raise ValueError("all parameters are zero; use the catalog algebra")
    return derivations(family(fp, 1), Parity.EVEN).dim


def rational_root(q: Fraction, e: int) -> Fraction | None:
    """r in Q with r**e == q, or None when no rational root exists."""
    from sympy import integer_nthroot

    q = as_fraction(q)
    if e < 1:
        raise ValueError("root degree must be positive")
    if q < 0 and e % 2 == 0:
        return None
    sign = -1 if q < 0 else 1
    num, exact_n = integer_nthroot(abs(q.numerator), e)
    den, exact_d = integer_nthroot(q.denominator, e)
    if not (exact_n and exact_d):
        return None
    return sign * Fraction(int(num), int(den))


@dataclass(frozen=True)
class CanonicalForm:
    generator: int                     # basis index of the chosen generator
    basis: Matrix                      # columns: x, [x,x], [[x,x],x], ... in old coordinates
    params: tuple[Fraction, ...]       # a_2..a_n in that basis
    algebra: SuperAlgebra              # the input rewritten in that basis
    normalized: bool
    normalized_params: tuple[Fraction, ...] | None
    scale_note: str


def canonical_single_generated(a: SuperAlgebra) -> CanonicalForm:
    """Rewrite a single-generated Leibniz algebra as [x_i,x_1] = x_{i+1}, [x_n,x_1] = sum a_k x_k."""
    if a.odd_dim:
        raise ValueError("canonicalization is defined for algebras with trivial odd part")
    n = a.dim
    if n == 0:
        raise NotSingleGeneratedError("not single-generated")
    # mu_1(a) with a != 0 is not nilpotent, so a basis element whose powers
    # span is accepted as a generator without any nilpotency requirement.
    gen = next((i for i, det in generator_certificate(a) if det), None)
    if gen is None:
        # Without a certified basis generator, dim L/L^2 only decides
        # single-generatedness for nilpotent algebras.
        if not lower_central_series(a).nilpotent:
            raise NotNilpotentError("not nilpotent")
        sq = derived_square(a)
        if n - sq.dim != 1:
            raise NotSingleGeneratedError("not single-generated")
        gen = next(i for i in range(n) if not sq.contains({i: Fraction(1)}))
    powers = right_powers(a, {gen: Fraction(1)}, n)
    basis = Matrix.from_columns(n, powers)
    top = a.bracket(powers[-1], {gen: Fraction(1)})
    coords = solve(basis, dense(top, n))
    if coords is None:
        raise NotSingleGeneratedError(f"powers of {a.name(gen)} do not span the algebra")
    if coords[0] != 0:
        raise AssertionError("[x_n, x_1] has a nonzero x_1 component; input is not Leibniz")
    params = tuple(coords[1:])
    canonical = change_basis(a, basis)
    expected = family(FamilyParams("mu", n, params), 1) if n >= 2 else canonical
    if canonical != expected:
        raise AssertionError("rewritten table is not of normal form; input is not Leibniz")

    lead = next((k for k in range(2, n + 1) if params[k - 2]), None)
    if lead is None:
        return CanonicalForm(gen, basis, params, canonical, True, params, "all parameters vanish")
    a_j = params[lead - 2]
    e = n - lead + 1
    r = rational_root(a_j, e)
    note = f"x_i' = a_{lead}^(-i/{e}) x_i with a_{lead} = {a_j}"
    if r is None:
        return CanonicalForm(gen, basis, params, canonical, False, None,
                             note + f"; the root of order {e} is not rational")
    lam = 1 / r
    scaled = tuple(p * lam ** (n + 1 - k) for k, p in enumerate(params, start=2))
    return CanonicalForm(gen, basis, params, canonical, True, scaled, note + f"; scale factor {lam}")


def unimodular_matrix(n: int, rng, steps: int | None = None, blocks: Sequence[int] | None = None) -> Matrix:
    """Random integer matrix of determinant +-1 built from elementary operations.

    ``blocks`` gives the sizes of diagonal blocks that must not mix (parity
    blocks of a superalgebra).
    """
    blocks = list(blocks) if blocks is not None else [n]
    if sum(blocks) != n:
        raise ValueError("block sizes must add up to n")
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    start = 0
    for size in blocks:
        idx = list(range(start, start + size))
        start += size
        if size < 2:
            if size == 1 and rng.random() < 0.5:
                rows[idx[0]][idx[0]] = Fraction(-1)
            continue
        for _ in range(steps if steps is not None else 3 * size):
            i, j = rng.sample(idx, 2)
            c = rng.choice([-2, -1, 1, 2])
            rows[i] = [u + c * v for u, v in zip(rows[i], rows[j])]
        perm = idx[:]
        rng.shuffle(perm)
        shuffled = [rows[p] for p in perm]
        for k, p in zip(idx, shuffled):
            rows[k] = p
    return Matrix.from_rows(rows)
