"""Z2-graded algebras given by structure constants.

Basis indices ``0..n-1`` are the even elements ``x1..xn`` and ``n..n+m-1`` the
odd elements ``y1..ym``.  Products are right Leibniz: right multiplication by
any element is a (super)derivation, i.e.

    [x, [y, z]] = [[x, y], z] - (-1)^{|y||z|} [[x, z], y].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    Matrix,
    SparseVec,
    VectorSpaceBasis,
    as_fraction,
    axpy,
    dense,
    determinant,
    inverse,
    sparse,
)


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @classmethod
    def parse(cls, value) -> Parity:
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("even", "0"):
                return cls.EVEN
            if key in ("odd", "1"):
                return cls.ODD
            raise ValueError(f"unknown parity {value!r}")
        return cls(int(value) % 2)

    def __str__(self) -> str:
        return self.name.lower()


_NAME_RE = re.compile(r"^([xy])([1-9][0-9]*)$")


def basis_names(even_dim: int, odd_dim: int) -> list[str]:
    return [f"x{i}" for i in range(1, even_dim + 1)] + [f"y{j}" for j in range(1, odd_dim + 1)]


def name_to_index(name: str, even_dim: int, odd_dim: int) -> int:
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"bad basis name {name!r}")
    k = int(m.group(2))
    if m.group(1) == "x":
        if k > even_dim:
            raise ValueError(f"{name} exceeds even dimension {even_dim}")
        return k - 1
    if k > odd_dim:
        raise ValueError(f"{name} exceeds odd dimension {odd_dim}")
    return even_dim + k - 1


class GradedSpace:
    """Shared bookkeeping for anything with an even part and an odd part."""

    even_dim: int
    odd_dim: int

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    def parity(self, i: int) -> Parity:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return Parity.EVEN if i < self.even_dim else Parity.ODD

    @property
    def parities(self) -> tuple[int, ...]:
        return (0,) * self.even_dim + (1,) * self.odd_dim

    def names(self) -> list[str]:
        return basis_names(self.even_dim, self.odd_dim)

    def name(self, i: int) -> str:
        return self.names()[i]

    def index(self, name: str) -> int:
        return name_to_index(name, self.even_dim, self.odd_dim)

    def block(self, p: Parity | int) -> range:
        return range(0, self.even_dim) if int(p) == 0 else range(self.even_dim, self.dim)

    def vector_parity(self, v: Mapping[int, Fraction]) -> Parity | None:
        """Parity of a homogeneous sparse vector; None if mixed, EVEN for zero."""
        ps = {self.parities[i] for i, c in v.items() if c}
        if len(ps) > 1:
            return None
        return Parity(ps.pop()) if ps else Parity.EVEN


def _clean_table(table, dim: int) -> dict[tuple[int, int], SparseVec]:
    out = {}
    for (i, j), vec in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"product index ({i}, {j}) outside basis of size {dim}")
        if not isinstance(vec, Mapping):
            if len(vec) != dim:
                raise ValueError(f"product ({i}, {j}) has wrong length")
            vec = sparse(vec)
        kept = {}
        for k, c in vec.items():
            if not 0 <= k < dim:
                raise ValueError(f"product ({i}, {j}) has component {k} outside basis")
            c = as_fraction(c)
            if c:
                kept[k] = c
        if kept:
            out[(i, j)] = kept
    return out


class SuperAlgebra(GradedSpace):
    """Finite-dimensional superalgebra; omitted products are zero.

    ``table[(i, j)]`` is the sparse expansion of ``[e_i, e_j]``.  Construction
    rejects any product whose support is not of parity ``|e_i| + |e_j|``.
    """

    def __init__(self, even_dim: int, odd_dim: int = 0,
                 table: Mapping[tuple[int, int], Mapping[int, Fraction] | Sequence] | None = None):
        if even_dim < 0 or odd_dim < 0:
            raise ValueError("dimensions must be non-negative")
        self.even_dim = even_dim
        self.odd_dim = odd_dim
        self._table = _clean_table(table or {}, self.dim)
        par = self.parities
        for (i, j), vec in self._table.items():
            want = par[i] ^ par[j]
            bad = [k for k in vec if par[k] != want]
            if bad:
                raise ValueError(
                    f"[{self.name(i)}, {self.name(j)}] has components {[self.name(k) for k in bad]} "
                    f"of the wrong parity")
        self._preimages = None

    @classmethod
    def from_names(cls, even_dim: int, odd_dim: int,
                   products: Mapping[tuple[str, str], Mapping[str, object]]) -> SuperAlgebra:
        table = {}
        for (a, b), val in products.items():
            i, j = name_to_index(a, even_dim, odd_dim), name_to_index(b, even_dim, odd_dim)
            vec = table.setdefault((i, j), {})
            for name, c in val.items():
                k = name_to_index(name, even_dim, odd_dim)
                vec[k] = vec.get(k, 0) + as_fraction(c)
        return cls(even_dim, odd_dim, table)

    @property
    def table(self) -> dict[tuple[int, int], SparseVec]:
        return {key: dict(v) for key, v in self._table.items()}

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        return self._table.get((i, j), {})

    def preimages(self, k: int) -> list[tuple[int, int, Fraction]]:
        """All ``(i, j, c)`` with ``c`` the coefficient of ``e_k`` in ``[e_i, e_j]``."""
        if self._preimages is None:
            pre: dict[int, list] = {}
            for (i, j), vec in sorted(self._table.items()):
                for kk, c in vec.items():
                    pre.setdefault(kk, []).append((i, j, c))
            self._preimages = pre
        return self._preimages.get(k, [])

    def bracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = self._table.get((i, j))
                if prod:
                    axpy(out, a * b, prod)
        return out

    def product(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Bilinear product of two dense coordinate vectors."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return dense(self.bracket(sparse(u), sparse(v)), self.dim)

    def structure_constants(self) -> list[list[list[Fraction]]]:
        """Dense ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""
        return [[dense(self.bracket_basis(i, j), self.dim) for j in range(self.dim)]
                for i in range(self.dim)]

    def is_abelian(self) -> bool:
        return not self._table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.even_dim, self.odd_dim, self._table) == (other.even_dim, other.odd_dim, other._table)

    def __hash__(self) -> int:
        return hash((self.even_dim, self.odd_dim, tuple(sorted(
            (k, tuple(sorted(v.items()))) for k, v in self._table.items()))))

    def __repr__(self) -> str:
        return f"SuperAlgebra(even_dim={self.even_dim}, odd_dim={self.odd_dim}, products={len(self._table)})"

    def describe(self) -> list[str]:
        """Human-readable product lines, e.g. ``[x1, x1] = x2``."""
        names = self.names()
        lines = []
        for (i, j), vec in sorted(self._table.items()):
            terms = " + ".join(f"{c}*{names[k]}" if c != 1 else names[k] for k, c in sorted(vec.items()))
            lines.append(f"[{names[i]}, {names[j]}] = {terms}")
        return lines


@dataclass(frozen=True)
class IdentityViolation:
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]


def check_leibniz_superidentity(a: SuperAlgebra) -> list[IdentityViolation]:
    """Basis triples where [x,[y,z]] - [[x,y],z] + (-1)^{|y||z|}[[x,z],y] != 0."""
    par = a.parities
    basis = [{i: Fraction(1)} for i in range(a.dim)]
    violations = []
    for x in range(a.dim):
        for y in range(a.dim):
            xy = a.bracket_basis(x, y)
            for z in range(a.dim):
                res = a.bracket(basis[x], a.bracket_basis(y, z))
                axpy(res, Fraction(-1), a.bracket(xy, basis[z]))
                sign = -1 if par[y] and par[z] else 1
                axpy(res, Fraction(sign), a.bracket(a.bracket_basis(x, z), basis[y]))
                if res:
                    violations.append(IdentityViolation((x, y, z), tuple(dense(res, a.dim))))
    return violations


def is_leibniz(a: SuperAlgebra) -> bool:
    return not check_leibniz_superidentity(a)


@dataclass(frozen=True)
class CentralSeriesReport:
    dims: tuple[int, ...]
    nilindex: int | None  # None: not nilpotent

    @property
    def nilpotent(self) -> bool:
        return self.nilindex is not None


def _bracket_span(a: SuperAlgebra, left: VectorSpaceBasis) -> VectorSpaceBasis:
    """Span of [u, e_j] over the basis vectors u of ``left``."""
    vecs = []
    for u in left.sparse_vectors():
        for j in range(a.dim):
            vecs.append(a.bracket(u, {j: Fraction(1)}))
    return VectorSpaceBasis(a.dim, vecs)


def lower_central_series(a: SuperAlgebra) -> CentralSeriesReport:
    current = VectorSpaceBasis(a.dim, ({i: Fraction(1)} for i in range(a.dim)))
    dims = [current.dim]
    # The series is strictly decreasing until it stabilizes, so dim+1 steps suffice.
    for _ in range(a.dim + 1):
        if current.dim == 0:
            return CentralSeriesReport(tuple(dims), len(dims))
        nxt = _bracket_span(a, current)
        if nxt.dim == current.dim:
            return CentralSeriesReport(tuple(dims), None)
        dims.append(nxt.dim)
        current = nxt
    raise AssertionError("central series failed to stabilize")


def derived_square(a: SuperAlgebra) -> VectorSpaceBasis:
    """L^2 = [L, L]."""
    return VectorSpaceBasis(a.dim, (a.bracket_basis(i, j) for i in range(a.dim) for j in range(a.dim)))


def is_null_filiform(a: SuperAlgebra) -> bool:
    return lower_central_series(a).dims == tuple(range(a.dim, -1, -1))


class NotNilpotentError(ValueError):
    pass


def minimal_generator_count(a: SuperAlgebra) -> int:
    """dim L/L^2, which is the minimal number of generators of a nilpotent algebra."""
    if not lower_central_series(a).nilpotent:
        raise NotNilpotentError("not nilpotent")
    return a.dim - derived_square(a).dim


def right_powers(a: SuperAlgebra, x: Mapping[int, Fraction], count: int) -> list[SparseVec]:
    """x, [x,x], [[x,x],x], ... (``count`` terms)."""
    powers = [dict(x)]
    while len(powers) < count:
        powers.append(a.bracket(powers[-1], x))
    return powers


def generator_certificate(a: SuperAlgebra) -> list[tuple[int, Fraction]]:
    """For each e_i, det of the matrix with rows e_i, e_i^2, ..., e_i^n."""
    if a.odd_dim:
        raise ValueError("generator certificates are defined for algebras with trivial odd part")
    n = a.dim
    out = []
    for i in range(n):
        rows = right_powers(a, {i: Fraction(1)}, n)
        out.append((i, determinant(Matrix(n, n, dict(enumerate(rows))))))
    return out


def change_basis(a: SuperAlgebra, new_basis: Matrix) -> SuperAlgebra:
    """Rewrite ``a`` in the basis whose i-th vector is column i of ``new_basis``.

    The matrix must be invertible and map each parity block to itself.
    """
    n = a.dim
    if new_basis.rows != n or new_basis.cols != n:
        raise ValueError("basis change matrix has the wrong shape")
    par = a.parities
    for r, row in new_basis.sparse_rows():
        for c in row:
            if par[r] != par[c]:
                raise ValueError("basis change mixes even and odd parts")
    inv = inverse(new_basis)
    cols = [dict(col) for _, col in _columns(new_basis)]
    table = {}
    for i in range(n):
        for j in range(n):
            prod = a.bracket(cols[i], cols[j])
            if prod:
                new = {}
                for r, row in inv.sparse_rows():
                    s = sum((v * prod[c] for c, v in row.items() if c in prod), Fraction(0))
                    if s:
                        new[r] = s
                if new:
                    table[(i, j)] = new
    return SuperAlgebra(a.even_dim, a.odd_dim, table)


def _columns(m: Matrix):
    t = m.transpose()
    for c in range(m.cols):
        yield c, t.row(c)


def direct_sum(first: SuperAlgebra, second: SuperAlgebra) -> SuperAlgebra:
    """First algebra's even basis, second's even basis, then the odd parts likewise."""
    n1, m1, n2, m2 = first.even_dim, first.odd_dim, second.even_dim, second.odd_dim

    def remap(alg, k):
        if alg is first:
            return k if k < n1 else n1 + n2 + (k - n1)
        return n1 + k if k < n2 else n1 + n2 + m1 + (k - n2)

    table = {}
    for alg in (first, second):
        for (i, j), vec in alg.table.items():
            table[(remap(alg, i), remap(alg, j))] = {remap(alg, k): c for k, c in vec.items()}
    return SuperAlgebra(n1 + n2, m1 + m2, table)


def abelian(even_dim: int, odd_dim: int = 0) -> SuperAlgebra:
    return SuperAlgebra(even_dim, odd_dim, {})

