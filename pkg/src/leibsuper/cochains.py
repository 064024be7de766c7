"""The graded Loday cochain complex of a Leibniz superalgebra.

A k-cochain of parity p is a multilinear map L^{(x)k} -> M that sends a basis
tuple with parities |x_1|+...+|x_k| into M_{|x_1|+...+|x_k|+p}.  Cochains are
unrestricted multilinear maps (no skew-symmetrization).  The differential is

    (d f)(x_1, ..., x_{k+1}) =
        [x_1, f(x_2, ..., x_{k+1})]
      + sum_{i=2}^{k+1} (-1)^{i + |x_i|(|f| + |x_{i+1}| + ... + |x_{k+1}|)}
            [f(x_1, ..., ^x_i, ..., x_{k+1}), x_i]
      + sum_{i<j} (-1)^{j+1 + |x_j|(|x_{i+1}| + ... + |x_{j-1}|)}
            f(x_1, ..., x_{i-1}, [x_i, x_j], x_{i+1}, ..., ^x_j, ..., x_{k+1})

and for k = 0 (f a module element m) it reduces to (d m)(x) = [x, m].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Mapping

from .algebra import GradedSpace, Parity, SuperAlgebra, name_to_index
from .linalg import Matrix, SparseVec, VectorSpaceBasis, as_fraction, axpy, kernel_basis
from .modules import Bimodule, adjoint_module

Args = tuple[int, ...]


class Cochain:
    """Homogeneous k-cochain stored sparsely as ``{input tuple: sparse output}``."""

    __slots__ = ("degree", "parity", "source_dims", "target_dims", "_values")

    def __init__(self, source: GradedSpace | tuple[int, int], target: GradedSpace | tuple[int, int],
                 degree: int, parity: Parity | int | str, values: Mapping[Args, Mapping[int, object]] | None = None):
        self.source_dims = _dims(source)
        self.target_dims = _dims(target)
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.degree = degree
        self.parity = Parity.parse(parity)
        spar = _parities(self.source_dims)
        tpar = _parities(self.target_dims)
        clean: dict[Args, SparseVec] = {}
        for args, vec in (values or {}).items():
            args = tuple(args)
            if len(args) != degree:
                raise ValueError(f"argument tuple {args} does not have length {degree}")
            if any(not 0 <= i < len(spar) for i in args):
                raise ValueError(f"argument tuple {args} outside the algebra basis")
            want = (sum(spar[i] for i in args) + self.parity) % 2
            kept = {}
            for k, c in vec.items():
                if not 0 <= k < len(tpar):
                    raise ValueError(f"output index {k} outside the module basis")
                c = as_fraction(c)
                if c:
                    if tpar[k] != want:
                        raise ValueError(f"value on {args} has a component of the wrong parity "
                                         f"for a cochain of parity {self.parity}")
                    kept[k] = c
            if kept:
                clean[args] = kept
        self._values = clean

    @classmethod
    def from_names(cls, a: SuperAlgebra, degree: int, parity, values: Mapping[tuple[str, ...], Mapping[str, object]],
                   target: GradedSpace | None = None) -> Cochain:
        """Build from basis names, e.g. ``{("x1", "x1"): {"x2": 1}}``; adjoint target by default."""
        target = target or a
        out: dict[Args, SparseVec] = {}
        for names, vec in values.items():
            args = tuple(name_to_index(s, a.even_dim, a.odd_dim) for s in names)
            acc = out.setdefault(args, {})
            for name, c in vec.items():
                k = name_to_index(name, target.even_dim, target.odd_dim)
                acc[k] = acc.get(k, 0) + as_fraction(c)
        return cls(a, target, degree, parity, out)

    @classmethod
    def zero(cls, source, target, degree: int, parity) -> Cochain:
        return cls(source, target, degree, parity)

    @property
    def values(self) -> dict[Args, SparseVec]:
        return {k: dict(v) for k, v in self._values.items()}

    def items(self):
        return self._values.items()

    def __call__(self, *args: int) -> SparseVec:
        return dict(self._values.get(tuple(args), {}))

    def evaluate(self, vectors: list[Mapping[int, Fraction]]) -> SparseVec:
        """Multilinear evaluation on sparse argument vectors."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        out: SparseVec = {}
        for args in cartesian(*[sorted(v.items()) for v in vectors]):
            idx = tuple(i for i, _ in args)
            val = self._values.get(idx)
            if val:
                coef = Fraction(1)
                for _, c in args:
                    coef *= c
                axpy(out, coef, val)
        return out

    def is_zero(self) -> bool:
        return not self._values

    def _compatible(self, other: Cochain) -> None:
        if (self.degree, self.parity, self.source_dims, self.target_dims) != (
                other.degree, other.parity, other.source_dims, other.target_dims):
            raise ValueError("cochains live in different spaces")

    def __add__(self, other: Cochain) -> Cochain:
        self._compatible(other)
        vals = self.values
        for k, v in other._values.items():
            acc = vals.setdefault(k, {})
            axpy(acc, Fraction(1), v)
        return Cochain(self.source_dims, self.target_dims, self.degree, self.parity, vals)

    def __neg__(self) -> Cochain:
        return (-1) * self

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def __rmul__(self, scalar) -> Cochain:
        s = as_fraction(scalar)
        return Cochain(self.source_dims, self.target_dims, self.degree, self.parity,
                       {k: {i: s * c for i, c in v.items()} for k, v in self._values.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.parity, self.source_dims, self.target_dims, self._values) == (
            other.degree, other.parity, other.source_dims, other.target_dims, other._values)

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, parity={self.parity}, terms={len(self._values)})"


def _dims(space) -> tuple[int, int]:
    if isinstance(space, tuple):
        return space
    return (space.even_dim, space.odd_dim)


def _parities(dims: tuple[int, int]) -> tuple[int, ...]:
    return (0,) * dims[0] + (1,) * dims[1]


def _check_pair(a: SuperAlgebra, mod: Bimodule) -> None:
    if mod.algebra is not a and mod.algebra != a:
        raise ValueError("module is over a different algebra")


def differential(a: SuperAlgebra, mod: Bimodule, f: Cochain) -> Cochain:
    """d f, computed by pushing every nonzero value of f to the tuples it feeds."""
    _check_pair(a, mod)
    if f.source_dims != (a.even_dim, a.odd_dim) or f.target_dims != (mod.even_dim, mod.odd_dim):
        raise ValueError("cochain does not belong to this algebra/module")
    k, p = f.degree, int(f.parity)
    par = a.parities
    n = a.dim
    out: dict[Args, SparseVec] = {}

    def add(args: Args, coef: Fraction, vec: Mapping[int, Fraction]) -> None:
        acc = out.setdefault(args, {})
        axpy(acc, coef, vec)

    one = Fraction(1)
    for t, val in f.items():
        # [x_1, f(x_2, ..., x_{k+1})]
        for x in range(n):
            img = mod.act_left(x, val)
            if img:
                add((x,) + t, one, img)
        # [f(..., ^x_i, ...), x_i] with x_i inserted at 1-based position i
        for i in range(2, k + 2):
            tail = sum(par[u] for u in t[i - 1:])
            for x in range(n):
                img = mod.act_right(val, x)
                if img:
                    e = i + par[x] * (p + tail)
                    add(t[:i - 1] + (x,) + t[i - 1:], one if e % 2 == 0 else -one, img)
        # f(..., [x_i, x_j], ...): slot pos of t holds [x_i, x_j], i = pos + 1
        for pos in range(k):
            i = pos + 1
            for xa, xb, c in a.preimages(t[pos]):
                for j in range(i + 1, k + 2):
                    between = t[pos + 1:pos + j - i]
                    e = j + 1 + par[xb] * sum(par[u] for u in between)
                    new = t[:pos] + (xa,) + between + (xb,) + t[pos + j - i:]
                    add(new, c if e % 2 == 0 else -c, val)
    return Cochain(a, mod, k + 1, f.parity, out)


class CochainSpace:
    """Coordinates on C^k_p(L, M).

    Basis cochains are (input tuple, output index) pairs in lexicographic
    order, inputs most significant; only parity-compatible pairs appear.
    """

    def __init__(self, a: SuperAlgebra, mod: Bimodule, degree: int, parity):
        _check_pair(a, mod)
        self.algebra = a
        self.module = mod
        self.degree = degree
        self.parity = Parity.parse(parity)
        par = a.parities
        blocks = (list(mod.block(0)), list(mod.block(1)))
        basis: list[tuple[Args, int]] = []
        for args in cartesian(range(a.dim), repeat=degree):
            r = (sum(par[i] for i in args) + self.parity) % 2
            for o in blocks[r]:
                basis.append((args, o))
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_cochain(self, i: int) -> Cochain:
        args, o = self.basis[i]
        return Cochain(self.algebra, self.module, self.degree, self.parity, {args: {o: 1}})

    def to_vector(self, f: Cochain) -> SparseVec:
        if (f.degree, f.parity) != (self.degree, self.parity):
            raise ValueError("cochain has the wrong degree or parity for this space")
        out = {}
        for args, vec in f.items():
            for o, c in vec.items():
                out[self.index[(args, o)]] = c
        return out

    def to_dense(self, f: Cochain) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        for i, c in self.to_vector(f).items():
            v[i] = c
        return v

    def from_vector(self, vec) -> Cochain:
        if not isinstance(vec, Mapping):
            if len(vec) != self.dim:
                raise ValueError("vector has the wrong length")
            vec = {i: c for i, c in enumerate(vec) if c}
        values: dict[Args, dict[int, Fraction]] = {}
        for i, c in vec.items():
            args, o = self.basis[i]
            values.setdefault(args, {})[o] = as_fraction(c)
        return Cochain(self.algebra, self.module, self.degree, self.parity, values)


def cochain_space_dim(a: SuperAlgebra, mod: Bimodule, k: int, p) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    block = (mod.even_dim, mod.odd_dim)
    # counts[r]: number of input tuples whose parities sum to r
    counts = [1, 0]
    for _ in range(k):
        counts = [counts[0] * a.even_dim + counts[1] * a.odd_dim,
                  counts[0] * a.odd_dim + counts[1] * a.even_dim]
    p = int(Parity.parse(p))
    return counts[0] * block[p] + counts[1] * block[(1 + p) % 2]


def differential_matrix(a: SuperAlgebra, mod: Bimodule, k: int, p) -> Matrix:
    """Matrix of d: C^k_p -> C^{k+1}_p in the lexicographic cochain bases."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p = Parity.parse(p)
    target = CochainSpace(a, mod, k + 1, p)
    if k == 0:
        columns = [target.to_vector(differential(a, mod, Cochain(a, mod, 0, p, {(): {o: 1}})))
                   for o in mod.block(p)]
    else:
        source = CochainSpace(a, mod, k, p)
        columns = [target.to_vector(differential(a, mod, source.basis_cochain(i))) for i in range(source.dim)]
    return Matrix.from_columns(target.dim, columns)


@dataclass(frozen=True)
class CohomologySpaces:
    """ZL^k_p, BL^k_p and dim HL^k_p, with bases in CochainSpace coordinates."""

    space: CochainSpace
    cocycles: VectorSpaceBasis
    coboundaries: VectorSpaceBasis

    @property
    def hl_dim(self) -> int:
        return self.cocycles.dim - self.coboundaries.dim

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.cocycles.dim, self.coboundaries.dim, self.hl_dim)

    def cocycle_basis(self) -> list[Cochain]:
        return [self.space.from_vector(v) for v in self.cocycles.sparse_vectors()]

    def coboundary_basis(self) -> list[Cochain]:
        return [self.space.from_vector(v) for v in self.coboundaries.sparse_vectors()]

    def is_cocycle(self, f: Cochain) -> bool:
        return self.cocycles.contains(self.space.to_vector(f))

    def is_coboundary(self, f: Cochain) -> bool:
        return self.coboundaries.contains(self.space.to_vector(f))


def cohomology(a: SuperAlgebra, mod: Bimodule | None, k: int, p) -> CohomologySpaces:
    if k < 1:
        raise ValueError("k must be at least 1")
    mod = mod or adjoint_module(a)
    p = Parity.parse(p)
    space = CochainSpace(a, mod, k, p)
    cocycles = kernel_basis(differential_matrix(a, mod, k, p))
    below = differential_matrix(a, mod, k - 1, p)
    coboundaries = VectorSpaceBasis(space.dim, (row for _, row in below.transpose().sparse_rows()))
    return CohomologySpaces(space, cocycles, coboundaries)


def derivations(a: SuperAlgebra, p) -> VectorSpaceBasis:
    """ZL^1_p(L, L): derivations d of parity p, d([x,y]) = (-1)^{|d||y|}[d x, y] + [x, d y]."""
    return kernel_basis(differential_matrix(a, adjoint_module(a), 1, p))


def derivation_cochains(a: SuperAlgebra, p) -> list[Cochain]:
    space = CochainSpace(a, adjoint_module(a), 1, p)
    return [space.from_vector(v) for v in derivations(a, p).sparse_vectors()]


def inner_derivation(a: SuperAlgebra, x: Mapping[int, object]) -> Cochain:
    """R_x : y -> [y, x] as a degree-1 cochain of parity |x|."""
    if not isinstance(x, Mapping):
        if len(x) != a.dim:
            raise ValueError("vector has the wrong length")
        x = {i: c for i, c in enumerate(x) if c}
    x = {i: as_fraction(c) for i, c in x.items() if c}
    p = a.vector_parity(x)
    if p is None:
        raise ValueError("inner derivations need a homogeneous element")
    values = {}
    for y in range(a.dim):
        img = a.bracket({y: Fraction(1)}, x)
        if img:
            values[(y,)] = img
    return Cochain(a, a, 1, p, values)
