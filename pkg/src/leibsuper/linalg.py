"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` values; no floating point
is ever introduced.  Matrices keep their nonzero entries row by row, which is
what the coboundary matrices need (a few nonzeros per column, thousands of
rows), but every matrix can be viewed densely through :attr:`Matrix.entries`.

Row reduction is Gauss-Jordan: each new pivot row is normalized to a leading 1
and cleared from all other pivot rows, so the pivot rows always form the
reduced row echelon form of what has been inserted so far.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

SparseVec = dict[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def sparse(values: Iterable) -> SparseVec:
    out = {}
    for i, v in enumerate(values):
        v = as_fraction(v)
        if v:
            out[i] = v
    return out


def dense(vec: Mapping[int, Fraction], length: int) -> list[Fraction]:
    out = [Fraction(0)] * length
    for i, v in vec.items():
        out[i] = v
    return out


def axpy(target: SparseVec, coef: Fraction, source: Mapping[int, Fraction]) -> None:
    """In place ``target += coef * source``, dropping entries that cancel."""
    if not coef:
        return
    for c, v in source.items():
        new = target.get(c, 0) + coef * v
        if new:
            target[c] = new
        else:
            target.pop(c, None)


class Matrix:
    """Immutable rational matrix with sparse row storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Mapping[int, Mapping[int, Fraction]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        clean: dict[int, dict[int, Fraction]] = {}
        for r, row in (data or {}).items():
            if not 0 <= r < rows:
                raise IndexError(f"row {r} out of range")
            kept = {}
            for c, v in row.items():
                if not 0 <= c < cols:
                    raise IndexError(f"column {c} out of range")
                v = as_fraction(v)
                if v:
                    kept[c] = v
            if kept:
                clean[r] = kept
        self._data = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, {i: sparse(row) for i, row in enumerate(rows)})

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, Fraction]]) -> Matrix:
        data: dict[int, dict[int, Fraction]] = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                data.setdefault(r, {})[c] = v
        return cls(rows, len(columns), data)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major dense entries, length ``rows * cols``."""
        out = [Fraction(0)] * (self.rows * self.cols)
        for r, row in self._data.items():
            base = r * self.cols
            for c, v in row.items():
                out[base + c] = v
        return tuple(out)

    def row(self, r: int) -> SparseVec:
        return dict(self._data.get(r, {}))

    def sparse_rows(self) -> Iterable[tuple[int, SparseVec]]:
        for r in sorted(self._data):
            yield r, self._data[r]

    def to_lists(self) -> list[list[Fraction]]:
        return [dense(self._data.get(r, {}), self.cols) for r in range(self.rows)]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(key)
        return self._data.get(r, {}).get(c, Fraction(0))

    def transpose(self) -> Matrix:
        data: dict[int, dict[int, Fraction]] = {}
        for r, row in self._data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return Matrix(self.cols, self.rows, data)

    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product with a dense vector."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols} columns")
        vec = [as_fraction(v) for v in vec]
        out = [Fraction(0)] * self.rows
        for r, row in self._data.items():
            out[r] = sum((v * vec[c] for c, v in row.items()), Fraction(0))
        return out

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        data: dict[int, dict[int, Fraction]] = {}
        for r, row in self._data.items():
            acc: SparseVec = {}
            for k, v in row.items():
                other_row = other._data.get(k)
                if other_row:
                    axpy(acc, v, other_row)
            if acc:
                data[r] = acc
        return Matrix(self.rows, other.cols, data)

    def permute_columns(self, order: Sequence[int]) -> Matrix:
        """New matrix whose column ``i`` is old column ``order[i]``."""
        if sorted(order) != list(range(self.cols)):
            raise ValueError("not a permutation of the columns")
        where = {old: new for new, old in enumerate(order)}
        return Matrix(self.rows, self.cols,
                      {r: {where[c]: v for c, v in row.items()} for r, row in self._data.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"


class RowReducer:
    """Incremental Gauss-Jordan elimination.

    Pivot rows are kept fully reduced against each other, so reducing a new
    row needs only one pass over the pivot columns it touches.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> SparseVec:
        out = dict(row)
        for c in [c for c in row if c in self.pivots]:
            coef = out.get(c)
            if coef:
                axpy(out, -coef, self.pivots[c])
        return out

    def insert(self, row: Mapping[int, Fraction]) -> bool:
        """Add a row; return True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        inv = 1 / r[lead]
        r = {c: v * inv for c, v in r.items()}
        for prow in self.pivots.values():
            coef = prow.get(lead)
            if coef:
                axpy(prow, -coef, r)
        self.pivots[lead] = r
        return True

    def pivot_columns(self) -> list[int]:
        return sorted(self.pivots)

    def echelon_rows(self) -> list[SparseVec]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def _reduce_matrix(m: Matrix) -> RowReducer:
    red = RowReducer(m.cols)
    for _, row in m.sparse_rows():
        red.insert(row)
    return red


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    red = _reduce_matrix(m)
    pivots = red.pivot_columns()
    return Matrix(m.rows, m.cols, dict(enumerate(red.echelon_rows()))), pivots


def rank(m: Matrix) -> int:
    return _reduce_matrix(m).rank


class VectorSpaceBasis:
    """A subspace of Q^ambient_dim, held as the RREF rows of a spanning set.

    The stored vectors are linearly independent, have leading entry 1 and
    strictly increasing pivot columns, so two equal subspaces always compare
    equal.
    """

    __slots__ = ("ambient_dim", "_reducer")

    def __init__(self, ambient_dim: int, spanning: Iterable[Mapping[int, Fraction] | Sequence] = ()):
        self.ambient_dim = ambient_dim
        self._reducer = RowReducer(ambient_dim)
        for v in spanning:
            self._reducer.insert(self._coerce(v))

    def _coerce(self, v) -> SparseVec:
        if isinstance(v, Mapping):
            if any(not 0 <= i < self.ambient_dim for i in v):
                raise ValueError("vector index outside ambient dimension")
            return {i: as_fraction(x) for i, x in v.items() if x}
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector length {len(v)} != ambient dimension {self.ambient_dim}")
        return sparse(v)

    @property
    def dim(self) -> int:
        return self._reducer.rank

    def __len__(self) -> int:
        return self.dim

    @property
    def pivots(self) -> list[int]:
        return self._reducer.pivot_columns()

    def sparse_vectors(self) -> list[SparseVec]:
        return [dict(r) for r in self._reducer.echelon_rows()]

    @property
    def vectors(self) -> list[list[Fraction]]:
        return [dense(r, self.ambient_dim) for r in self._reducer.echelon_rows()]

    def contains(self, v) -> bool:
        return not self._reducer.reduce(self._coerce(v))

    def coordinates(self, v) -> list[Fraction]:
        """Coefficients of ``v`` against the stored basis; ValueError if outside."""
        v = self._coerce(v)
        if self._reducer.reduce(v):
            raise ValueError("vector is not in the span")
        # RREF rows: the coefficient of row i is v's entry at pivot i.
        return [v.get(c, Fraction(0)) for c in self.pivots]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorSpaceBasis):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.sparse_vectors() == other.sparse_vectors()

    def __repr__(self) -> str:
        return f"VectorSpaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: Matrix) -> VectorSpaceBasis:
    """Basis of the null space, built from free columns in ascending order."""
    red = _reduce_matrix(m)
    vectors = []
    free = [c for c in range(m.cols) if c not in red.pivots]
    for f in free:
        v = {f: Fraction(1)}
        for p, row in red.pivots.items():
            coef = row.get(f)
            if coef:
                v[p] = -coef
        vectors.append(v)
    return VectorSpaceBasis(m.cols, vectors)


def column_space_basis(m: Matrix) -> VectorSpaceBasis:
    return VectorSpaceBasis(m.rows, (row for _, row in m.transpose().sparse_rows()))


def row_space_basis(m: Matrix) -> VectorSpaceBasis:
    return VectorSpaceBasis(m.cols, (row for _, row in m.sparse_rows()))


def in_span(basis: VectorSpaceBasis, v: Sequence) -> bool:
    """Exact membership test: rank of basis + v equals rank of basis."""
    if len(v) != basis.ambient_dim:
        raise ValueError(f"vector length {len(v)} != ambient dimension {basis.ambient_dim}")
    return basis.contains(v)


def solve(m: Matrix, rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``m x = rhs`` (free variables zero) or None."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side has wrong length")
    rhs = [as_fraction(v) for v in rhs]
    aug_rows = {}
    for r in range(m.rows):
        row = m.row(r)
        if rhs[r]:
            row[m.cols] = rhs[r]
        if row:
            aug_rows[r] = row
    red = _reduce_matrix(Matrix(m.rows, m.cols + 1, aug_rows))
    if m.cols in red.pivots:
        return None
    x = [Fraction(0)] * m.cols
    for p, row in red.pivots.items():
        x[p] = row.get(m.cols, Fraction(0))
    return x


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = {}
    for r in range(n):
        row = m.row(r)
        row[n + r] = Fraction(1)
        aug[r] = row
    red = _reduce_matrix(Matrix(n, 2 * n, aug))
    if red.pivot_columns() != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(n, n, {r: {c - n: v for c, v in red.pivots[r].items() if c >= n} for r in range(n)})


def determinant(m: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    a = m.to_lists()
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det
