"""Explicit 2-cochains on NF^n, NF^{n,n} and NF^{n,n+1}.

These are the hand-derived cocycle and coboundary bases for the null-filiform
algebras, written out term by term.  Indices are 1-based as in the usual
notation: ``phi(j, k)`` is phi_{j,k}.  All cochains are even, with adjoint
coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import SuperAlgebra
from .catalog import nf_algebra, nf_superalgebra
from .cochains import Cochain

HALF = Fraction(1, 2)


class _Builder:
    def __init__(self, a: SuperAlgebra):
        self.a = a
        self.n = a.even_dim
        self.values: dict[tuple[int, int], dict[int, Fraction]] = {}

    def x(self, i: int) -> int:
        if not 1 <= i <= self.a.even_dim:
            raise IndexError(f"x{i}")
        return i - 1

    def y(self, j: int) -> int:
        if not 1 <= j <= self.a.odd_dim:
            raise IndexError(f"y{j}")
        return self.a.even_dim + j - 1

    def set(self, left: int, right: int, out: int, coef=1) -> None:
        vec = self.values.setdefault((left, right), {})
        vec[out] = vec.get(out, 0) + Fraction(coef)

    def done(self) -> Cochain:
        return Cochain(self.a, self.a, 2, 0, self.values)


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise ValueError(f"{what} is out of range")


# NF^n ----------------------------------------------------------------------

def nf_phi(n: int, j: int, k: int) -> Cochain:
    """phi_{j,k}(x_j, x_1) = x_k, 1 <= j <= n, 2 <= k <= n."""
    _check(1 <= j <= n and 2 <= k <= n, f"phi_{{{j},{k}}}")
    b = _Builder(nf_algebra(n))
    b.set(b.x(j), b.x(1), b.x(k))
    return b.done()


def nf_psi(n: int, j: int) -> Cochain:
    """psi_j(x_j, x_1) = x_1, psi_j(x_i, x_{j+1}) = -x_{i+1}; 1 <= j <= n-1."""
    _check(1 <= j <= n - 1, f"psi_{j}")
    b = _Builder(nf_algebra(n))
    b.set(b.x(j), b.x(1), b.x(1))
    for i in range(1, n):
        b.set(b.x(i), b.x(j + 1), b.x(i + 1), -1)
    return b.done()


def nf_xi(n: int, j: int, k: int) -> Cochain:
    """Coboundary xi_{j,k}, 2 <= j <= n, 1 <= k <= n."""
    _check(2 <= j <= n and 1 <= k <= n, f"xi_{{{j},{k}}}")
    if k == 1:
        return nf_psi(n, j - 1) - nf_phi(n, j, 2)
    if j <= k:
        return nf_phi(n, j - 1, k)
    return nf_phi(n, j - 1, k) - nf_phi(n, j, k + 1)


def nf_cocycle_basis(n: int) -> dict[str, Cochain]:
    out = {f"phi_{j},{k}": nf_phi(n, j, k) for j in range(1, n + 1) for k in range(2, n + 1)}
    out.update({f"psi_{j}": nf_psi(n, j) for j in range(1, n)})
    return out


def nf_coboundary_basis(n: int) -> dict[str, Cochain]:
    return {f"xi_{j},{k}": nf_xi(n, j, k) for j in range(2, n + 1) for k in range(1, n + 1)}


# NF^{n,n} and NF^{n,n+1} -----------------------------------------------------

def _super(n: int, m: int) -> _Builder:
    return _Builder(nf_superalgebra(n, m))


def super_phi(n: int, m: int, j: int, k: int) -> Cochain:
    """phi_{j,k} on NF^{n,m}.

    Ranges: k in 1..n; j in 1..n for m = n and 1..n+1 for m = n+1.
    """
    _check(1 <= k <= n and 1 <= j <= m, f"phi_{{{j},{k}}} on NF^{{{n},{m}}}")
    b = _super(n, m)
    x, y = b.x, b.y
    if m == n + 1 and j == n + 1 and k == 1:
        b.set(y(n + 1), y(1), x(1))
        b.set(x(n), y(1), y(1), -HALF)
        b.set(y(n), x(1), y(1), -1)
        b.set(y(n + 1), x(1), y(2))
        # Signs on these two families are forced by d(phi) = 0: with
        # -1/2 y_{i+1} and -x_i the cochain is not closed.
        for i in range(1, n + 1):
            b.set(x(i), y(n + 1), y(i + 1), HALF)
            b.set(y(i), y(n + 1), x(i), 1)
        return b.done()
    if j == 1 and k == 1:
        b.set(y(1), y(1), x(1))
        for i in range(1, n):
            b.set(x(i), x(1), x(i + 1), -1)
        for i in range(2, m):
            b.set(y(i), x(1), y(i + 1), -1)
        return b.done()
    if k == 1:
        b.set(y(j), y(1), x(1))
        b.set(x(j - 1), x(1), x(1))
        b.set(y(j), x(1), y(2))
        for i in range(1, n):
            b.set(x(i), x(j), x(i + 1), -1)
        for i in range(1, m):
            b.set(y(i), x(j), y(i + 1), -1)
        return b.done()
    b.set(y(j), y(1), x(k))
    if j >= 2:
        b.set(x(j - 1), x(1), x(k))
    if k + 1 <= m:
        b.set(y(j), x(1), y(k + 1))
    return b.done()


def super_psi(n: int, m: int, j: int, k: int) -> Cochain:
    """psi_{j,k} on NF^{n,m}.

    Ranges: k = 1 needs 1 <= j <= n-1; otherwise 1 <= j <= n and 2 <= k <= m.
    """
    if k == 1:
        _check(1 <= j <= n - 1, f"psi_{{{j},1}}")
    else:
        _check(1 <= j <= n and 2 <= k <= m, f"psi_{{{j},{k}}} on NF^{{{n},{m}}}")
    b = _super(n, m)
    x, y = b.x, b.y
    if k == 1:
        b.set(x(j), y(1), y(1))
        b.set(x(j), x(1), x(1), 2)
        b.set(y(j), x(1), y(1), 2)
        for i in range(1, n):
            b.set(x(i), x(j + 1), x(i + 1), -2)
        for i in range(1, m):
            b.set(y(i), x(j + 1), y(i + 1), -2)
            b.set(x(i), y(j + 1), y(i + 1), -1)
        for i in range(1, n + 1):
            b.set(y(i), y(j + 1), x(i), -2)
        return b.done()
    b.set(x(j), y(1), y(k))
    if k <= n:
        b.set(x(j), x(1), x(k), 2)
    b.set(y(j), x(1), y(k), 2)
    return b.done()


def super_xi(n: int, m: int, j: int, k: int) -> Cochain:
    _check(1 <= j <= n and 1 <= k <= n, f"xi_{{{j},{k}}}")
    if j <= k:
        return super_phi(n, m, j, k)
    _check(j >= 2, f"xi_{{{j},{k}}}")
    return super_phi(n, m, j, k) - HALF * super_psi(n, m, j, k + 1)


def super_zeta(n: int, m: int, j: int, k: int) -> Cochain:
    _check(2 <= j <= m and 1 <= k <= m, f"zeta_{{{j},{k}}}")
    if m == n + 1 and j == n + 1 and k == 1:
        return -super_phi(n, m, j, 1)
    if j <= k:
        return super_psi(n, m, j - 1, k)
    return HALF * super_psi(n, m, j - 1, k) - super_phi(n, m, j, k)


def super_cocycle_basis(n: int, m: int) -> dict[str, Cochain]:
    out = {f"phi_{j},{k}": super_phi(n, m, j, k) for j in range(1, m + 1) for k in range(1, n + 1)}
    out.update({f"psi_{j},1": super_psi(n, m, j, 1) for j in range(1, n)})
    out.update({f"psi_{j},{k}": super_psi(n, m, j, k) for j in range(1, n + 1) for k in range(2, m + 1)})
    return out


def super_coboundary_basis(n: int, m: int) -> dict[str, Cochain]:
    out = {f"xi_{j},{k}": super_xi(n, m, j, k) for j in range(1, n + 1) for k in range(1, n + 1)}
    out.update({f"zeta_{j},{k}": super_zeta(n, m, j, k) for j in range(2, m + 1) for k in range(1, m + 1)})
    return out
