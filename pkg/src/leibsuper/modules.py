"""Bimodules over a Leibniz superalgebra, used as cohomology coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import GradedSpace, SuperAlgebra
from .linalg import SparseVec, as_fraction, axpy, dense


class Bimodule(GradedSpace):
    """M = M_0 + M_1 with a left action [x, m] and a right action [m, x].

    ``left[(i, k)]`` expands [e_i, m_k] and ``right[(k, i)]`` expands [m_k, e_i]
    in the module basis, where e_i runs over the algebra basis.
    """

    def __init__(self, algebra: SuperAlgebra, even_dim: int, odd_dim: int,
                 left: Mapping | None = None, right: Mapping | None = None):
        self.algebra = algebra
        self.even_dim = even_dim
        self.odd_dim = odd_dim
        self._left = self._clean(left or {}, algebra_first=True)
        self._right = self._clean(right or {}, algebra_first=False)

    def _clean(self, action: Mapping, algebra_first: bool) -> dict[tuple[int, int], SparseVec]:
        apar, mpar = self.algebra.parities, self.parities
        out = {}
        for key, vec in action.items():
            i, k = key if algebra_first else key[::-1]
            if not (0 <= i < self.algebra.dim and 0 <= k < self.dim):
                raise ValueError(f"action index {key} out of range")
            kept = {}
            for r, c in vec.items():
                if not 0 <= r < self.dim:
                    raise ValueError(f"action {key} has a component outside the module")
                if mpar[r] != apar[i] ^ mpar[k]:
                    raise ValueError(f"action {key} has a component of the wrong parity")
                c = as_fraction(c)
                if c:
                    kept[r] = c
            if kept:
                out[key] = kept
        return out

    @property
    def left(self) -> dict:
        return {k: dict(v) for k, v in self._left.items()}

    @property
    def right(self) -> dict:
        return {k: dict(v) for k, v in self._right.items()}

    def act_left(self, i: int, m: Mapping[int, Fraction]) -> SparseVec:
        """[e_i, m] for a sparse module vector m."""
        out: SparseVec = {}
        for k, c in m.items():
            img = self._left.get((i, k))
            if img:
                axpy(out, c, img)
        return out

    def act_right(self, m: Mapping[int, Fraction], i: int) -> SparseVec:
        """[m, e_i] for a sparse module vector m."""
        out: SparseVec = {}
        for k, c in m.items():
            img = self._right.get((k, i))
            if img:
                axpy(out, c, img)
        return out

    def left_of(self, x: Mapping[int, Fraction], m: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for i, c in x.items():
            axpy(out, c, self.act_left(i, m))
        return out

    def right_of(self, m: Mapping[int, Fraction], x: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for i, c in x.items():
            axpy(out, c, self.act_right(m, i))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (self.algebra == other.algebra and (self.even_dim, self.odd_dim) == (other.even_dim, other.odd_dim)
                and self._left == other._left and self._right == other._right)

    def __repr__(self) -> str:
        return f"Bimodule(even_dim={self.even_dim}, odd_dim={self.odd_dim}, over={self.algebra!r})"


def adjoint_module(a: SuperAlgebra) -> Bimodule:
    """L acting on itself by its own product on both sides."""
    return Bimodule(a, a.even_dim, a.odd_dim, left=a.table, right=a.table)


@dataclass(frozen=True)
class ModuleViolation:
    axiom: int  # 1: [m,[x,y]], 2: [x,[m,y]], 3: [x,[y,m]]
    indices: tuple[int, int, int]  # (m, x, y) for axiom 1, (x, m, y) for 2, (x, y, m) for 3
    residual: tuple[Fraction, ...]


def check_module_axioms(a: SuperAlgebra, mod: Bimodule) -> list[ModuleViolation]:
    """Evaluate the three graded bimodule axioms on all basis triples."""
    apar, mpar = a.parities, mod.parities
    one = Fraction(1)
    out = []

    def sgn(p, q):
        return one if not (p and q) else -one

    for m in range(mod.dim):
        em = {m: one}
        for x in range(a.dim):
            for y in range(a.dim):
                # [m,[x,y]] = [[m,x],y] - (-1)^{|x||y|}[[m,y],x]
                res = mod.right_of(em, a.bracket_basis(x, y))
                axpy(res, -one, mod.act_right(mod.act_right(em, x), y))
                axpy(res, sgn(apar[x], apar[y]), mod.act_right(mod.act_right(em, y), x))
                if res:
                    out.append(ModuleViolation(1, (m, x, y), tuple(dense(res, mod.dim))))
                # [x,[m,y]] = [[x,m],y] - (-1)^{|y||m|}[[x,y],m]
                res = mod.act_left(x, mod.act_right(em, y))
                axpy(res, -one, mod.act_right(mod.act_left(x, em), y))
                axpy(res, sgn(apar[y], mpar[m]), mod.left_of(a.bracket_basis(x, y), em))
                if res:
                    out.append(ModuleViolation(2, (x, m, y), tuple(dense(res, mod.dim))))
                # [x,[y,m]] = [[x,y],m] - (-1)^{|m||y|}[[x,m],y]
                res = mod.act_left(x, mod.act_left(y, em))
                axpy(res, -one, mod.left_of(a.bracket_basis(x, y), em))
                axpy(res, sgn(mpar[m], apar[y]), mod.act_right(mod.act_left(x, em), y))
                if res:
                    out.append(ModuleViolation(3, (x, y, m), tuple(dense(res, mod.dim))))
    return out
