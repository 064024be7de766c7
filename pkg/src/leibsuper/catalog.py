"""The null-filiform Leibniz (super)algebras NF^n and NF^{n,m}."""

from __future__ import annotations

from fractions import Fraction

from .algebra import SuperAlgebra

HALF = Fraction(1, 2)


def nf_algebra(n: int) -> SuperAlgebra:
    """NF^n: [x_i, x_1] = x_{i+1} for 1 <= i <= n-1."""
    if n < 1:
        raise ValueError("NF^n needs n >= 1")
    table = {(i, 0): {i + 1: Fraction(1)} for i in range(n - 1)}
    return SuperAlgebra(n, 0, table)


def nf_superalgebra(n: int, m: int) -> SuperAlgebra:
    """NF^{n,m} for m in {n, n+1}.

    [y_i, y_1] = x_i        1 <= i <= n
    [x_i, y_1] = 1/2 y_{i+1}  1 <= i <= m-1
    [y_j, x_1] = y_{j+1}      1 <= j <= m-1
    [x_i, x_1] = x_{i+1}      1 <= i <= n-1
    """
    if n < 1:
        raise ValueError("NF^{n,m} needs n >= 1")
    if m not in (n, n + 1):
        raise ValueError(f"NF^{{n,m}} exists only for m = n or m = n+1 (got n={n}, m={m})")
    x = lambda i: i - 1  # noqa: E731
    y = lambda j: n + j - 1  # noqa: E731
    table = {}
    for i in range(1, n + 1):
        table[(y(i), y(1))] = {x(i): Fraction(1)}
    for i in range(1, m):
        table[(x(i), y(1))] = {y(i + 1): HALF}
    for j in range(1, m):
        table[(y(j), x(1))] = {y(j + 1): Fraction(1)}
    for i in range(1, n):
        table[(x(i), x(1))] = {x(i + 1): Fraction(1)}
    return SuperAlgebra(n, m, table)
