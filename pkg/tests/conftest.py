import random
import sys
from fractions import Fraction

import pytest

from leibsuper.catalog import nf_algebra, nf_superalgebra


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nonzero_rational(rng: random.Random, bound: int = 9) -> Fraction:
    q = Fraction(0)
    while not q:
        q = random_rational(rng, bound)
    return q


def small_catalog():
    """Every catalog algebra with n <= 4, labelled."""
    out = [(f"NF{n}", nf_algebra(n)) for n in range(1, 5)]
    for n in range(1, 5):
        for m in (n, n + 1):
            out.append((f"NF{n},{m}", nf_superalgebra(n, m)))
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
