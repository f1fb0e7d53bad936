from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from enriques_cones.lattice import LatticeVector

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []

small_ints = st.integers(min_value=-5, max_value=5)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vectors_of(basis: str, n: int, elems=small_ints):
    return st.lists(elems, min_size=n, max_size=n).map(lambda c: LatticeVector(basis, c))


@st.composite
def forward_l_classes(draw, max_a=60):
    """Integral classes a l0 - sum bi li with sum bi = 3a and square >= 0, a >= 3."""
    a = draw(st.integers(min_value=3, max_value=max_a))
    spread = max(1, a // 3)
    for _ in range(50):
        b = [3 * a // 10 + draw(st.integers(-spread, spread)) for _ in range(9)]
        b.append(3 * a - sum(b))
        if a * a - sum(x * x for x in b) >= 0:
            return LatticeVector("L", [a] + [-x for x in b])
    # the equal-ish class is always forward
    b = [3 * a // 10] * 10
    for i in range(3 * a - sum(b)):
        b[i] += 1
    return LatticeVector("L", [a] + [-x for x in b])


@pytest.fixture
def acceptance():
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def frac_tuple(*xs):
    return tuple(Fraction(x) for x in xs)
