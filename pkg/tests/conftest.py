import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qsing.cyclotomic import Cyclotomic, totient

ACCEPTANCE_RESULTS: list[tuple[str, bool, float]] = []


def numeric(a: Cyclotomic) -> complex:
    """Evaluate at zeta_m = exp(2 pi i / m) in floating point."""
    w = cmath.exp(2j * cmath.pi / a.order)
    return sum(float(c) * w**k for k, c in enumerate(a.coeffs))


def leibniz_det(rows):
    """Determinant by the permutation expansion; independent of elimination."""
    n = len(rows)
    total = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = None
        for i in range(n):
            x = rows[i][perm[i]]
            term = x if term is None else term * x
        if inversions % 2:
            term = -term
        total = term if total is None else total + term
    return total


def cyclotomic_elements(m: int, max_coeff: int = 4, allow_fraction: bool = True):
    phi = totient(m)
    coeff = st.integers(-max_coeff, max_coeff)
    if allow_fraction:
        coeff = st.builds(Fraction, coeff, st.sampled_from([1, 1, 1, 2, 3]))
    return st.lists(coeff, min_size=phi, max_size=phi).map(lambda cs: Cyclotomic(m, cs))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({seconds:.2f} s)")


@pytest.fixture
def record_criterion():
    def record(name, ok, seconds):
        ACCEPTANCE_RESULTS.append((name, ok, seconds))

    return record
