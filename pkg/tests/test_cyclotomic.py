import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsing.cyclotomic import (
    Cyclotomic,
    CyclotomicError,
    conjugate,
    cyclotomic_polynomial,
    divisors,
    lift,
    lift_common,
    reduce,
    totient,
)

from .conftest import cyclotomic_elements, numeric


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdiv(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    assert not any(a)
    return q


def mobius_phi(m):
    """Phi_m = prod_{d | m} (x^d - 1)^mu(m/d), an independent route."""
    num, den = [1], [1]
    for d in range(1, m + 1):
        if m % d == 0:
            mu = _mobius(m // d)
            xd = [-1] + [0] * (d - 1) + [1]
            if mu == 1:
                num = _pmul(num, xd)
            elif mu == -1:
                den = _pmul(den, xd)
    return tuple(_pdiv(num, den))


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(7) == (1,) * 7


@pytest.mark.parametrize("m", range(1, 61))
def test_cyclotomic_polynomial_product_identity(m):
    phi = cyclotomic_polynomial(m)
    assert phi[-1] == 1
    assert len(phi) - 1 == totient(m) == sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)
    prod = [1]
    for d in divisors(m):
        prod = _pmul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (m - 1) + [1]
    assert phi == mobius_phi(m)


def test_reduce_examples():
    assert reduce({4: 1}, 4) == 1
    assert reduce({2: 1}, 4) == -1
    assert reduce([1, 1, 1], 3) == 0
    assert reduce({7: Fraction(1, 2)}, 5) == Cyclotomic.zeta(5, 2) * Fraction(1, 2)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 9, 12, 15, 21, 30])
def test_roots_of_unity_sum(m):
    assert reduce({m: 1}, m) == 1
    if m > 1:
        assert reduce([1] * m, m) == 0


def test_coefficient_count_enforced():
    with pytest.raises(CyclotomicError):
        Cyclotomic(5, [1, 2])


def test_field_ops_examples():
    z4, z3 = Cyclotomic.zeta(4), Cyclotomic.zeta(3)
    a = Cyclotomic(5, [1, -2, 0, Fraction(1, 3)])
    assert Cyclotomic.one(5) * a == a
    assert z4.inverse() == -z4
    assert (1 + z3) * (1 + z3 * z3) == 1
    with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
        Cyclotomic.zero(7).inverse()


def test_order_mismatch_needs_explicit_lift():
    with pytest.raises(CyclotomicError):
        Cyclotomic.zeta(4) + Cyclotomic.zeta(3)


def test_lift_examples():
    a = Cyclotomic(6, [1, 2])
    assert lift_common(a, Cyclotomic.zeta(6)) == (a, Cyclotomic.zeta(6))
    x, y = lift_common(Cyclotomic.zeta(2), Cyclotomic.zeta(3))
    assert x.order == y.order == 6
    assert x == Cyclotomic.zeta(6, 3)
    assert y == Cyclotomic.zeta(6, 2)
    assert lift(lift(Cyclotomic.zeta(3), 6), 6) == lift(Cyclotomic.zeta(3), 6)
    with pytest.raises(CyclotomicError):
        lift(Cyclotomic.zeta(4), 6)


def test_conjugate_examples():
    assert conjugate(Cyclotomic.rational(8, Fraction(3, 4))) == Fraction(3, 4)
    assert conjugate(Cyclotomic.zeta(4)) == -Cyclotomic.zeta(4)


def test_string_form():
    assert str(Cyclotomic(5, [0, -1, 0, 0])) == "-1*z"
    assert str(Cyclotomic(5, [Fraction(-1, 2), 0, 3, -1])) == "-1/2 + 3*z^2 - z^3"


ORDERS = st.sampled_from([3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 24])


@st.composite
def pairs(draw, nonzero=False):
    m = draw(ORDERS)
    a = draw(cyclotomic_elements(m))
    b = draw(cyclotomic_elements(m))
    if nonzero and not a:
        a = a + 1
    return a, b


@given(pairs())
def test_arithmetic_matches_numeric_evaluation(ab):
    a, b = ab
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-7
    assert abs(numeric(a + b) - numeric(a) - numeric(b)) < 1e-9
    assert abs(numeric(conjugate(a)) - numeric(a).conjugate()) < 1e-9


@given(pairs(nonzero=True))
def test_inverse(ab):
    a, _ = ab
    assert a * a.inverse() == 1


@given(pairs())
def test_conjugate_is_field_automorphism(ab):
    a, b = ab
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(conjugate(a)) == a


@given(pairs())
def test_hash_consistent_with_equality(ab):
    a, _ = ab
    same = Cyclotomic(a.order, a.coeffs)
    assert same == a and hash(same) == hash(a)


def test_lift_commutes_with_arithmetic_randomized():
    rng = random.Random(2024)
    for _ in range(1000):
        m1, m2 = rng.randint(1, 24), rng.randint(1, 24)
        a = Cyclotomic(m1, [rng.randint(-3, 3) for _ in range(totient(m1))])
        b = Cyclotomic(m2, [rng.randint(-3, 3) for _ in range(totient(m2))])
        la, lb = lift_common(a, b)
        big = la.order
        c = Cyclotomic(m1, [rng.randint(-3, 3) for _ in range(totient(m1))])
        # Arithmetic inside one field, then lifting, agrees with lifting first.
        assert lift(a * c, big) == la * lift(c, big)
        assert lift(a + c, big) == la + lift(c, big)
        assert abs(numeric(la * lb) - numeric(a) * numeric(b)) < 1e-8
        assert la == a and lb == b
