import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsing.constructors import (
    OddCompositeParams,
    construct_even,
    construct_odd_composite,
    metacyclic_generators,
)
from qsing.cyclotomic import Cyclotomic
from qsing.linalg import (
    CycMatrix,
    CycPoly,
    anti_circulant,
    char_poly,
    determinant,
    diagonal,
    eigen_multiset,
    identity,
    mat_inverse,
    mat_mul,
    mat_pow,
    mult_eigen_one,
    rank,
    root_multiplicity,
    zero_matrix,
)

from .conftest import cyclotomic_elements, leibniz_det

Z = Cyclotomic.zeta


@st.composite
def matrices(draw, max_dim=4):
    m = draw(st.sampled_from([1, 3, 4, 5, 8]))
    n = draw(st.integers(1, max_dim))
    entries = draw(
        st.lists(cyclotomic_elements(m, max_coeff=2, allow_fraction=False),
                 min_size=n * n, max_size=n * n)
    )
    # sprinkle zeros so that pivoting paths are exercised
    mask = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    vals = [e if keep else 0 for e, keep in zip(entries, mask)]
    return CycMatrix([vals[i * n:(i + 1) * n] for i in range(n)], m)


def test_product_identities():
    a = CycMatrix([[1, Z(4)], [Fraction(1, 2), -1]], 4)
    assert mat_mul(a, identity(2, 4)) == a
    assert mat_pow(a, 0) == identity(2, 4)
    with pytest.raises(ValueError):
        mat_mul(a, identity(3, 4))


@pytest.mark.parametrize("q,l,alpha", [(3, 7, 2), (5, 11, 3)])
def test_twisted_cycle_power_is_scalar(q, l, alpha):
    A, _ = metacyclic_generators(OddCompositeParams(q * q, q, l, alpha))
    x = Z(q * l, l)
    assert mat_pow(A, q) == diagonal([x] * q, q * l)
    assert determinant(A) == x


def test_determinant_examples():
    assert determinant(identity(5, 7)) == 1
    b = [Z(12, 1), Z(12, 5), 2, Fraction(1, 3)]
    corner = Z(12, 7)
    expected = corner
    for x in b:
        expected = expected * x
    assert determinant(anti_circulant(corner, b, 12)) == expected  # (-1)^4 = 1
    assert determinant(anti_circulant(corner, b[:3], 12)) == -(corner * b[0] * b[1] * b[2])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_determinant_matches_leibniz(a):
    assert determinant(a) == leibniz_det(a.rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_char_poly_matches_pointwise_determinants(a):
    p = char_poly(a)
    assert p.degree == a.dim and p.is_monic()
    for t in (0, 1, -2, 3):
        shifted = identity(a.dim, a.ambient_order).scale(t) - a
        assert p(t) == leibniz_det(shifted.rows)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_inverse_and_rank(a):
    if determinant(a):
        assert mat_mul(a, mat_inverse(a)) == identity(a.dim, a.ambient_order)
        assert rank(a) == a.dim
    else:
        assert rank(a) < a.dim
        with pytest.raises(ZeroDivisionError):
            mat_inverse(a)


def test_rank_examples():
    assert rank(zero_matrix(3, 5)) == 0
    assert rank(identity(4, 5)) == 4
    d = diagonal([Z(5, k) for k in range(1, 5)], 5)
    assert rank(d - identity(4, 5)) == 4
    assert rank(CycMatrix([[1, 2], [2, 4]], 1)) == 1


def test_char_poly_examples():
    p = char_poly(identity(3, 5))
    assert p.coefficients == (-1, 3, -3, 1)
    assert root_multiplicity(p, 1) == 3


def test_mult_eigen_one_examples():
    assert mult_eigen_one(identity(4, 3)) == 4
    assert mult_eigen_one(diagonal([-1, -1, 1], 1)) == 1
    G = construct_odd_composite(9)
    assert all(mult_eigen_one(g) == 0 for g in G.elements[1:])


def test_eigen_multiset_examples():
    d = diagonal([Z(6, 1), Z(6, 1), Z(6, 3)], 6)
    assert eigen_multiset(d, 6) == {Z(6, 1): 2, Z(6, 3): 1}
    B = CycMatrix([[0, Z(4)], [Z(4), 0]], 4)
    assert eigen_multiset(B, 4) == {Z(4, 1): 1, Z(4, 3): 1}
    with pytest.raises(ValueError, match="order contract violated"):
        eigen_multiset(B, 2)


def test_eigen_multiset_leaves_the_ambient_field():
    # A rational rotation of order 3: eigenvalues live in Q(zeta_3).
    r = CycMatrix([[0, -1], [1, -1]], 1)
    assert eigen_multiset(r, 3) == {Z(3, 1): 1, Z(3, 2): 1}


@pytest.mark.parametrize("u", [2, 3, 4])
def test_eigenvalues_of_power(u):
    exps = [1, 2, 4, 4]
    a = diagonal([Z(7, e) for e in exps], 7)
    assert eigen_multiset(mat_pow(a, u), 7) == eigen_multiset(
        diagonal([Z(7, e * u) for e in exps], 7), 7
    )


@pytest.fixture(scope="module")
def constructed_groups():
    return [construct_even(4), construct_odd_composite(9)]


def test_determinant_multiplicative(constructed_groups):
    rng = random.Random(5)
    for _ in range(500):
        G = rng.choice(constructed_groups)
        g, h = rng.choice(G.elements), rng.choice(G.elements)
        assert determinant(mat_mul(g, h)) == determinant(g) * determinant(h)


def _random_conjugator(n, m, rng):
    pool = [0, 1, -1, Z(m)]
    while True:
        c = CycMatrix([[rng.choice(pool) for _ in range(n)] for _ in range(n)], m)
        if determinant(c):
            return c


def test_char_poly_conjugation_invariant():
    rng = random.Random(11)
    G = construct_even(4)
    H = construct_odd_composite(9)
    for group in (G, H):
        for g in rng.sample(group.elements, 6):
            c = _random_conjugator(g.dim, g.ambient_order, rng)
            conj = mat_mul(mat_mul(mat_inverse(c), g), c)
            assert char_poly(conj) == char_poly(g)


def test_eigen_multiset_consistent_with_char_poly(constructed_groups):
    for G in constructed_groups:
        for g, k in zip(G.elements, G.orders):
            spec = eigen_multiset(g, k)
            assert sum(spec.values()) == g.dim
            p = char_poly(g)
            for root, mult in spec.items():
                assert p.lift(root.order)(root) == 0
                assert root_multiplicity(p.lift(root.order), root) == mult
            assert root_multiplicity(p, 1) == mult_eigen_one(g)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_anti_circulant_has_eigenvalue_one(n):
    rng = random.Random(n)
    m = 10
    sub = [Z(m, rng.randrange(m)) for _ in range(n - 1)]
    prod = Cyclotomic.one(m)
    for s in sub:
        prod = prod * s
    b = anti_circulant(prod.inverse(), sub, m)  # (-1)^(n-1) = 1 for odd n
    assert determinant(b) == 1
    p = char_poly(b)
    assert p == CycPoly.monomial_minus(n, 1, m)
    assert p(1) == 0
    assert mult_eigen_one(b) == 1
