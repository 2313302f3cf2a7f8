import itertools

import pytest

from qsing.constructors import OddCompositeParams, construct_even, metacyclic_generators
from qsing.cyclotomic import Cyclotomic
from qsing.group import (
    ClosureError,
    closure,
    element_order,
    is_abelian,
    is_cyclic,
    subgroup_generated,
)
from qsing.linalg import CycMatrix, diagonal, identity, mat_mul, mat_pow

Z = Cyclotomic.zeta


def words_up_to(gens, length):
    """All products of at most ``length`` generators (brute force)."""
    n, m = gens[0].dim, gens[0].ambient_order
    seen = {identity(n, m)}
    frontier = [identity(n, m)]
    for _ in range(length):
        frontier = [mat_mul(g, s) for g in frontier for s in gens]
        seen.update(frontier)
    return seen


def order8_generators():
    i = Z(4)
    return [diagonal([i, -i], 4), CycMatrix([[0, i], [i, 0]], 4)]


def test_trivial_closure():
    G = closure([identity(3, 1)])
    assert len(G) == 1 and G.orders == [1]


def test_order8_group_matches_word_enumeration():
    gens = order8_generators()
    G = closure(gens)
    assert len(G) == 8
    assert G.element_set == frozenset(words_up_to(gens, 8))


@pytest.mark.parametrize("q,l,alpha", [(3, 7, 2), (5, 11, 3)])
def test_metacyclic_normal_form(q, l, alpha):
    A, B = metacyclic_generators(OddCompositeParams(q * q, q, l, alpha))
    G = closure([A, B])
    normal_form = {mat_mul(mat_pow(A, r), mat_pow(B, s)) for r in range(q * q) for s in range(l)}
    assert len(G) == q * q * l
    assert G.element_set == frozenset(normal_form)
    assert mat_mul(B, A) == mat_mul(A, mat_pow(B, alpha))
    assert mat_mul(A, B) != mat_mul(B, A)


def test_element_order_examples():
    A, B = metacyclic_generators(OddCompositeParams(9, 3, 7, 2))
    assert element_order(identity(3, 21)) == 1
    assert element_order(A) == 9
    assert element_order(B) == 7


def test_infinite_group_hits_cap():
    shear = CycMatrix([[1, 1], [0, 1]], 1)
    with pytest.raises(ClosureError, match="exceeded cap"):
        closure([shear], cap=50)
    with pytest.raises(ClosureError):
        element_order(shear, cap=50)


def test_singular_generator_rejected():
    with pytest.raises(ValueError, match="not invertible"):
        closure([CycMatrix([[1, 0], [0, 0]], 1)])


def test_generators_of_mixed_order_are_lifted():
    G = closure([diagonal([Z(3), Z(3, 2)], 3), diagonal([-1, -1], 1)])
    assert G.ambient_order == 3 and len(G) == 6


@pytest.mark.parametrize(
    "gens",
    [
        order8_generators(),
        [diagonal([Z(7), Z(7, 2), Z(7, 4)], 7)],
        list(metacyclic_generators(OddCompositeParams(9, 3, 7, 2))),
        [diagonal([Z(4), 1], 4), diagonal([1, -1], 1)],
    ],
)
def test_group_axioms_and_lagrange(gens):
    G = closure(gens)
    assert G.elements[0] == identity(G.dim, G.ambient_order)
    for g in G.elements:
        assert len(G) % G.order_of(g) == 0
        assert element_order(g) == G.order_of(g)
        assert G.inverse(g) in G
        assert mat_mul(g, G.inverse(g)) == G.elements[0]
    for g, h in itertools.product(G.elements[:40], repeat=2):
        assert mat_mul(g, h) in G


def test_abelian_and_cyclic_examples():
    trivial = closure([identity(2, 1)])
    assert is_cyclic(trivial) and is_abelian(trivial)
    assert not is_abelian(closure(order8_generators()))
    c7 = closure([diagonal([Z(7), Z(7, 2), Z(7, 4)], 7)])
    assert len(c7) == 7 and is_cyclic(c7)


@pytest.mark.parametrize(
    "gens",
    [
        [diagonal([Z(4), 1], 4), diagonal([1, -1], 1)],
        [diagonal([Z(4), 1], 4), diagonal([1, Z(4)], 4)],
        [diagonal([Z(6), Z(6, 5)], 6)],
        [diagonal([-1, 1], 1), diagonal([1, -1], 1), diagonal([Z(3), 1], 3)],
    ],
)
def test_cyclic_iff_exponent_equals_order_for_abelian(gens):
    G = closure(gens)
    assert is_abelian(G)
    assert is_cyclic(G) == (G.exponent() == len(G))


def test_subgroup_generated_examples():
    G = closure(order8_generators())
    assert len(subgroup_generated(G, [0])) == 1
    assert subgroup_generated(G, range(len(G))) is G
    refl = closure([diagonal([-1, -1, 1], 1)])
    sigma1 = [i for i in range(len(refl)) if i != 0]
    assert len(subgroup_generated(refl, sigma1)) == 2


def test_subgroup_of_even_family():
    G = construct_even(2)
    a = G.index[G.generator_matrices[0]]
    H = subgroup_generated(G, [a])
    assert len(H) == 4 and is_cyclic(H)
