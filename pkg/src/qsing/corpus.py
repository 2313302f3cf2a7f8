"""Built-in example groups: the constructed families, cyclic fixed-point-free
diagonal groups in odd prime dimension, small groups with reflections, and
random conjugates of any of them."""

from __future__ import annotations

import random
from typing import Iterator, Optional, Sequence

from .constructors import construct_even, construct_odd_composite, is_prime
from .cyclotomic import Cyclotomic
from .group import FiniteMatrixGroup, closure
from .linalg import CycMatrix, determinant, diagonal, mat_inverse, mat_mul

__all__ = [
    "CYCLIC_EXAMPLES",
    "DEFAULT_N_LIST",
    "cyclic_diagonal",
    "small_examples",
    "random_invertible",
    "conjugate_group",
    "builtin_corpus",
]

DEFAULT_N_LIST = (2, 3, 4, 5, 6, 7, 9, 15)

# (m, exponents): diag(zeta_m ** e for e in exponents). Every exponent is a
# unit mod m, so no nontrivial power has eigenvalue 1, and the exponents sum
# to 0 mod m, so the determinant is 1.
CYCLIC_EXAMPLES: dict[int, tuple[tuple[int, tuple[int, ...]], ...]] = {
    3: ((7, (1, 2, 4)), (9, (1, 1, 7)), (3, (1, 1, 1))),
    5: ((11, (1, 3, 9, 5, 4)), (5, (1, 1, 1, 1, 1))),
    7: ((3, (1, 1, 1, 1, 1, 2, 2)), (7, (1, 1, 1, 1, 1, 1, 1))),
}


def cyclic_diagonal(m: int, exponents: Sequence[int]) -> FiniteMatrixGroup:
    return closure([diagonal([Cyclotomic.zeta(m, e) for e in exponents], m)])


def small_examples() -> list[tuple[str, FiniteMatrixGroup]]:
    """Groups with reflections or trivial action, for the chain criterion."""
    z3 = Cyclotomic.zeta(3)
    return [
        ("trivial n=3", closure([diagonal([1, 1, 1], 1)])),
        ("<diag(-1,-1,1)>", closure([diagonal([-1, -1, 1], 1)])),
        ("<diag(-1,1)>", closure([diagonal([-1, 1], 1)])),
        ("<diag(z3,1)>", closure([diagonal([z3, 1], 3)])),
        ("<diag(z3,z3)>", closure([diagonal([z3, z3], 3)])),
    ]


def random_invertible(n: int, m: int, rng: random.Random) -> CycMatrix:
    """Random invertible matrix with entries drawn from {0, 1, -1, zeta_m}."""
    pool = [0, 1, -1, Cyclotomic.zeta(m)]
    while True:
        c = CycMatrix([[rng.choice(pool) for _ in range(n)] for _ in range(n)], m)
        if determinant(c):
            return c


def conjugate_group(G: FiniteMatrixGroup, c: CycMatrix) -> FiniteMatrixGroup:
    """The group ``c^-1 G c``, closed from the conjugated generators."""
    cinv = mat_inverse(c)
    return closure([mat_mul(mat_mul(cinv, g), c) for g in G.generator_matrices])


def random_conjugates(
    n: int, count: int, rng: random.Random
) -> Iterator[tuple[str, FiniteMatrixGroup]]:
    examples = CYCLIC_EXAMPLES[n]
    for k in range(count):
        m, exps = examples[k % len(examples)]
        G = cyclic_diagonal(m, exps)
        c = random_invertible(n, m, rng)
        yield f"c^-1 <diag(zeta_{m}^{list(exps)})> c #{k}", conjugate_group(G, c)


def builtin_corpus(
    n_list: Optional[Sequence[int]] = None,
) -> list[tuple[str, FiniteMatrixGroup]]:
    """Named groups for the given dimensions (default: ``DEFAULT_N_LIST``).

    Even n gives the block family, odd composite n the metacyclic family and
    odd prime n the cyclic diagonal examples. The small reflection examples
    are added when no list is given.
    """
    out = []
    for n in n_list or DEFAULT_N_LIST:
        if n % 2 == 0:
            out.append((f"even family n={n}", construct_even(n)))
        elif is_prime(n):
            for m, exps in CYCLIC_EXAMPLES.get(n, ()):
                out.append((f"<diag(zeta_{m}^{list(exps)})>", cyclic_diagonal(m, exps)))
        elif n > 1:
            out.append((f"odd-composite family n={n}", construct_odd_composite(n)))
    if n_list is None:
        out.extend(small_examples())
    return out
