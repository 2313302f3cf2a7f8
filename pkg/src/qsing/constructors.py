"""Non-cyclic fixed-point-free subgroups of SL(n) for n not an odd prime.

Even n: n/2 equal diagonal copies of the order-8 group generated by
``diag(i, -i)`` and ``[[0, i], [i, 0]]``.

Odd composite n = q * n': the metacyclic group generated by a twisted
q-cycle ``A`` (corner entry a primitive q-th root x) and a diagonal ``B``
of powers z**(alpha**k) of a primitive l-th root z, where l = 1 mod 2q is
prime and alpha has order q mod l. It is embedded into SL(n) by stacking
(q + n')/2 copies of each matrix with (n' - q)/2 copies of its complex
conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclotomic import Cyclotomic
from .group import DEFAULT_CAP, FiniteMatrixGroup, closure
from .linalg import CycMatrix, block_diagonal, diagonal

__all__ = [
    "ConstructionError",
    "OddCompositeParams",
    "is_prime",
    "smallest_prime_factor",
    "even_generators",
    "construct_even",
    "dirichlet_prime",
    "order_q_unit",
    "odd_composite_params",
    "metacyclic_generators",
    "conjugate_embed",
    "odd_composite_generators",
    "construct_odd_composite",
]

DIRICHLET_SEARCH_LIMIT = 10**6


class ConstructionError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


# -- even dimension ---------------------------------------------------------


def _order8_pair() -> tuple[CycMatrix, CycMatrix]:
    i = Cyclotomic.zeta(4)
    a = diagonal([i, -i], 4)
    b = CycMatrix([[0, i], [i, 0]], 4)
    return a, b


def even_generators(n: int) -> list[CycMatrix]:
    if n < 2 or n % 2:
        raise ConstructionError(f"even construction requires even n >= 2, got n = {n}")
    return [block_diagonal([g] * (n // 2)) for g in _order8_pair()]


def construct_even(n: int, cap: int = DEFAULT_CAP) -> FiniteMatrixGroup:
    return closure(even_generators(n), cap)


# -- odd composite dimension ------------------------------------------------


def dirichlet_prime(q: int, limit: int = DIRICHLET_SEARCH_LIMIT) -> int:
    """Smallest prime of the form ``2*q*k + 1`` with ``k >= 1``."""
    if not (q > 2 and is_prime(q)):
        raise ConstructionError(f"q must be an odd prime, got {q}")
    l = 2 * q + 1
    while l <= limit:
        if is_prime(l):
            return l
        l += 2 * q
    raise ConstructionError(f"no prime = 1 mod {2 * q} below {limit}")


def order_q_unit(l: int, q: int) -> int:
    """Smallest ``alpha`` in [2, l-1] with ``alpha**q = 1 (mod l)``."""
    if (l - 1) % q:
        raise ConstructionError(f"{q} does not divide {l} - 1")
    for alpha in range(2, l):
        if pow(alpha, q, l) == 1:
            return alpha
    raise ConstructionError(f"no element of order {q} modulo {l}")


@dataclass(frozen=True)
class OddCompositeParams:
    n: int
    q: int
    l: int
    alpha: int

    def __post_init__(self):
        n, q, l, alpha = self.n, self.q, self.l, self.alpha
        if n % 2 == 0:
            raise ConstructionError(f"n = {n} is even; the odd-composite family needs odd n")
        if not (q > 2 and is_prime(q)) or n % q:
            raise ConstructionError(f"q = {q} must be an odd prime factor of n = {n}")
        if q > n // q:
            raise ConstructionError(f"q = {q} exceeds n/q = {n // q}")
        if not is_prime(l) or l % (2 * q) != 1:
            raise ConstructionError(f"l = {l} must be a prime congruent to 1 mod {2 * q}")
        if pow(alpha, q, l) != 1 or alpha % l == 1:
            raise ConstructionError(f"alpha = {alpha} must have order {q} modulo {l}")

    @property
    def n_prime(self) -> int:
        return self.n // self.q

    @property
    def ambient_order(self) -> int:
        return self.q * self.l


def odd_composite_params(n: int, q: Optional[int] = None) -> OddCompositeParams:
    if n % 2 == 0:
        raise ConstructionError(f"n = {n} is even; use the even family")
    if n < 9 or is_prime(n):
        if is_prime(n):
            raise ConstructionError(
                f"n = {n} is an odd prime; no non-cyclic fixed-point-free subgroup "
                "of SL(n) exists, so no such construction exists"
            )
        raise ConstructionError(f"n = {n} is not an odd composite number")
    if q is None:
        q = smallest_prime_factor(n)
    elif n % q:
        raise ConstructionError(f"q = {q} does not divide n = {n}")
    if not (q > 2 and is_prime(q)):
        raise ConstructionError(f"q = {q} is not an odd prime")
    if q > n // q:
        raise ConstructionError(f"q = {q} exceeds n/q = {n // q}; need q <= n/q")
    l = dirichlet_prime(q)
    return OddCompositeParams(n=n, q=q, l=l, alpha=order_q_unit(l, q))


def metacyclic_generators(params: OddCompositeParams) -> tuple[CycMatrix, CycMatrix]:
    """The q x q matrices ``A`` (twisted cycle) and ``B`` (diagonal) over Q(zeta_ql)."""
    q, l, alpha = params.q, params.l, params.alpha
    m = q * l
    x = Cyclotomic.zeta(m, l)
    rows = [[0] * q for _ in range(q)]
    rows[0][q - 1] = x
    for i in range(1, q):
        rows[i][i - 1] = 1
    a = CycMatrix(rows, m)
    b = diagonal([Cyclotomic.zeta(m, q * pow(alpha, k, l)) for k in range(q)], m)
    return a, b


def conjugate_embed(c: CycMatrix, n_prime: int) -> CycMatrix:
    """Block diagonal of (q+n')/2 copies of ``c`` then (n'-q)/2 of its conjugate."""
    q = c.dim
    if q % 2 == 0 or n_prime % 2 == 0:
        raise ConstructionError(f"block size {q} and n' = {n_prime} must both be odd")
    if n_prime < q:
        raise ConstructionError(f"n' = {n_prime} must be at least the block size {q}")
    cbar = c.conjugate()
    return block_diagonal([c] * ((q + n_prime) // 2) + [cbar] * ((n_prime - q) // 2))


def odd_composite_generators(n: int, q: Optional[int] = None) -> list[CycMatrix]:
    params = odd_composite_params(n, q)
    return [conjugate_embed(g, params.n_prime) for g in metacyclic_generators(params)]


def construct_odd_composite(
    n: int, q: Optional[int] = None, cap: int = DEFAULT_CAP
) -> FiniteMatrixGroup:
    return closure(odd_composite_generators(n, q), cap)
