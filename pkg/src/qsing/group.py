"""Finite matrix groups generated by a list of invertible matrices."""

from __future__ import annotations

from collections import deque
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .linalg import CycMatrix, determinant, identity, mat_mul, mat_pow

__all__ = [
    "DEFAULT_CAP",
    "ClosureError",
    "FiniteMatrixGroup",
    "closure",
    "element_order",
    "is_abelian",
    "is_cyclic",
    "subgroup_generated",
    "common_order",
]

DEFAULT_CAP = 100_000


class ClosureError(RuntimeError):
    pass


class FiniteMatrixGroup:
    """A closed, deduplicated set of matrices with cached element orders.

    ``elements[0]`` is always the identity. ``generators`` holds indices into
    ``elements``; ``orders[i]`` is the multiplicative order of ``elements[i]``.
    """

    def __init__(
        self,
        elements: Sequence[CycMatrix],
        generators: Sequence[int],
        orders: Sequence[int],
    ):
        self.elements = list(elements)
        self.generators = list(generators)
        self.orders = list(orders)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.dim = self.elements[0].dim
        self.ambient_order = self.elements[0].ambient_order

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: CycMatrix) -> bool:
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def generator_matrices(self) -> list[CycMatrix]:
        return [self.elements[i] for i in self.generators]

    @property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def order_of(self, g: CycMatrix) -> int:
        return self.orders[self.index[g]]

    def exponent(self) -> int:
        return lcm(*self.orders)

    def inverse(self, g: CycMatrix) -> CycMatrix:
        return mat_pow(g, self.order_of(g) - 1)

    def same_elements(self, other: "FiniteMatrixGroup") -> bool:
        return len(self) == len(other) and all(g in other.index for g in self.elements)

    def __repr__(self) -> str:
        return (
            f"FiniteMatrixGroup(order={len(self)}, dim={self.dim}, "
            f"ambient_order={self.ambient_order})"
        )


def common_order(mats: Iterable[CycMatrix]) -> int:
    return lcm(*(g.ambient_order for g in mats))


def _bfs(
    start: Sequence[CycMatrix],
    gens: Sequence[CycMatrix],
    cap: Optional[int],
) -> list[CycMatrix]:
    elements = list(start)
    seen = set(elements)
    queue = deque(elements)
    while queue:
        g = queue.popleft()
        for s in gens:
            h = mat_mul(g, s)
            if h not in seen:
                seen.add(h)
                elements.append(h)
                if cap is not None and len(elements) > cap:
                    raise ClosureError(
                        f"closure exceeded cap of {cap} elements (group may be infinite)"
                    )
                queue.append(h)
    return elements


def _orders(elements: list[CycMatrix], cap: int) -> list[int]:
    index = {g: i for i, g in enumerate(elements)}
    orders = [0] * len(elements)
    eye = elements[0]
    for i, g in enumerate(elements):
        if orders[i]:
            continue
        powers = [i]
        h = g
        while h != eye:
            h = mat_mul(h, g)
            powers.append(index[h])
            if len(powers) > cap:
                raise ClosureError(f"element order exceeds cap of {cap}")
        k = len(powers)
        # g^j has order k / gcd(j, k); fill those in for free.
        for j, idx in enumerate(powers, start=1):
            if not orders[idx]:
                orders[idx] = k // gcd(j, k)
    return orders


def closure(generators: Sequence[CycMatrix], cap: int = DEFAULT_CAP) -> FiniteMatrixGroup:
    """Breadth-first closure of ``generators`` under right multiplication.

    Generators of different ambient orders are lifted to their common
    multiple. Raises :class:`ClosureError` if more than ``cap`` elements
    appear and ``ValueError`` for a singular or mis-shaped generator.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    n = generators[0].dim
    if any(g.dim != n for g in generators):
        raise ValueError("generators must share one dimension")
    m = common_order(generators)
    generators = [g.lift(m) for g in generators]
    for k, g in enumerate(generators):
        if not determinant(g):
            raise ValueError(f"generator {k} is not invertible")
    eye = identity(n, m)
    elements = _bfs([eye], generators, cap)
    orders = _orders(elements, cap)
    index = {g: i for i, g in enumerate(elements)}
    return FiniteMatrixGroup(elements, [index[g] for g in generators], orders)


def element_order(g: CycMatrix, cap: int = DEFAULT_CAP) -> int:
    """Least ``k >= 1`` with ``g**k == I``."""
    eye = identity(g.dim, g.ambient_order)
    h = g
    k = 1
    while h != eye:
        h = mat_mul(h, g)
        k += 1
        if k > cap:
            raise ClosureError(f"element order exceeds cap of {cap}")
    return k


def is_abelian(G: FiniteMatrixGroup) -> bool:
    gens = G.generator_matrices
    return all(
        mat_mul(a, b) == mat_mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
    )


def is_cyclic(G: FiniteMatrixGroup) -> bool:
    return max(G.orders) == len(G)


def subgroup_generated(G: FiniteMatrixGroup, subset: Iterable[int]) -> FiniteMatrixGroup:
    """Subgroup of ``G`` generated by the elements with the given indices.

    Generators are added one at a time and only when they fall outside the
    subgroup built so far, so at most log2|G| closures run.
    """
    eye = G.elements[0]
    current = [eye]
    current_set = {eye}
    gens: list[CycMatrix] = []
    for i in subset:
        g = G.elements[i]
        if g in current_set:
            continue
        gens.append(g)
        current = _bfs([eye], gens, len(G))
        current_set = set(current)
        if len(current) == len(G):
            break
    if len(current) == len(G):
        return G
    orders = [G.order_of(g) for g in current]
    index = {g: i for i, g in enumerate(current)}
    return FiniteMatrixGroup(current, [index[g] for g in gens], orders)
