"""Quotient-singularity invariants of a finite matrix group.

For a group G acting on C^n, ``Sigma_i`` collects the elements whose fixed
space has dimension at least i and ``H_i`` is the subgroup they generate.
The chain of ``H_i`` determines the dimension of the singular locus of the
invariant ring; determinants decide the Gorenstein property when no
pseudo-reflections are present.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .group import FiniteMatrixGroup, is_abelian, is_cyclic, subgroup_generated
from .linalg import determinant, mult_eigen_one

__all__ = [
    "Gorenstein",
    "Witness",
    "SMOOTH",
    "SigmaChain",
    "ClassificationReport",
    "REPORT_KEYS",
    "sigma_chain",
    "pseudo_reflections",
    "sing_locus_dim",
    "gorenstein_status",
    "in_sl",
    "classify",
    "is_odd_prime",
]

SMOOTH = "smooth"


class Gorenstein(str, Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"


class Witness(str, Enum):
    HOLDS = "holds"
    NOT_APPLICABLE = "not-applicable"
    VIOLATION = "VIOLATION"


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class SigmaChain:
    """``sigma[i]`` and ``h[i]`` for i = 0..n, as index sets into the group."""

    group: FiniteMatrixGroup
    fixed_dims: tuple[int, ...]
    sigma: tuple[frozenset, ...]
    h: tuple[frozenset, ...]

    @property
    def dim(self) -> int:
        return len(self.sigma) - 1


def sigma_chain(G: FiniteMatrixGroup) -> SigmaChain:
    n = G.dim
    fixed = tuple(mult_eigen_one(g) for g in G.elements)
    sigma = []
    h = []
    previous = None
    for i in range(n + 1):
        members = frozenset(k for k, d in enumerate(fixed) if d >= i)
        sigma.append(members)
        if previous is not None and members == previous[0]:
            h.append(previous[1])
            continue
        sub = subgroup_generated(G, sorted(members))
        span = frozenset(G.index[g] for g in sub.elements)
        h.append(span)
        previous = (members, span)
    return SigmaChain(G, fixed, tuple(sigma), tuple(h))


def pseudo_reflections(chain: SigmaChain) -> frozenset:
    """Indices of the non-identity elements fixing a hyperplane."""
    n = chain.dim
    if n < 1:
        return frozenset()
    return chain.sigma[n - 1] - {0}


def sing_locus_dim(chain: SigmaChain) -> Union[int, str]:
    """Dimension of the singular locus, or ``"smooth"`` when it is empty.

    Returns the largest ``i <= n - 2`` with ``H_i != H_{n-1}``.
    """
    n = chain.dim
    if n < 2:
        raise ValueError("dimension too small for chain criterion (need n >= 2)")
    top = chain.h[n - 1]
    if chain.h[0] == top:
        return SMOOTH
    return max(i for i in range(n - 1) if chain.h[i] != top)


def in_sl(G: FiniteMatrixGroup) -> bool:
    # det is multiplicative, so the generators decide membership in SL(n).
    return all(determinant(g) == 1 for g in G.generator_matrices)


def gorenstein_status(G: FiniteMatrixGroup, has_pr: bool) -> Gorenstein:
    if in_sl(G):
        return Gorenstein.TRUE
    return Gorenstein.INDETERMINATE if has_pr else Gorenstein.FALSE


@dataclass(frozen=True)
class ClassificationReport:
    dimension: int
    group_order: int
    cyclotomic_order: int
    in_sl: bool
    has_pseudo_reflections: bool
    fixed_point_free: bool
    isolated: bool
    sing_locus_dim: Union[int, str]
    cyclic: bool
    abelian: bool
    gorenstein: Gorenstein
    theorem_witness: Witness

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "group_order": self.group_order,
            "cyclotomic_order": self.cyclotomic_order,
            "in_sl": self.in_sl,
            "has_pseudo_reflections": self.has_pseudo_reflections,
            "fixed_point_free": self.fixed_point_free,
            "isolated": self.isolated,
            "sing_locus_dim": self.sing_locus_dim,
            "cyclic": self.cyclic,
            "abelian": self.abelian,
            "gorenstein": self.gorenstein.value,
            "theorem_witness": self.theorem_witness.value,
        }


REPORT_KEYS = (
    "dimension",
    "group_order",
    "cyclotomic_order",
    "in_sl",
    "has_pseudo_reflections",
    "fixed_point_free",
    "isolated",
    "sing_locus_dim",
    "cyclic",
    "abelian",
    "gorenstein",
    "theorem_witness",
)


def _witness(n: int, has_pr: bool, gor: Gorenstein, isolated: bool, cyclic: bool) -> Witness:
    # Odd prime dimension, no pseudo-reflections, Gorenstein and isolated
    # together force the group to be cyclic.
    if is_odd_prime(n) and not has_pr and gor is Gorenstein.TRUE and isolated:
        return Witness.HOLDS if cyclic else Witness.VIOLATION
    return Witness.NOT_APPLICABLE


def classify(G: FiniteMatrixGroup) -> ClassificationReport:
    n = G.dim
    chain = sigma_chain(G)
    has_pr = bool(pseudo_reflections(chain))
    fpf = chain.sigma[1] == frozenset({0})
    # In dimension 1 the invariant ring is a polynomial ring.
    sld = sing_locus_dim(chain) if n >= 2 else SMOOTH
    isolated = sld == 0
    cyclic = is_cyclic(G)
    gor = gorenstein_status(G, has_pr)
    return ClassificationReport(
        dimension=n,
        group_order=len(G),
        cyclotomic_order=G.ambient_order,
        in_sl=in_sl(G),
        has_pseudo_reflections=has_pr,
        fixed_point_free=fpf,
        isolated=isolated,
        sing_locus_dim=sld,
        cyclic=cyclic,
        abelian=is_abelian(G),
        gorenstein=gor,
        theorem_witness=_witness(n, has_pr, gor, isolated, cyclic),
    )
