"""Exact classification of quotient singularities C^n/G for finite G in GL(n)
given by generators over a cyclotomic field."""

from .classify import (
    SMOOTH,
    ClassificationReport,
    Gorenstein,
    SigmaChain,
    Witness,
    classify,
    gorenstein_status,
    pseudo_reflections,
    sigma_chain,
    sing_locus_dim,
)
from .constructors import (
    ConstructionError,
    OddCompositeParams,
    conjugate_embed,
    construct_even,
    construct_odd_composite,
    dirichlet_prime,
    metacyclic_generators,
    odd_composite_params,
    order_q_unit,
)
from .cyclotomic import (
    Cyclotomic,
    CyclotomicError,
    conjugate,
    cyclotomic_polynomial,
    lift,
    lift_common,
    reduce,
    totient,
)
from .group import (
    ClosureError,
    FiniteMatrixGroup,
    closure,
    element_order,
    is_abelian,
    is_cyclic,
    subgroup_generated,
)
from .linalg import (
    CycMatrix,
    CycPoly,
    anti_circulant,
    block_diagonal,
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
)
from .specfmt import GroupSpec, SpecError, emit_spec, parse_spec

__version__ = "0.1.0"
