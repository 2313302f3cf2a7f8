"""Executable checks of the algebraic facts behind the constructions.

Each suite returns a :class:`SuiteResult` holding named pass/fail checks, so
the same code backs ``qsing verify-paper`` and the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .classify import SMOOTH, Gorenstein, Witness, classify
from .constructors import (
    ConstructionError,
    OddCompositeParams,
    conjugate_embed,
    construct_even,
    construct_odd_composite,
    is_prime,
    metacyclic_generators,
    odd_composite_params,
)
from .corpus import (
    CYCLIC_EXAMPLES,
    DEFAULT_N_LIST,
    cyclic_diagonal,
    random_conjugates,
    small_examples,
)
from .cyclotomic import Cyclotomic
from .group import FiniteMatrixGroup, closure, element_order
from .linalg import (
    CycMatrix,
    CycPoly,
    anti_circulant,
    char_poly,
    determinant,
    identity,
    mat_mul,
    mat_pow,
    mult_eigen_one,
    root_multiplicity,
)

__all__ = [
    "Check",
    "SuiteResult",
    "metacyclic_checks",
    "anti_circulant_checks",
    "family_checks",
    "eigen_cross_checks",
    "cyclic_checks",
    "chain_example_checks",
    "suite_for_dimension",
    "run_suites",
]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def metacyclic_checks(params: OddCompositeParams) -> list[Check]:
    """Defining relations, orders, fixed points and char polys of <A, B>, plus the embedding."""
    q, l, alpha = params.q, params.l, params.alpha
    m = q * l
    A, B = metacyclic_generators(params)
    x = Cyclotomic.zeta(m, l)
    out = SuiteResult("")
    tag = f"(q={q}, l={l}, alpha={alpha})"

    out.add(f"det A = x {tag}", determinant(A) == x)
    out.add(f"det B = 1 {tag}", determinant(B) == 1)
    out.add(
        f"l | 1 + alpha + ... + alpha^(q-1) {tag}",
        sum(pow(alpha, k, l) for k in range(q)) % l == 0,
    )
    a_inv = mat_pow(A, q * q - 1)
    out.add(f"A^-1 B A = B^alpha {tag}", mat_mul(mat_mul(a_inv, B), A) == mat_pow(B, alpha))
    out.add(f"AB != BA {tag}", mat_mul(A, B) != mat_mul(B, A))
    out.add(f"A^q = x I {tag}", mat_pow(A, q) == identity(q, m).scale(x))
    ord_a, ord_b = element_order(A), element_order(B)
    out.add(f"ord A = q^2 {tag}", ord_a == q * q, f"got {ord_a}")
    out.add(f"ord B = l {tag}", ord_b == l, f"got {ord_b}")
    G = closure([A, B])
    out.add(f"|<A, B>| = q^2 l {tag}", len(G) == q * q * l, f"got {len(G)}")

    bad_fixed, bad_poly = [], []
    a_pow = identity(q, m)
    b_pows = [mat_pow(B, s) for s in range(l)]
    for r in range(q * q):
        u, v = divmod(r, q)
        for s in range(l):
            g = mat_mul(a_pow, b_pows[s])
            if (r, s) != (0, 0) and mult_eigen_one(g) != 0:
                bad_fixed.append((r, s))
            if v:
                if char_poly(g) != CycPoly.monomial_minus(q, x ** v, m):
                    bad_poly.append((r, s))
            elif g != identity(q, m) and (
                not g.is_diagonal() or any(d == 1 for d in g.diagonal())
            ):
                bad_poly.append((r, s))
        a_pow = mat_mul(a_pow, A)
    out.add(f"1 is not an eigenvalue of A^r B^s, (r,s) != (0,0) {tag}", not bad_fixed,
            f"failing (r, s): {bad_fixed[:5]}")
    out.add(f"char poly of A^r B^s is t^q - x^v for v != 0 {tag}", not bad_poly,
            f"failing (r, s): {bad_poly[:5]}")

    fa = conjugate_embed(A, params.n_prime)
    fb = conjugate_embed(B, params.n_prime)
    out.add(f"det f(A) = 1 {tag}", determinant(fa) == 1)
    out.add(f"det f(B) = 1 {tag}", determinant(fb) == 1)
    out.add(f"f(A) f(B) != f(B) f(A) {tag}", mat_mul(fa, fb) != mat_mul(fb, fa))
    rng = random.Random(q * 1000 + l)
    hom = all(
        conjugate_embed(mat_mul(c, d), params.n_prime)
        == mat_mul(conjugate_embed(c, params.n_prime), conjugate_embed(d, params.n_prime))
        for c, d in ((rng.choice(G.elements), rng.choice(G.elements)) for _ in range(20))
    )
    out.add(f"f is multiplicative {tag}", hom)
    return out.checks


def anti_circulant_checks(n: int, trials: int = 5, seed: int = 0) -> list[Check]:
    """det-1 anti-circulant matrices have characteristic polynomial t^n + (-1)^n."""
    rng = random.Random(seed + n)
    out = SuiteResult("")
    m = 12
    bad = []
    for _ in range(trials):
        sub = [Cyclotomic.zeta(m, rng.randrange(m)) for _ in range(n - 1)]
        prod = Cyclotomic.one(m)
        for b in sub:
            prod = prod * b
        corner = Cyclotomic.rational(m, (-1) ** (n - 1)) * prod.inverse()
        b = anti_circulant(corner, sub, m)
        if determinant(b) != 1:
            bad.append("det")
            continue
        p = char_poly(b)
        expected = CycPoly.monomial_minus(n, -((-1) ** n), m)
        if p != expected:
            bad.append("char poly")
        if n % 2 == 1 and (p(1) != 0 or mult_eigen_one(b) == 0):
            bad.append("eigenvalue 1")
    out.add(f"anti-circulant char poly = t^{n} + (-1)^{n}", not bad, ", ".join(bad))
    return out.checks


def family_checks(G: FiniteMatrixGroup, label: str) -> list[Check]:
    r = classify(G)
    out = SuiteResult("")
    out.add(f"{label}: in SL(n)", r.in_sl)
    out.add(f"{label}: Gorenstein", r.gorenstein is Gorenstein.TRUE)
    out.add(f"{label}: isolated singularity", r.isolated, f"sing_locus_dim={r.sing_locus_dim}")
    out.add(f"{label}: fixed-point-free", r.fixed_point_free)
    out.add(f"{label}: not cyclic", not r.cyclic)
    out.add(f"{label}: not abelian", not r.abelian)
    out.add(f"{label}: no theorem violation", r.theorem_witness is not Witness.VIOLATION)
    return out.checks


def eigen_cross_checks(G: FiniteMatrixGroup, label: str) -> list[Check]:
    """Rank-based fixed dimension against root-1 multiplicity of the char poly."""
    bad = [
        i
        for i, g in enumerate(G.elements)
        if mult_eigen_one(g) != root_multiplicity(char_poly(g), 1)
    ]
    return [Check(f"{label}: rank and char-poly eigenvalue-1 counts agree", not bad,
                  f"failing element indices: {bad[:5]}")]


def cyclic_checks(n: int, conjugations: int, seed: int = 0) -> list[Check]:
    out = SuiteResult("")
    for m, exps in CYCLIC_EXAMPLES.get(n, ()):
        G = cyclic_diagonal(m, exps)
        r = classify(G)
        out.add(f"<diag(zeta_{m}^{list(exps)})>: witness holds",
                r.theorem_witness is Witness.HOLDS, r.theorem_witness.value)
        out.checks.extend(eigen_cross_checks(G, f"<diag(zeta_{m}^{list(exps)})>"))
    rng = random.Random(seed * 7919 + n)
    violations = []
    for name, G in random_conjugates(n, conjugations, rng):
        r = classify(G)
        if r.theorem_witness is not Witness.HOLDS:
            violations.append(f"{name}: {r.theorem_witness.value}")
    out.add(f"{conjugations} random conjugates in dimension {n}: witness holds", not violations,
            "; ".join(violations[:3]))
    try:
        odd_composite_params(n)
        refused = False
    except ConstructionError:
        refused = True
    out.add(f"odd-composite constructor refuses n={n}", refused)
    return out.checks


def chain_example_checks() -> list[Check]:
    out = SuiteResult("")
    expected = {
        "trivial n=3": SMOOTH,
        "<diag(-1,-1,1)>": 1,
        "<diag(-1,1)>": SMOOTH,
        "<diag(z3,1)>": SMOOTH,
        "<diag(z3,z3)>": 0,
    }
    for name, G in small_examples():
        r = classify(G)
        out.add(f"{name}: sing_locus_dim = {expected[name]}", r.sing_locus_dim == expected[name],
                f"got {r.sing_locus_dim}")
        out.add(f"{name}: no theorem violation", r.theorem_witness is not Witness.VIOLATION)
    return out.checks


def suite_for_dimension(n: int, conjugations: int = 10, seed: int = 0) -> SuiteResult:
    if n < 2:
        raise ValueError(f"no built-in suite for n = {n}")
    if n % 2 == 0:
        s = SuiteResult(f"even family n={n}")
        G = construct_even(n)
        s.add(f"n={n}: |G| = 8", len(G) == 8, f"got {len(G)}")
        s.checks.extend(family_checks(G, f"n={n}"))
        s.checks.extend(eigen_cross_checks(G, f"n={n}"))
        return s
    if is_prime(n):
        s = SuiteResult(f"odd prime n={n}")
        s.checks.extend(cyclic_checks(n, conjugations, seed))
        s.checks.extend(anti_circulant_checks(n, seed=seed))
        return s
    params = odd_composite_params(n)
    s = SuiteResult(
        f"odd composite n={n} (q={params.q}, l={params.l}, alpha={params.alpha})"
    )
    s.checks.extend(metacyclic_checks(params))
    G = construct_odd_composite(n)
    s.add(f"n={n}: |f(G)| = q^2 l", len(G) == params.q ** 2 * params.l, f"got {len(G)}")
    s.checks.extend(family_checks(G, f"n={n}"))
    s.checks.extend(eigen_cross_checks(G, f"n={n}"))
    return s


def run_suites(
    n_list: Optional[Sequence[int]] = None,
    conjugations: int = 10,
    seed: int = 0,
    progress: Optional[Callable[[SuiteResult], None]] = None,
) -> list[SuiteResult]:
    results = []
    for n in n_list or DEFAULT_N_LIST:
        res = suite_for_dimension(n, conjugations, seed)
        results.append(res)
        if progress:
            progress(res)
    if n_list is None:
        res = SuiteResult("singular-locus chain examples", chain_example_checks())
        results.append(res)
        if progress:
            progress(res)
    return results
