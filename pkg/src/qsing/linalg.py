"""Exact linear algebra over Q(zeta_m).

Matrices are small (dimension at most a few dozen) and mostly sparse, so rows
are stored as tuples and products skip zero entries.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic, conjugate, lift

__all__ = [
    "CycMatrix",
    "CycPoly",
    "identity",
    "zero_matrix",
    "diagonal",
    "block_diagonal",
    "anti_circulant",
    "mat_mul",
    "mat_pow",
    "mat_inverse",
    "determinant",
    "rank",
    "char_poly",
    "mult_eigen_one",
    "eigen_multiset",
    "root_multiplicity",
]


@lru_cache(maxsize=None)
def _zero(m: int) -> Cyclotomic:
    return Cyclotomic.zero(m)


@lru_cache(maxsize=None)
def _one(m: int) -> Cyclotomic:
    return Cyclotomic.one(m)


def _entry(x, m: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        if x.order != m:
            x = lift(x, m)
        return x
    return Cyclotomic.rational(m, x)


class CycMatrix:
    """Immutable square matrix with entries in Q(zeta_m).

    Every entry carries the same ``ambient_order``; plain integers and
    fractions in ``rows`` are coerced and entries of a smaller order dividing
    ``ambient_order`` are lifted.
    """

    __slots__ = ("dim", "ambient_order", "rows", "_nz", "_hash")

    def __init__(self, rows: Iterable[Iterable], ambient_order: int):
        m = ambient_order
        rows = tuple(tuple(_entry(x, m) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self._init(rows, m)

    def _init(self, rows: tuple, m: int) -> None:
        self.dim = len(rows)
        self.ambient_order = m
        self.rows = rows
        self._nz = None
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, m: int) -> "CycMatrix":
        obj = cls.__new__(cls)
        obj._init(rows, m)
        return obj

    @property
    def nonzero(self) -> tuple:
        """Per row, the ``(column, value)`` pairs of nonzero entries."""
        nz = self._nz
        if nz is None:
            nz = tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self.rows)
            self._nz = nz
        return nz

    def __getitem__(self, ij) -> Cyclotomic:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (
            self.ambient_order == other.ambient_order
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ambient_order, self.rows))
            self._hash = h
        return h

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "CycMatrix":
        return mat_pow(self, k)

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        _check_compatible(self, other)
        return CycMatrix._raw(
            tuple(
                tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
            ),
            self.ambient_order,
        )

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        _check_compatible(self, other)
        return CycMatrix._raw(
            tuple(
                tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
            ),
            self.ambient_order,
        )

    def scale(self, c) -> "CycMatrix":
        c = _entry(c, self.ambient_order)
        return CycMatrix._raw(
            tuple(tuple(c * x for x in r) for r in self.rows), self.ambient_order
        )

    def trace(self) -> Cyclotomic:
        t = _zero(self.ambient_order)
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def conjugate(self) -> "CycMatrix":
        """Entrywise complex conjugate."""
        return CycMatrix._raw(
            tuple(tuple(conjugate(x) for x in r) for r in self.rows), self.ambient_order
        )

    def lift(self, order: int) -> "CycMatrix":
        if order == self.ambient_order:
            return self
        return CycMatrix._raw(
            tuple(tuple(lift(x, order) for x in r) for r in self.rows), order
        )

    def is_identity(self) -> bool:
        one = _one(self.ambient_order)
        return all(
            (x == one) if i == j else not x
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_diagonal(self) -> bool:
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> list[Cyclotomic]:
        return [self.rows[i][i] for i in range(self.dim)]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"CycMatrix(m={self.ambient_order}, [{body}])"


def _check_compatible(a: CycMatrix, b: CycMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.ambient_order != b.ambient_order:
        raise ValueError(
            f"ambient order mismatch: {a.ambient_order} vs {b.ambient_order}; lift first"
        )


def identity(n: int, m: int = 1) -> CycMatrix:
    return _identity(n, m)


@lru_cache(maxsize=256)
def _identity(n: int, m: int) -> CycMatrix:
    z, o = _zero(m), _one(m)
    return CycMatrix._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), m)


def zero_matrix(n: int, m: int = 1) -> CycMatrix:
    z = _zero(m)
    return CycMatrix._raw(tuple((z,) * n for _ in range(n)), m)


def diagonal(entries: Sequence, m: int) -> CycMatrix:
    n = len(entries)
    z = _zero(m)
    vals = [_entry(x, m) for x in entries]
    return CycMatrix._raw(
        tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), m
    )


def block_diagonal(blocks: Sequence[CycMatrix]) -> CycMatrix:
    m = blocks[0].ambient_order
    if any(b.ambient_order != m for b in blocks):
        raise ValueError("blocks must share one ambient order")
    n = sum(b.dim for b in blocks)
    z = _zero(m)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((z,) * offset + r + (z,) * (n - offset - b.dim))
        offset += b.dim
    return CycMatrix._raw(tuple(rows), m)


def anti_circulant(corner, subdiagonal: Sequence, m: int) -> CycMatrix:
    """Matrix with ``subdiagonal`` below the diagonal and ``corner`` at (0, n-1).

    Its determinant is ``(-1)**(n-1) * corner * prod(subdiagonal)``.
    """
    n = len(subdiagonal) + 1
    z = _zero(m)
    rows = [[z] * n for _ in range(n)]
    rows[0][n - 1] = _entry(corner, m)
    for i, b in enumerate(subdiagonal, start=1):
        rows[i][i - 1] = _entry(b, m)
    return CycMatrix._raw(tuple(tuple(r) for r in rows), m)


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    _check_compatible(a, b)
    n, m = a.dim, a.ambient_order
    z = _zero(m)
    bnz = b.nonzero
    out = []
    for arow in a.nonzero:
        acc: dict[int, Cyclotomic] = {}
        for k, x in arow:
            for j, y in bnz[k]:
                p = x * y
                prev = acc.get(j)
                acc[j] = p if prev is None else prev + p
        out.append(tuple(acc.get(j, z) for j in range(n)))
    return CycMatrix._raw(tuple(out), m)


def mat_pow(a: CycMatrix, k: int) -> CycMatrix:
    """``a**k`` for ``k >= 0`` by repeated squaring."""
    if k < 0:
        raise ValueError("negative exponent; invert explicitly")
    result = identity(a.dim, a.ambient_order)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _rows_list(a: CycMatrix) -> list[list[Cyclotomic]]:
    return [list(r) for r in a.rows]


def determinant(a: CycMatrix) -> Cyclotomic:
    """Gaussian elimination, pivoting on the first nonzero entry of each column."""
    rows = _rows_list(a)
    n, m = a.dim, a.ambient_order
    det = _one(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return _zero(m)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        below = [r for r in range(col + 1, n) if rows[r][col]]
        if not below:
            continue
        inv = p.inverse()
        prow = rows[col]
        for r in below:
            f = rows[r][col] * inv
            row = rows[r]
            for j in range(col + 1, n):
                if prow[j]:
                    row[j] = row[j] - f * prow[j]
            row[col] = _zero(m)
    return det


def rank(a: CycMatrix) -> int:
    rows = _rows_list(a)
    n, m = a.dim, a.ambient_order
    rk = 0
    for col in range(n):
        piv = next((r for r in range(rk, n) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        below = [r for r in range(rk + 1, n) if rows[r][col]]
        if below:
            # Inverting is the costly step; skip it when nothing is eliminated.
            inv = prow[col].inverse()
            for r in below:
                f = rows[r][col] * inv
                row = rows[r]
                for j in range(col + 1, n):
                    if prow[j]:
                        row[j] = row[j] - f * prow[j]
                row[col] = _zero(m)
        rk += 1
    return rk


def mat_inverse(a: CycMatrix) -> CycMatrix:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` if singular."""
    n, m = a.dim, a.ambient_order
    z, o = _zero(m), _one(m)
    rows = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(a.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = rows[col][col].inverse()
        prow = [x * inv if x else z for x in rows[col]]
        rows[col] = prow
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y if y else x for x, y in zip(rows[r], prow)]
    return CycMatrix._raw(tuple(tuple(r[n:]) for r in rows), m)


class CycPoly:
    """Polynomial in ``t`` with Q(zeta_m) coefficients, ascending degree."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence, order: int):
        cs = [_entry(c, order) for c in coefficients]
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        self.coefficients = tuple(cs) if cs else (_zero(order),)
        self.order = order

    @classmethod
    def monomial_minus(cls, degree: int, constant, order: int) -> "CycPoly":
        """``t**degree - constant``."""
        cs = [_zero(order)] * (degree + 1)
        cs[degree] = _one(order)
        cs[0] = cs[0] - _entry(constant, order)
        return cls(cs, order)

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and not self.coefficients[0]:
            return -1
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, x) -> Cyclotomic:
        x = _entry(x, self.order)
        acc = _zero(self.order)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def deflate(self, root) -> tuple["CycPoly", Cyclotomic]:
        """Synthetic division by ``t - root``: returns (quotient, remainder)."""
        root = _entry(root, self.order)
        cs = self.coefficients
        if len(cs) == 1:
            return CycPoly([0], self.order), cs[0]
        out = [cs[-1]]
        for c in reversed(cs[1:-1]):
            out.append(c + out[-1] * root)
        rem = cs[0] + out[-1] * root
        return CycPoly(out[::-1], self.order), rem

    def lift(self, order: int) -> "CycPoly":
        return CycPoly([lift(c, order) for c in self.coefficients], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"({c})*t^{k}" if k else f"({c})")
        return "CycPoly(" + (" + ".join(reversed(terms)) or "0") + ")"


def char_poly(a: CycMatrix) -> CycPoly:
    """``det(t*I - a)`` by the Faddeev-LeVerrier trace recursion.

    The recursion divides by 1..n, which is exact in characteristic 0.
    """
    n, m = a.dim, a.ambient_order
    coeffs = [_zero(m)] * (n + 1)
    coeffs[n] = _one(m)
    # M_1 = I; c_{n-k} = -tr(a M_k) / k; M_{k+1} = a M_k + c_{n-k} I.
    mk = identity(n, m)
    for k in range(1, n + 1):
        if k < n:
            am = mat_mul(a, mk)
            tr = am.trace()
        else:
            tr = _trace_of_product(a, mk)  # the last product is only traced
        c = tr * Cyclotomic.rational(m, Fraction(-1, k))
        coeffs[n - k] = c
        if k < n:
            mk = _add_scalar(am, c)
    return CycPoly(coeffs, m)


def _add_scalar(a: CycMatrix, c: Cyclotomic) -> CycMatrix:
    if not c:
        return a
    rows = [list(r) for r in a.rows]
    for i in range(a.dim):
        rows[i][i] = rows[i][i] + c
    return CycMatrix._raw(tuple(tuple(r) for r in rows), a.ambient_order)


def _trace_of_product(a: CycMatrix, b: CycMatrix) -> Cyclotomic:
    total = _zero(a.ambient_order)
    for i, arow in enumerate(a.nonzero):
        for k, x in arow:
            y = b.rows[k][i]
            if y:
                total = total + x * y
    return total


def root_multiplicity(p: CycPoly, root) -> int:
    """Multiplicity of ``root`` in ``p`` by repeated exact division by ``t - root``."""
    k = 0
    while p.degree > 0:
        q, r = p.deflate(root)
        if r:
            break
        p = q
        k += 1
    return k


def mult_eigen_one(g: CycMatrix) -> int:
    """Dimension of the fixed space of ``g``: ``n - rank(g - I)``.

    For matrices of finite order this is the multiplicity of the eigenvalue 1,
    since such matrices are diagonalizable.
    """
    return g.dim - rank(g - identity(g.dim, g.ambient_order))


def eigen_multiset(g: CycMatrix, ord: int) -> Counter:
    """Eigenvalues of ``g`` (with ``g**ord == I``) and their multiplicities.

    Keys are roots of unity in Q(zeta_M), ``M = lcm(ambient order, ord)``;
    multiplicities are kernel dimensions of ``g - zeta*I``.
    """
    if mat_pow(g, ord) != identity(g.dim, g.ambient_order):
        raise ValueError("order contract violated: g**ord is not the identity")
    m = g.ambient_order
    big = m * ord // gcd(m, ord)
    h = g.lift(big)
    eye = identity(g.dim, big)
    out: Counter = Counter()
    found = 0
    step = big // ord
    for k in range(ord):
        if found == g.dim:
            break
        zeta = Cyclotomic.zeta(big, k * step)
        mult = g.dim - rank(h - eye.scale(zeta))
        if mult:
            out[zeta] = mult
            found += mult
    return out
