"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` after
reduction modulo the m-th cyclotomic polynomial, with integer numerators over
one positive common denominator. Two elements of the same order are equal
exactly when their stored vectors are equal.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Cyclotomic",
    "CyclotomicError",
    "cyclotomic_polynomial",
    "totient",
    "divisors",
    "reduce",
    "lift",
    "lift_common",
    "conjugate",
]

Number = Union[int, Fraction]


class CyclotomicError(ArithmeticError):
    pass


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def totient(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


# -- integer polynomials (ascending coefficient tuples) ---------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient of ``a`` by the monic polynomial ``b``; raises if inexact."""
    rem = list(a)
    db = len(b) - 1
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    if any(rem):
        raise ValueError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Return the coefficients of Phi_m in ascending degree.

    Computed as ``x^m - 1`` divided exactly by ``Phi_d`` for every proper
    divisor ``d`` of ``m``.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    if m == 1:
        return tuple(num)
    den = [1]
    for d in divisors(m)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divexact(num, den))


class _FieldData:
    """Per-order constants shared by every element of Q(zeta_m)."""

    __slots__ = ("m", "phi", "modulus", "low_terms")

    def __init__(self, m: int):
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.phi = len(self.modulus) - 1
        self.low_terms = tuple((j, c) for j, c in enumerate(self.modulus[:-1]) if c)

    def fold(self, raw: Sequence[int]) -> list[int]:
        """Reduce an integer vector indexed by exponent into the power basis."""
        m, phi = self.m, self.phi
        if len(raw) <= phi:
            return list(raw) + [0] * (phi - len(raw))
        r = [0] * m
        for k, c in enumerate(raw):
            if c:
                r[k % m] += c
        low = self.low_terms
        for k in range(m - 1, phi - 1, -1):
            c = r[k]
            if c:
                base = k - phi
                for j, p in low:
                    r[base + j] -= c * p
        del r[phi:]
        return r


@lru_cache(maxsize=None)
def _field(m: int) -> _FieldData:
    if m < 1:
        raise CyclotomicError(f"cyclotomic order must be positive, got {m}")
    return _FieldData(m)


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Integer polynomial product; Kronecker substitution for dense inputs."""
    na = [(i, x) for i, x in enumerate(a) if x]
    nb = [(j, y) for j, y in enumerate(b) if y]
    if not na or not nb:
        return []
    size = na[-1][0] + nb[-1][0] + 1
    if len(na) * len(nb) <= 256:
        out = [0] * size
        for i, x in na:
            for j, y in nb:
                out[i + j] += x * y
        return out
    bound = max(abs(x) for _, x in na) * max(abs(y) for _, y in nb) * min(len(na), len(nb))
    width = (bound.bit_length() + 9) // 8
    pa = _pack(a[: na[-1][0] + 1], width)
    pb = _pack(b[: nb[-1][0] + 1], width)
    half = 1 << (8 * width - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * size, "little")
    raw = (pa * pb + offset).to_bytes(width * size, "little")
    return [
        int.from_bytes(raw[k : k + width], "little") - half
        for k in range(0, width * size, width)
    ]


def _pack(p: Sequence[int], width: int) -> int:
    pos = b"".join((x if x > 0 else 0).to_bytes(width, "little") for x in p)
    neg = b"".join((-x if x < 0 else 0).to_bytes(width, "little") for x in p)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


class Cyclotomic:
    """An element of Q(zeta_m) in canonical power-basis form.

    Instances are immutable. ``coeffs`` gives the ``phi(m)`` rational
    coordinates; arithmetic between elements of different orders raises
    unless the operands are lifted first with :func:`lift_common`. Plain
    integers and fractions are accepted as operands and coerced.
    """

    __slots__ = ("order", "_num", "_den", "_hash", "_nz")

    def __init__(self, order: int, coeffs: Iterable[Number]):
        fd = _field(order)
        fr = [_as_fraction(c) for c in coeffs]
        if len(fr) != fd.phi:
            raise CyclotomicError(
                f"expected {fd.phi} coefficients for order {order}, got {len(fr)}"
            )
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        self._set(order, tuple(c.numerator * (den // c.denominator) for c in fr), den)

    def _set(self, order: int, num: tuple, den: int) -> None:
        self.order = order
        self._num = num
        self._den = den
        self._hash = None
        self._nz = None

    @classmethod
    def _make(cls, order: int, num: Sequence[int], den: int = 1) -> "Cyclotomic":
        if den != 1:
            if den < 0:
                num, den = [-x for x in num], -den
            g = gcd(den, *num)
            if g != 1:
                num, den = [x // g for x in num], den // g
        obj = cls.__new__(cls)
        obj._set(order, tuple(num), den)
        return obj

    @classmethod
    def rational(cls, order: int, value: Number = 0) -> "Cyclotomic":
        fd = _field(order)
        v = _as_fraction(value)
        return cls._make(order, [v.numerator] + [0] * (fd.phi - 1), v.denominator)

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.rational(order, 1)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclotomic":
        """The root of unity ``zeta_order ** k`` (``k`` taken mod order)."""
        return _zeta_power(order, k % order)

    # -- accessors ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not self

    def __bool__(self) -> bool:
        nz = self._nz
        if nz is None:
            nz = self._nz = any(self._num)
        return nz

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            if self.order != other.order:
                a, b = lift_common(self, other)
                return a._num == b._num and a._den == b._den
            return self._num == other._num and self._den == other._den
        if isinstance(other, Rational):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        # Rationals hash like Fraction so that equality across orders and
        # with plain numbers stays hash-consistent; other values hash by
        # their order-specific canonical vector.
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self._num[0], self._den))
            else:
                h = hash((self.order, self._num, self._den))
            self._hash = h
        return h

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise CyclotomicError(
                    f"order mismatch: {self.order} vs {other.order}; lift first"
                )
            return other
        if isinstance(other, Rational):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def _addsub(self, other, sign: int) -> "Cyclotomic":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            return self
        if not self:
            return o if sign > 0 else -o
        if self._den == o._den:
            num = list(map(operator.add if sign > 0 else operator.sub, self._num, o._num))
            return Cyclotomic._make(self.order, num, self._den)
        da, db = self._den, o._den
        if sign > 0:
            num = [x * db + y * da for x, y in zip(self._num, o._num)]
        else:
            num = [x * db - y * da for x, y in zip(self._num, o._num)]
        return Cyclotomic._make(self.order, num, da * db)

    def __add__(self, other):
        return self._addsub(other, 1)

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __radd__(self, other):
        return self._addsub(other, 1)

    def __rsub__(self, other):
        return (-self)._addsub(other, 1)

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._make(self.order, [-x for x in self._num], self._den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self.order, self, o)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not any(self._num):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return _inverse(self.order, self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Cyclotomic.one(self.order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "Cyclotomic":
        return conjugate(self)

    def galois(self, j: int) -> "Cyclotomic":
        """Image under the automorphism ``zeta -> zeta**j`` (gcd(j, m) = 1)."""
        m = self.order
        if gcd(j, m) != 1:
            raise CyclotomicError(f"{j} is not a unit modulo {m}")
        raw = [0] * m
        for k, c in enumerate(self._num):
            if c:
                raw[(k * j) % m] += c
        return Cyclotomic._make(m, _field(m).fold(raw), self._den)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {self})"

    def __str__(self) -> str:
        return format_expression(self)


def format_expression(a: Cyclotomic) -> str:
    """Render ``a`` as ``c0 + c1*z + ...`` with ``z`` standing for zeta_m.

    A leading negative power is written ``-1*z^k`` so that the text stays
    inside the group-spec entry grammar.
    """
    parts = []
    for k, x in enumerate(a.numerators):
        if not x:
            continue
        c = Fraction(x, a.denominator)
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "z" if k == 1 else f"z^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((c < 0, body, k))
    if not parts:
        return "0"
    neg, body, k = parts[0]
    if neg:
        head = f"-{body}" if (k == 0 or "*" in body) else f"-1*{body}"
    else:
        head = body
    return head + "".join(f" {'-' if n else '+'} {b}" for n, b, _ in parts[1:])


@lru_cache(maxsize=4096)
def _zeta_power(m: int, k: int) -> Cyclotomic:
    fd = _field(m)
    raw = [0] * (k + 1)
    raw[k] = 1
    return Cyclotomic._make(m, fd.fold(raw))


@lru_cache(maxsize=1 << 16)
def _mul(order: int, a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    # Group elements reuse a small set of roots of unity, so products repeat.
    # ``order`` is part of the cache key: rationals compare equal across orders.
    fd = _field(order)
    raw = _convolve(a._num, b._num)
    return Cyclotomic._make(a.order, fd.fold(raw), a._den * b._den)


def _fpoly_divmod(a: list, b: list) -> tuple[list, list]:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            c = c / lead
            quot[k - db] = c
            for j in range(db + 1):
                if b[j]:
                    rem[k - db + j] -= c * b[j]
    return _trim(quot), _trim(rem[:db])


def _fpoly_sub_mul(s0: list, q: list, s1: list) -> list:
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(s1):
                if y:
                    out[i + j] -= x * y
    return _trim(out)


@lru_cache(maxsize=1 << 14)
def _inverse(order: int, a: Cyclotomic) -> Cyclotomic:
    """Extended Euclid of the representing polynomial against Phi_m."""
    fd = _field(a.order)
    r0 = [Fraction(c) for c in fd.modulus]
    r1 = _trim([Fraction(c) for c in a._num])
    s0: list = []
    s1: list = [Fraction(1)]
    while len(r1) > 1:
        q, r = _fpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fpoly_sub_mul(s0, q, s1)
    # r1 is a nonzero constant because Phi_m is irreducible.
    c = r1[0]
    s = [x / c for x in s1] + [Fraction(0)] * (fd.phi - len(s1))
    den = 1
    for x in s:
        den = den * x.denominator // gcd(den, x.denominator)
    num = [x.numerator * (den // x.denominator) for x in s]
    # a = num_a / den_a, so a^-1 = den_a * (num_a)^-1.
    return Cyclotomic._make(a.order, [x * a._den for x in num], den)


def reduce(raw_coeffs: Union[Sequence[Number], Mapping[int, Number]], m: int) -> Cyclotomic:
    """Canonical element of Q(zeta_m) for ``sum raw[k] * zeta_m**k``.

    ``raw_coeffs`` is a sequence indexed by exponent or a mapping from
    non-negative exponents to rationals; exponents may exceed ``m``.
    """
    fd = _field(m)
    items = raw_coeffs.items() if isinstance(raw_coeffs, Mapping) else enumerate(raw_coeffs)
    pairs = [(k, _as_fraction(c)) for k, c in items]
    for k, _ in pairs:
        if k < 0:
            raise CyclotomicError(f"negative exponent {k}")
    den = 1
    for _, c in pairs:
        den = den * c.denominator // gcd(den, c.denominator)
    raw = [0] * m
    for k, c in pairs:
        raw[k % m] += c.numerator * (den // c.denominator)
    return Cyclotomic._make(m, fd.fold(raw), den)


def lift(a: Cyclotomic, order: int) -> Cyclotomic:
    """Rewrite ``a`` inside Q(zeta_order); ``a.order`` must divide ``order``."""
    m = a.order
    if order == m:
        return a
    if order % m:
        raise CyclotomicError(f"cannot lift order {m} to {order}: not a multiple")
    step = order // m
    raw = [0] * order
    for k, c in enumerate(a.numerators):
        if c:
            raw[k * step] = c
    return Cyclotomic._make(order, _field(order).fold(raw), a.denominator)


def lift_common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
    if a.order == b.order:
        return a, b
    big = a.order * b.order // gcd(a.order, b.order)
    return lift(a, big), lift(b, big)


def conjugate(a: Cyclotomic) -> Cyclotomic:
    """Complex conjugate: the automorphism ``zeta_m -> zeta_m**(m-1)``."""
    if a.is_rational():
        return a
    return a.galois(a.order - 1)
