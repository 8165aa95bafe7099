"""Exact arithmetic in Q, Z[1/q] and Z/(q-1).

Counts are carried as :class:`fractions.Fraction` until an identity is
checked; :func:`to_qrational` is the point where membership in Z[1/q] is
asserted, and :func:`residue` sends q to 1.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class VerificationFailure(Exception):
    """An identity that should hold exactly was found to fail."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op):
    """Apply ``op`` (one of add, sub, mul, div) to two rationals."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return fn(a, b)


def _strip(n, p):
    while n % p == 0:
        n //= p
    return n


def prime_factors(n):
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def in_z_inv_q(a, q):
    """True iff every prime factor of the denominator of ``a`` divides ``q``."""
    if q < 2:
        raise ValueError("q must be >= 2")
    den = Fraction(a).denominator
    for p in prime_factors(q):
        den = _strip(den, p)
    return den == 1


@dataclass(frozen=True)
class QRational:
    """The number ``num / q**qexp`` in normal form."""

    num: int
    qexp: int
    q: int

    def __post_init__(self):
        if self.qexp < 0:
            raise ValueError("qexp must be non-negative")
        if self.qexp > 0 and self.num % self.q == 0:
            raise ValueError("QRational not normalized")

    @classmethod
    def make(cls, num, qexp, q):
        num, qexp = int(num), int(qexp)
        if num == 0:
            return cls(0, 0, q)
        while qexp > 0 and num % q == 0:
            num //= q
            qexp -= 1
        while qexp < 0:
            num *= q
            qexp += 1
        return cls(num, qexp, q)

    def to_fraction(self):
        return Fraction(self.num, self.q**self.qexp)

    def _coerce(self, other):
        if isinstance(other, QRational):
            if other.q != self.q:
                raise ValueError("mismatched q")
            return other
        return to_qrational(Fraction(other), self.q)

    def __add__(self, other):
        o = self._coerce(other)
        e = max(self.qexp, o.qexp)
        n = self.num * self.q ** (e - self.qexp) + o.num * self.q ** (e - o.qexp)
        return QRational.make(n, e, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QRational(-self.num, self.qexp, self.q)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QRational.make(self.num * o.num, self.qexp + o.qexp, self.q)

    __rmul__ = __mul__

    def to_json(self):
        return {"num": self.num, "qexp": self.qexp}


def to_qrational(a, q):
    """Convert a rational to Z[1/q]; raises VerificationFailure if impossible."""
    a = Fraction(a)
    if not in_z_inv_q(a, q):
        raise VerificationFailure(f"{a} is not in Z[1/{q}]", witness=a)
    num, den = a.numerator, a.denominator
    # den divides some power of q
    k, qk = 0, 1
    while qk % den:
        k += 1
        qk *= q
    return QRational.make(num * (qk // den), k, q)


@dataclass(frozen=True)
class Residue:
    """An element of Z/(q-1); ``modulus`` 1 is the zero ring."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("mismatched modulus")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def signed(self):
        """Representative in (-m/2, m/2]."""
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v

    def to_json(self):
        return {"value": self.value, "modulus": self.modulus}


def residue(a, q):
    """Image of ``a`` (QRational, Fraction or int) in Z[1/q]/(q-1) = Z/(q-1).

    q maps to 1, so ``num / q**k`` maps to ``num mod (q-1)``.
    """
    m = q - 1
    if isinstance(a, QRational):
        return Residue(a.num, m)
    return Residue(to_qrational(a, q).num, m)


def rational_json(a):
    a = Fraction(a)
    return {"num": str(a.numerator), "den": str(a.denominator)}
