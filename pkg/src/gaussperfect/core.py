"""Exact arithmetic on the Gaussian integers Z[i].

Values are immutable and hashable; every operation is exact on Python ints.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

IntLike = Union["GaussianInt", int]


class ZeroInputError(ValueError):
    """Raised when an operation that needs a nonzero Gaussian integer gets 0."""


class ParseError(ValueError):
    """Malformed Gaussian-integer literal."""

    def __init__(self, token: str):
        super().__init__(f"malformed Gaussian integer literal: {token!r}")
        self.token = token


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __post_init__(self):
        # bool is an int subclass; reject floats and friends outright
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussianInt components must be integers")

    @classmethod
    def of(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianInt")

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        return parse(text)

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __pos__(self) -> GaussianInt:
        return self

    def __add__(self, other: IntLike) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other: int) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other: IntLike) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GaussianInt:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __floordiv__(self, other: IntLike) -> GaussianInt:
        return divmod_round(self, GaussianInt.of(other))[0]

    def __mod__(self, other: IntLike) -> GaussianInt:
        return divmod_round(self, GaussianInt.of(other))[1]

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_canonical(self) -> bool:
        return self.re > 0 and self.im >= 0

    def order_key(self) -> tuple[int, int, int]:
        """Sort key (norm, Re, Im) shared by factorizations and search output."""
        return (self.norm(), self.re, self.im)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
ONE_PLUS_I = GaussianInt(1, 1)


class Unit(enum.Enum):
    """The four units of Z[i]."""

    ONE = (1, 0)
    I = (0, 1)
    NEG_ONE = (-1, 0)
    NEG_I = (0, -1)

    @property
    def gaussian(self) -> GaussianInt:
        return GaussianInt(*self.value)

    @classmethod
    def from_gaussian(cls, value: GaussianInt) -> Unit:
        try:
            return cls((value.re, value.im))
        except ValueError:
            raise ValueError(f"{value} is not a unit") from None

    def __mul__(self, other):
        if isinstance(other, Unit):
            return Unit.from_gaussian(self.gaussian * other.gaussian)
        if isinstance(other, (GaussianInt, int)):
            return self.gaussian * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (GaussianInt, int)):
            return GaussianInt.of(other) * self.gaussian
        return NotImplemented

    def inverse(self) -> Unit:
        return Unit.from_gaussian(self.gaussian.conjugate())

    def __str__(self) -> str:
        return format_gaussian(self.gaussian)


UNITS = (Unit.ONE, Unit.I, Unit.NEG_ONE, Unit.NEG_I)


def add(alpha: IntLike, beta: IntLike) -> GaussianInt:
    return GaussianInt.of(alpha) + GaussianInt.of(beta)


def mul(alpha: IntLike, beta: IntLike) -> GaussianInt:
    return GaussianInt.of(alpha) * GaussianInt.of(beta)


def norm(eta: IntLike) -> int:
    return GaussianInt.of(eta).norm()


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b for b > 0, ties to even."""
    q, r = divmod(a, b)
    twice = 2 * r
    if twice > b or (twice == b and q & 1):
        q += 1
    return q


def divmod_round(alpha: GaussianInt, beta: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division with rounded quotient.

    The remainder satisfies ``norm(r) <= norm(beta) / 2``.
    """
    if not beta:
        raise ZeroDivisionError("Gaussian division by zero")
    n = beta.norm()
    num = alpha * beta.conjugate()
    q = GaussianInt(_round_div(num.re, n), _round_div(num.im, n))
    return q, alpha - q * beta


def exact_quotient(eta: GaussianInt, delta: GaussianInt) -> GaussianInt | None:
    """Return kappa with eta == delta * kappa, or None when delta does not divide eta."""
    if not delta:
        raise ZeroDivisionError("divisibility test by zero")
    n = delta.norm()
    num = eta * delta.conjugate()
    qr, rr = divmod(num.re, n)
    if rr:
        return None
    qi, ri = divmod(num.im, n)
    if ri:
        return None
    return GaussianInt(qr, qi)


def divides(delta: IntLike, eta: IntLike) -> tuple[bool, GaussianInt | None]:
    """Test whether ``delta | eta``; the quotient is returned alongside when it does."""
    kappa = exact_quotient(GaussianInt.of(eta), GaussianInt.of(delta))
    return kappa is not None, kappa


def is_even(eta: IntLike) -> bool:
    """True iff 1+i divides eta, i.e. both components share parity."""
    eta = GaussianInt.of(eta)
    return (eta.re - eta.im) % 2 == 0


def associates(eta: IntLike) -> tuple[GaussianInt, ...]:
    """The four unit multiples of eta, in the order 1, i, -1, -i."""
    eta = GaussianInt.of(eta)
    if not eta:
        raise ZeroInputError("zero has no associate class")
    return tuple(eta * u.gaussian for u in UNITS)


def canonicalize(eta: IntLike) -> tuple[Unit, GaussianInt]:
    """Split eta as ``unit * canonical`` with canonical in {Re > 0, Im >= 0}."""
    eta = GaussianInt.of(eta)
    a, b = eta.re, eta.im
    if a > 0 and b >= 0:
        return Unit.ONE, eta
    if a <= 0 and b > 0:
        # eta = i * (b - a i)
        return Unit.I, GaussianInt(b, -a)
    if a < 0 and b <= 0:
        return Unit.NEG_ONE, GaussianInt(-a, -b)
    if a >= 0 and b < 0:
        # eta = -i * (-b + a i)
        return Unit.NEG_I, GaussianInt(-b, a)
    raise ZeroInputError("zero has no canonical associate")


def gcd(alpha: IntLike, beta: IntLike) -> GaussianInt:
    """Canonical greatest common divisor by the rounded-quotient Euclidean algorithm."""
    a, b = GaussianInt.of(alpha), GaussianInt.of(beta)
    if not a and not b:
        raise ZeroInputError("gcd(0, 0) is undefined")
    while b:
        a, b = b, divmod_round(a, b)[1]
    return canonicalize(a)[1]


# Literal grammar: a+bi, a-bi, a, bi, i, -i; no whitespace.
_LITERAL = re.compile(
    r"""
    (?P<re>[+-]?\d+)?           # real part
    (?:
        (?P<sign>[+-])?         # sign of imaginary part
        (?P<im>\d+)?i           # imaginary coefficient, optional when 1
    )?
    """,
    re.VERBOSE,
)


def parse(text: str) -> GaussianInt:
    m = _LITERAL.fullmatch(text)
    if not text or m is None:
        raise ParseError(text)
    real, sign, imag = m.group("re"), m.group("sign"), m.group("im")
    has_i = text.endswith("i")
    if not has_i:
        if real is None:
            raise ParseError(text)
        return GaussianInt(int(real), 0)
    if real is not None and sign is None:
        # "2i" matched as re="2" then a bare "i": reinterpret as a pure imaginary
        if imag is not None:
            raise ParseError(text)
        return GaussianInt(0, int(real))
    coeff = int(imag) if imag is not None else 1
    if sign == "-":
        coeff = -coeff
    return GaussianInt(int(real) if real is not None else 0, coeff)


def format_gaussian(eta: GaussianInt) -> str:
    a, b = eta.re, eta.im
    if b == 0:
        return str(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    if a == 0:
        return imag
    return f"{a}{imag}" if b < 0 else f"{a}+{imag}"
