"""Spira's sum-of-divisors function and the perfection predicates built on it."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt, prod

from .core import (
    ONE,
    ONE_PLUS_I,
    UNITS,
    GaussianInt,
    IntLike,
    Unit,
    ZeroInputError,
    canonicalize,
    exact_quotient,
    gcd,
    is_even,
)
from .factorization import CanonicalFactorization, factor, is_gaussian_prime

ORACLE_NORM_BOUND = 10**8


class OracleBoundError(ValueError):
    pass


class NotEulerFormError(ValueError):
    """The subject is not pi**k * gamma**2 with a single odd exponent."""


def geometric_sum(pi: GaussianInt, k: int) -> GaussianInt:
    """1 + pi + ... + pi**k."""
    total, term = ONE, ONE
    for _ in range(k):
        term = term * pi
        total = total + term
    # cross-check against (pi**(k+1) - 1) / (pi - 1)
    assert exact_quotient(term * pi - 1, pi - 1) == total
    return total


def sigma_from_factorization(fact: CanonicalFactorization) -> GaussianInt:
    return prod((geometric_sum(p, e) for p, e in fact.factors), start=ONE)


def sigma(eta: IntLike) -> GaussianInt:
    """Sum of divisors over the canonical factorization; associate-invariant."""
    eta = GaussianInt.of(eta)
    if not eta:
        raise ZeroInputError("sigma(0) is undefined")
    return sigma_from_factorization(factor(eta))


def sigma_oracle(eta: IntLike, bound: int = ORACLE_NORM_BOUND) -> GaussianInt:
    """sigma by brute summation over every divisor with unit part 1."""
    eta = GaussianInt.of(eta)
    if not eta:
        raise ZeroInputError("sigma(0) is undefined")
    if eta.norm() > bound:
        raise OracleBoundError(f"norm {eta.norm()} exceeds oracle bound {bound}")
    fact = factor(eta)
    total = GaussianInt(0, 0)
    for exps in product(*(range(e + 1) for _, e in fact.factors)):
        d = ONE
        for (p, _), j in zip(fact.factors, exps):
            d = d * p**j
        total = total + d
    return total


def sigma_prime_power_is_even(pi: IntLike, m: int) -> bool:
    pi = GaussianInt.of(pi)
    if not is_gaussian_prime(pi) or not pi.is_canonical():
        raise ValueError(f"{pi} is not a canonical Gaussian prime")
    if is_even(pi):
        raise ValueError(f"{pi} is even; expected an odd prime")
    if m < 1:
        raise ValueError("exponent must be positive")
    return is_even(geometric_sum(pi, m))


@dataclass(frozen=True)
class PerfectionReport:
    subject: GaussianInt
    parity: str
    sigma: GaussianInt
    norm_sigma: int
    two_norm: int
    is_norm_perfect: bool
    perfect_associate: Unit | None

    def __post_init__(self):
        assert self.is_norm_perfect == (self.norm_sigma == self.two_norm)
        # perfect implies norm-perfect
        assert self.perfect_associate is None or self.is_norm_perfect

    def to_json(self) -> dict:
        return {
            "subject": str(self.subject),
            "parity": self.parity,
            "sigma": str(self.sigma),
            "normSigma": self.norm_sigma,
            "twoNorm": self.two_norm,
            "normPerfect": self.is_norm_perfect,
            "perfectUnit": None if self.perfect_associate is None else str(self.perfect_associate),
        }


def perfect_unit(sigma_value: GaussianInt, eta: GaussianInt) -> Unit | None:
    """The unit u with sigma_value == (1+i) * u * canonical(eta), if there is one."""
    canonical = canonicalize(eta)[1]
    for u in UNITS:
        if sigma_value == ONE_PLUS_I * u.gaussian * canonical:
            return u
    return None


def report_from_factorization(eta: GaussianInt, fact: CanonicalFactorization) -> PerfectionReport:
    s = sigma_from_factorization(fact)
    perfect = perfect_unit(s, eta)
    ns, two = s.norm(), 2 * eta.norm()
    return PerfectionReport(
        subject=eta,
        parity="even" if is_even(eta) else "odd",
        sigma=s,
        norm_sigma=ns,
        two_norm=two,
        is_norm_perfect=ns == two,
        perfect_associate=perfect,
    )


def classify(eta: IntLike) -> PerfectionReport:
    eta = GaussianInt.of(eta)
    if not eta:
        raise ZeroInputError("cannot classify zero")
    return report_from_factorization(eta, factor(eta))


@dataclass(frozen=True)
class OddFormDecomposition:
    pi: GaussianInt
    k: int
    gamma: GaussianInt
    unit: Unit

    def value(self) -> GaussianInt:
        return self.unit.gaussian * self.pi**self.k * self.gamma**2

    def to_json(self) -> dict:
        return {"pi": str(self.pi), "k": self.k, "gamma": str(self.gamma), "unit": str(self.unit)}


def decompose_factorization(fact: CanonicalFactorization) -> OddFormDecomposition:
    if not fact.factors:
        raise NotEulerFormError("a unit has no pi^k gamma^2 form")
    if any(p == ONE_PLUS_I for p, _ in fact.factors):
        raise NotEulerFormError("subject is even")
    odd = [(p, e) for p, e in fact.factors if e % 2]
    if len(odd) != 1:
        raise NotEulerFormError(f"not of Euler form: {len(odd)} primes carry an odd exponent")
    (pi, k), = odd
    gamma = prod((p ** (e // 2) for p, e in fact.factors if p != pi), start=ONE)
    g_unit, gamma = canonicalize(gamma)
    # the unit stripped from gamma comes back squared
    unit = fact.unit * g_unit * g_unit
    decomposition = OddFormDecomposition(pi, k, gamma, unit)
    assert gcd(pi, gamma) == ONE
    return decomposition


def odd_form_decompose(alpha: IntLike) -> OddFormDecomposition:
    """Write an odd alpha as ``unit * pi**k * gamma**2`` with k odd and gcd(pi, gamma) = 1."""
    alpha = GaussianInt.of(alpha)
    if not alpha:
        raise ZeroInputError("cannot decompose zero")
    if is_even(alpha):
        raise NotEulerFormError(f"{alpha} is even")
    return decompose_factorization(factor(alpha))


def norm_perfect_prime_solutions() -> tuple[list[tuple[int, int]], list[GaussianInt]]:
    """Integer solutions of (a-1)^2 + b^2 = 2 and the primes a+bi among them.

    A prime a+bi has sigma = a+bi+1, so norm-perfection reduces to this circle.
    """
    r = isqrt(2)
    solutions = [
        (a, b)
        for a in range(1 - r, 2 + r)
        for b in range(-r, r + 1)
        if (a - 1) ** 2 + b**2 == 2
    ]
    primes = [GaussianInt(a, b) for a, b in solutions if is_gaussian_prime(GaussianInt(a, b))]
    return solutions, primes
