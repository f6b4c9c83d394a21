"""Prime factorization over Z and Z[i].

Rational factoring uses trial division by primes up to ``TRIAL_LIMIT`` and
falls back to Miller-Rabin plus Brent's variant of Pollard rho beyond it.
Gaussian factorization factors the norm, splits each rational prime and
recovers exponents by exact division.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as igcd
from math import isqrt, prod

from .core import (
    ONE,
    ONE_PLUS_I,
    GaussianInt,
    IntLike,
    Unit,
    ZeroInputError,
    canonicalize,
    exact_quotient,
    gcd,
)

TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin for n < 3.3e24 with these bases.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


class NotPrimeError(ValueError):
    pass


@lru_cache(maxsize=None)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All rational primes <= limit, ascending."""
    if limit < 2:
        return ()
    if limit <= TRIAL_LIMIT:
        small = _sieve(TRIAL_LIMIT)
        return small[: bisect_right(small, limit)]
    return _sieve(limit)


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality of a rational integer; exact below 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC_BELOW:
        return _miller_rabin(n, _MR_BASES)
    rng = random.Random(n)
    return _miller_rabin(n, _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(20)))


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = igcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = igcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent(m, rng)
        stack += [d, m // d]


def factor_rational(n: int, seed: int = 0) -> list[tuple[int, int]]:
    """Prime factorization of a positive integer as ascending ``(p, e)`` pairs."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("factor_rational needs a positive integer")
    found: dict[int, int] = {}
    for p in primes_up_to(min(TRIAL_LIMIT, isqrt(n))):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        if n < (TRIAL_LIMIT + 1) ** 2:
            # no factor <= TRIAL_LIMIT left, so n is prime
            found[n] = found.get(n, 0) + 1
        else:
            _split_large(n, found, random.Random(seed))
    return sorted(found.items())


def sqrt_minus_one_mod_p(p: int, seed: int = 0) -> int:
    """Smaller root x in (0, p) of x^2 = -1 (mod p) for a prime p = 1 (mod 4).

    Draws random bases c and takes c^((p-1)/4) until it squares to -1; the
    generator is local and seeded, so results are reproducible.
    """
    if p % 4 != 1 or not is_prime(p):
        raise NotPrimeError(f"{p} is not a prime congruent to 1 mod 4")
    rng = random.Random(seed)
    e = (p - 1) // 4
    while True:
        x = pow(rng.randrange(2, p), e, p)
        if x * x % p == p - 1:
            return min(x, p - x)


@lru_cache(maxsize=1 << 16)
def split_prime(p: int) -> tuple[GaussianInt, ...]:
    """Canonical Gaussian primes lying over the rational prime p, sorted by (norm, Re, Im)."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        return (ONE_PLUS_I,)
    if p % 4 == 3:
        return (GaussianInt(p, 0),)
    x = sqrt_minus_one_mod_p(p)
    pi = gcd(p, GaussianInt(x, 1))
    other = canonicalize(pi.conjugate())[1]
    return tuple(sorted((pi, other), key=GaussianInt.order_key))


@dataclass(frozen=True)
class CanonicalFactorization:
    unit: Unit
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        return self.unit.gaussian * prod((p**e for p, e in self.factors), start=ONE)

    def __str__(self) -> str:
        return format_factorization(self)


def factor(eta: IntLike) -> CanonicalFactorization:
    """Canonical factorization ``unit * prod(prime**exponent)``."""
    eta = GaussianInt.of(eta)
    if not eta:
        raise ZeroInputError("cannot factor zero")
    rest = eta
    factors: list[tuple[GaussianInt, int]] = []
    for p, _ in factor_rational(eta.norm()):
        for pi in split_prime(p):
            e = 0
            while True:
                q = exact_quotient(rest, pi)
                if q is None:
                    break
                rest, e = q, e + 1
            if e:
                factors.append((pi, e))
    # whatever is left after removing every prime is the unit
    unit = Unit.from_gaussian(rest)
    factors.sort(key=lambda f: f[0].order_key())
    return CanonicalFactorization(unit, tuple(factors))


def is_gaussian_prime(eta: IntLike) -> bool:
    """True iff eta is a unit multiple of a Gaussian prime."""
    eta = GaussianInt.of(eta)
    if eta.re == 0 or eta.im == 0:
        p = abs(eta.re + eta.im)
        if p % 4 == 3 and is_prime(p):
            return True
    return is_prime(eta.norm())


def format_factorization(fact: CanonicalFactorization) -> str:
    parts = [str(fact.unit)] + [f"({p})^{e}" for p, e in fact.factors]
    return " * ".join(parts)
