"""Spira's sum-of-divisors function and perfect numbers in the Gaussian integers."""

from .core import (
    ONE,
    ONE_PLUS_I,
    UNITS,
    GaussianInt,
    ParseError,
    Unit,
    ZeroInputError,
    add,
    associates,
    canonicalize,
    divides,
    gcd,
    is_even,
    mul,
    norm,
    parse,
)
from .divisors import (
    NotEulerFormError,
    OddFormDecomposition,
    OracleBoundError,
    PerfectionReport,
    classify,
    norm_perfect_prime_solutions,
    odd_form_decompose,
    sigma,
    sigma_oracle,
    sigma_prime_power_is_even,
)
from .factorization import (
    CanonicalFactorization,
    NotPrimeError,
    factor,
    factor_rational,
    is_gaussian_prime,
    split_prime,
    sqrt_minus_one_mod_p,
)
from .search import (
    ErrorRecord,
    Kind,
    SearchConfig,
    SearchRecord,
    enumerate_canonical,
    scan,
    scan_norm_perfect_primes,
    scan_sharded,
    verify_theorem,
)

__version__ = "0.1.0"
