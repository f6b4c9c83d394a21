"""Norm-bounded exhaustive scans over canonical Gaussian integers."""

from __future__ import annotations

import enum
import heapq
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import isqrt
from typing import Iterable, Iterator, Union

from .core import ONE, GaussianInt, gcd, is_even
from .divisors import (
    NotEulerFormError,
    OddFormDecomposition,
    PerfectionReport,
    decompose_factorization,
    report_from_factorization,
)
from .factorization import factor, is_gaussian_prime, primes_up_to, split_prime

# Norms per enumeration block; bounds the memory held by the generator.
BLOCK_NORMS = 1 << 14

PARITIES = ("all", "odd", "even")


class Kind(str, enum.Enum):
    NORM_PERFECT = "norm_perfect"
    PERFECT = "perfect"
    NORM_PERFECT_PRIME = "norm_perfect_prime"


# most specific first; a record is labelled with the first kind it satisfies
_KIND_PRECEDENCE = (Kind.PERFECT, Kind.NORM_PERFECT_PRIME, Kind.NORM_PERFECT)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    norm_bound: int
    parity_filter: str = "all"
    kind_filter: frozenset = frozenset({Kind.NORM_PERFECT})
    shard_count: int = 1
    shard_index: int = 0

    def __post_init__(self):
        if not isinstance(self.norm_bound, int) or self.norm_bound < 1:
            raise ConfigError("norm bound must be a positive integer")
        if self.parity_filter not in PARITIES:
            raise ConfigError(f"parity must be one of {', '.join(PARITIES)}")
        if self.shard_count < 1:
            raise ConfigError("shard count must be positive")
        if not 0 <= self.shard_index < self.shard_count:
            raise ConfigError(f"shard index {self.shard_index} outside [0, {self.shard_count})")
        object.__setattr__(self, "kind_filter", frozenset(Kind(k) for k in self.kind_filter))
        if not self.kind_filter:
            raise ConfigError("kind filter is empty")

    def norm_range(self) -> tuple[int, int]:
        """Half-open norm interval (lo, hi] owned by this shard."""
        b, s, j = self.norm_bound, self.shard_count, self.shard_index
        return j * b // s, (j + 1) * b // s

    def shards(self) -> list[SearchConfig]:
        return [replace(self, shard_index=j) for j in range(self.shard_count)]


@dataclass(frozen=True)
class SearchRecord:
    subject: GaussianInt
    norm: int
    kind: Kind
    report: PerfectionReport
    decomposition: OddFormDecomposition | None = None

    def sort_key(self) -> tuple[int, int, int]:
        return self.subject.order_key()

    def to_json(self) -> dict:
        return {
            "subject": str(self.subject),
            "norm": self.norm,
            "kind": self.kind.value,
            "report": self.report.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
        }


@dataclass(frozen=True)
class ErrorRecord:
    """A subject the scan could not classify, or one that contradicts the odd-form theorem."""

    subject: GaussianInt
    norm: int
    error: str

    def sort_key(self) -> tuple[int, int, int]:
        return self.subject.order_key()

    def to_json(self) -> dict:
        return {"subject": str(self.subject), "norm": self.norm, "kind": "error", "error": self.error}


Record = Union[SearchRecord, ErrorRecord]


def dumps(record: Record) -> str:
    return json.dumps(record.to_json(), separators=(",", ":"))


def enumerate_canonical_range(lo: int, hi: int) -> Iterator[GaussianInt]:
    """Canonical eta with lo < norm(eta) <= hi, ascending by (norm, Re, Im)."""
    start = max(lo, 0)
    while start < hi:
        end = min(hi, start + BLOCK_NORMS)
        block = []
        for a in range(1, isqrt(end) + 1):
            aa = a * a
            b0 = 0 if aa > start else isqrt(start - aa) + 1
            b1 = isqrt(end - aa)
            block.extend((aa + b * b, a, b) for b in range(b0, b1 + 1))
        block.sort()
        for _, a, b in block:
            yield GaussianInt(a, b)
        start = end


def enumerate_canonical(norm_bound: int) -> Iterator[GaussianInt]:
    """Every canonical Gaussian integer with 1 <= norm <= norm_bound, once each, in order."""
    return enumerate_canonical_range(0, norm_bound)


def _kinds(eta: GaussianInt, report: PerfectionReport, factors) -> set[Kind]:
    kinds = set()
    if report.is_norm_perfect:
        kinds.add(Kind.NORM_PERFECT)
        if len(factors) == 1 and factors[0][1] == 1:
            kinds.add(Kind.NORM_PERFECT_PRIME)
    if report.perfect_associate is not None:
        kinds.add(Kind.PERFECT)
    return kinds


def classify_for_search(eta: GaussianInt, kind_filter: Iterable[Kind]) -> Record | None:
    """Record for one subject, or None when it satisfies none of the requested kinds."""
    try:
        fact = factor(eta)
        report = report_from_factorization(eta, fact)
        kinds = _kinds(eta, report, fact.factors)
        if not kinds & set(kind_filter):
            return None
        kind = next(k for k in _KIND_PRECEDENCE if k in kinds)
        decomposition = None
        if report.is_norm_perfect and report.parity == "odd":
            try:
                decomposition = decompose_factorization(fact)
            except NotEulerFormError as exc:
                return ErrorRecord(eta, eta.norm(), f"odd norm-perfect subject violates pi^k gamma^2 form: {exc}")
        return SearchRecord(eta, eta.norm(), kind, report, decomposition)
    except Exception as exc:  # per-item failures become records, never silent skips
        return ErrorRecord(eta, eta.norm(), f"{type(exc).__name__}: {exc}")


def scan(config: SearchConfig) -> Iterator[Record]:
    """Stream records for this shard of the configured norm range."""
    lo, hi = config.norm_range()
    parity = config.parity_filter
    for eta in enumerate_canonical_range(lo, hi):
        if parity != "all" and is_even(eta) != (parity == "even"):
            continue
        record = classify_for_search(eta, config.kind_filter)
        if record is not None:
            yield record


def _scan_list(config: SearchConfig) -> list[Record]:
    return list(scan(config))


def scan_sharded(config: SearchConfig, workers: int = 1) -> Iterator[Record]:
    """Run every shard of ``config`` and k-way merge them back into one ordered stream.

    With ``workers > 1`` the shards run in a process pool; the merge is
    sequential, so the output does not depend on scheduling.
    """
    shards = config.shards()
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            streams = list(pool.map(_scan_list, shards))
    else:
        streams = [scan(s) for s in shards]
    return heapq.merge(*streams, key=lambda r: r.sort_key())


def canonical_primes(norm_bound: int) -> list[GaussianInt]:
    """Every canonical Gaussian prime with norm <= norm_bound, sorted by (norm, Re, Im)."""
    out = []
    for p in primes_up_to(norm_bound):
        if p % 4 == 3:
            if p * p <= norm_bound:
                out.append(GaussianInt(p, 0))
        else:
            out.extend(split_prime(p))
    out.sort(key=GaussianInt.order_key)
    return out


def scan_norm_perfect_primes(norm_bound: int) -> list[GaussianInt]:
    """Canonical primes up to the bound whose sigma has twice their norm."""
    if norm_bound < 2:
        raise ConfigError("prime scan needs a norm bound of at least 2")
    hits = []
    for pi in canonical_primes(norm_bound):
        fact = factor(pi)
        if not is_gaussian_prime(pi) or fact.factors != ((pi, 1),):
            raise AssertionError(f"prime enumeration produced non-prime {pi}")
        if report_from_factorization(pi, fact).is_norm_perfect:
            hits.append(pi)
    return hits


@dataclass
class TheoremSummary:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    k_mod4: Counter = field(default_factory=Counter)
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "kMod4": {str(r): self.k_mod4[r] for r in sorted(self.k_mod4)},
        }


def _decomposition_holds(record: SearchRecord) -> bool:
    d = record.decomposition
    return (
        d is not None
        and d.k % 2 == 1
        and gcd(d.pi, d.gamma) == ONE
        and not is_even(d.pi)
        and d.value() == record.subject
    )


def verify_theorem(norm_bound: int, shard_count: int = 1, shard_index: int = 0) -> TheoremSummary:
    """Check every odd canonical norm-perfect subject up to the bound has the pi^k gamma^2 form.

    Failures are counted and kept, not raised. The distribution of k mod 4 is
    tallied as data.
    """
    config = SearchConfig(
        norm_bound,
        parity_filter="odd",
        kind_filter={Kind.NORM_PERFECT},
        shard_count=shard_count,
        shard_index=shard_index,
    )
    summary = TheoremSummary()
    for record in scan(config):
        summary.checked += 1
        summary.records.append(record)
        if isinstance(record, SearchRecord) and _decomposition_holds(record):
            summary.passed += 1
            summary.k_mod4[record.decomposition.k % 4] += 1
        else:
            summary.failed += 1
            summary.failures.append(record)
    return summary
