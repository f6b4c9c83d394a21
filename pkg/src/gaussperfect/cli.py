"""Command-line front end.

Data goes to stdout, one record per line; diagnostics and summaries go to
stderr. Exit status: 0 success, 1 usage error, 2 per-item errors in a scan.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import GaussianInt, ParseError, ZeroInputError, parse
from .divisors import classify, norm_perfect_prime_solutions, sigma
from .factorization import factor
from .search import (
    ConfigError,
    ErrorRecord,
    Kind,
    SearchConfig,
    canonical_primes,
    classify_for_search,
    dumps,
    scan,
    verify_theorem,
)

EXIT_OK, EXIT_USAGE, EXIT_ITEM_ERRORS = 0, 1, 2

KIND_CHOICES = {
    "norm-perfect": {Kind.NORM_PERFECT},
    "perfect": {Kind.PERFECT},
    "both": {Kind.NORM_PERFECT, Kind.PERFECT},
}


class UsageError(Exception):
    pass


class _NegativeLiteral:
    """Stands in for argparse's negative-number regex so -1-2i parses as a positional."""

    @staticmethod
    def match(token: str) -> bool:
        if not token.startswith("-"):
            return False
        try:
            parse(token)
        except ParseError:
            return False
        return True


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NegativeLiteral
        self._has_negative_number_optionals = []

    def error(self, message):
        raise UsageError(message)


def _gaussian(token: str) -> GaussianInt:
    try:
        return parse(token)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    scan_opts = _Parser(add_help=False)
    scan_opts.add_argument("--bound", type=int, required=True, metavar="N", help="inclusive norm bound")
    scan_opts.add_argument("--shards", type=int, default=1, metavar="S")
    scan_opts.add_argument("--shard", type=int, default=0, metavar="J")

    parser = _Parser(prog="gaussperfect", description="Sum of divisors and perfect numbers in Z[i].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (
        ("factor", "canonical prime factorization"),
        ("sigma", "sum of divisors and its norm"),
        ("check", "perfection report"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_text)
        p.add_argument("subject", type=_gaussian, help="Gaussian integer such as 2+i or -1-2i")

    p = sub.add_parser("search", parents=[scan_opts, fmt], help="scan for (norm-)perfect numbers")
    p.add_argument("--parity", choices=("all", "odd", "even"), default="all")
    p.add_argument("--kind", choices=tuple(KIND_CHOICES), default="norm-perfect")

    sub.add_parser("primes", parents=[scan_opts, fmt], help="scan canonical primes for norm-perfection")
    sub.add_parser("verify", parents=[scan_opts, fmt], help="check the odd-form theorem up to a bound")
    return parser


def record_text(record) -> str:
    if isinstance(record, ErrorRecord):
        return f"{record.subject} norm={record.norm} kind=error error={record.error!r}"
    r = record.report
    d = record.decomposition
    deco = "null" if d is None else f"{d.unit}*({d.pi})^{d.k}*({d.gamma})^2"
    perfect = "null" if r.perfect_associate is None else str(r.perfect_associate)
    return (
        f"{record.subject} norm={record.norm} kind={record.kind.value} parity={r.parity} "
        f"sigma={r.sigma} normSigma={r.norm_sigma} twoNorm={r.two_norm} "
        f"normPerfect={str(r.is_norm_perfect).lower()} perfectUnit={perfect} decomposition={deco}"
    )


class _Emitter:
    def __init__(self, fmt: str, out, err):
        self.fmt, self.out, self.err = fmt, out, err
        self.records = 0
        self.errors = 0

    def record(self, record) -> None:
        if isinstance(record, ErrorRecord):
            self.errors += 1
        else:
            self.records += 1
        line = dumps(record) if self.fmt == "json" else record_text(record)
        print(line, file=self.out)

    def summary(self, fields: dict) -> None:
        fields = {"records": self.records, "errors": self.errors, **fields}
        if self.fmt == "json":
            print(json.dumps(fields, separators=(",", ":")), file=self.err)
        else:
            print(" ".join(f"{k}={_text_value(v)}" for k, v in fields.items()), file=self.err)


def _text_value(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _cmd_factor(args, out, err) -> int:
    fact = factor(args.subject)
    if args.format == "json":
        payload = {
            "subject": str(args.subject),
            "unit": str(fact.unit),
            "factors": [{"prime": str(p), "exponent": e} for p, e in fact.factors],
            "text": str(fact),
        }
        print(json.dumps(payload, separators=(",", ":")), file=out)
    else:
        print(fact, file=out)
    return EXIT_OK


def _cmd_sigma(args, out, err) -> int:
    s = sigma(args.subject)
    if args.format == "json":
        payload = {"subject": str(args.subject), "sigma": str(s), "normSigma": s.norm()}
        print(json.dumps(payload, separators=(",", ":")), file=out)
    else:
        print(f"{s} (norm {s.norm()})", file=out)
    return EXIT_OK


def _cmd_check(args, out, err) -> int:
    report = classify(args.subject).to_json()
    if args.format == "json":
        print(json.dumps(report, separators=(",", ":")), file=out)
    else:
        print(" ".join(f"{k}={_text_value(v)}" for k, v in report.items()), file=out)
    return EXIT_OK


def _scan_config(args, **overrides) -> SearchConfig:
    try:
        return SearchConfig(
            args.bound,
            shard_count=args.shards,
            shard_index=args.shard,
            **overrides,
        )
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _shard_fields(config: SearchConfig) -> dict:
    return {"normBound": config.norm_bound, "shard": config.shard_index, "shards": config.shard_count}


def _cmd_search(args, out, err) -> int:
    config = _scan_config(args, parity_filter=args.parity, kind_filter=KIND_CHOICES[args.kind])
    emit = _Emitter(args.format, out, err)
    for record in scan(config):
        emit.record(record)
    emit.summary(_shard_fields(config))
    return EXIT_ITEM_ERRORS if emit.errors else EXIT_OK


def _cmd_primes(args, out, err) -> int:
    config = _scan_config(args)
    if config.norm_bound < 2:
        raise UsageError("primes needs --bound of at least 2")
    lo, hi = config.norm_range()
    emit = _Emitter(args.format, out, err)
    scanned = 0
    for pi in canonical_primes(hi):
        if pi.norm() <= lo:
            continue
        scanned += 1
        record = classify_for_search(pi, {Kind.NORM_PERFECT_PRIME})
        if record is not None:
            emit.record(record)
    solutions, survivors = norm_perfect_prime_solutions()
    emit.summary(
        {
            "primesScanned": scanned,
            "solverSolutions": [list(s) for s in solutions],
            "solverPrimes": [str(p) for p in survivors],
            **_shard_fields(config),
        }
    )
    return EXIT_ITEM_ERRORS if emit.errors else EXIT_OK


def _cmd_verify(args, out, err) -> int:
    config = _scan_config(args)
    summary = verify_theorem(config.norm_bound, config.shard_count, config.shard_index)
    emit = _Emitter(args.format, out, err)
    for record in summary.records:
        emit.record(record)
    emit.summary({**summary.to_json(), **_shard_fields(config)})
    return EXIT_ITEM_ERRORS if summary.failed or emit.errors else EXIT_OK


COMMANDS = {
    "factor": _cmd_factor,
    "sigma": _cmd_sigma,
    "check": _cmd_check,
    "search": _cmd_search,
    "primes": _cmd_primes,
    "verify": _cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=err)
        return EXIT_USAGE
    except ZeroInputError as exc:
        print(f"{parser.prog}: error: {exc}", file=err)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
