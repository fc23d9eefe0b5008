"""Command line interface.

Subcommands: primes, density, scan, qscan, verify.  Exit codes: 0 success,
2 invalid or inadmissible input, 3 budget exceeded, 4 property-check
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import DEFAULTS
from .density import squarefree_density
from .errors import (
    BudgetExceededError,
    CertificationError,
    InadmissibleError,
    ParseError,
)
from .experiments import (
    qscan,
    qscan_rows_to_csv,
    qscan_rows_to_json,
    scan,
    scan_rows_to_csv,
    scan_rows_to_json,
)
from .finitefield import field_from_order
from .parsing import parse_bipoly
from .polyring import count_primes, enumerate_primes
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_PROPERTY = 4


def _add_field_args(sub):
    sub.add_argument("--q", type=int, required=True, help="field size p^m")
    sub.add_argument(
        "--modulus",
        type=str,
        default=None,
        help="extension modulus as an expression in u, e.g. \"u^2+1\"",
    )


def _field(args):
    return field_from_order(args.q, args.modulus)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fqsieve",
        description="square-free values of polynomials at prime arguments"
        " over F_q[t]",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("primes", help="enumerate or count monic primes")
    _add_field_args(sp)
    sp.add_argument("--n", type=int, required=True, help="degree")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--budget", type=int, default=None)

    sp = subs.add_parser("density", help="truncated density with certified bounds")
    _add_field_args(sp)
    sp.add_argument("--f", type=str, required=True, help="polynomial in t and x")
    sp.add_argument("--M", type=int, required=True, help="truncation cutoff")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--tail-extension", type=int, default=None)

    sp = subs.add_parser("scan", help="empirical fraction per degree")
    _add_field_args(sp)
    sp.add_argument("--f", type=str, required=True)
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--M", type=int, default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)

    sp = subs.add_parser("qscan", help="fraction at fixed degree across fields")
    sp.add_argument("--q-list", type=str, required=True, help="comma separated")
    sp.add_argument("--f", type=str, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)

    sp = subs.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--modulus", type=str, default=None)
    sp.add_argument("--f", type=str, default=None)
    sp.add_argument("--slack", type=float, default=None)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)
    return parser


def _cmd_primes(args) -> int:
    field = _field(args)
    if args.count_only:
        print(count_primes(field, args.n))
        return EXIT_OK
    primes = enumerate_primes(field, args.n, args.budget)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "q": field.q,
                    "n": args.n,
                    "count": len(primes),
                    "primes": [str(P) for P in primes],
                },
                indent=2,
            )
        )
    else:
        print("index,poly")
        for i, P in enumerate(primes):
            print(f"{i},{P}")
    return EXIT_OK


def _cmd_density(args) -> int:
    field = _field(args)
    f = parse_bipoly(args.f, field)
    est = squarefree_density(
        f, args.M, budget=args.budget, tail_extension=args.tail_extension
    )
    if args.format == "json":
        print(json.dumps(est.to_json_dict(), indent=2))
    else:
        print("truncated_value,lower,upper,M,B,positive,culprit")
        culprit = "" if est.culprit is None else str(est.culprit)
        print(
            f"{est.truncated_value:.12g},{est.lower:.12g},{est.upper:.12g},"
            f"{est.M},{est.B},{est.positive},{culprit}"
        )
    return EXIT_OK


def _cmd_scan(args) -> int:
    field = _field(args)
    f = parse_bipoly(args.f, field)
    rows = scan(
        f,
        args.n_min,
        args.n_max,
        args.M,
        budget=args.budget,
        threads=args.threads,
    )
    if args.format == "json":
        sys.stdout.write(scan_rows_to_json(rows))
    else:
        sys.stdout.write(scan_rows_to_csv(rows))
    return EXIT_OK


def _cmd_qscan(args) -> int:
    try:
        q_list = [int(part) for part in args.q_list.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"bad --q-list: {exc}") from exc
    rows = qscan(args.f, q_list, args.n, budget=args.budget, threads=args.threads)
    if args.format == "json":
        sys.stdout.write(qscan_rows_to_json(rows))
    else:
        sys.stdout.write(qscan_rows_to_csv(rows))
    return EXIT_OK


def _cmd_verify(args) -> int:
    f = None
    if args.f is not None:
        field = field_from_order(args.q, args.modulus)
        f = parse_bipoly(args.f, field)
    checks = run_suite(
        args.suite,
        f=f,
        slack=args.slack,
        budget=args.budget,
        threads=args.threads,
    )
    failures = 0
    for chk in checks:
        status = "PASS" if chk.passed else "FAIL"
        detail = f"  ({chk.detail})" if chk.detail else ""
        print(f"{status} {chk.name}{detail}")
        if not chk.passed:
            failures += 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_PROPERTY


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "primes": _cmd_primes,
        "density": _cmd_density,
        "scan": _cmd_scan,
        "qscan": _cmd_qscan,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (
        ParseError,
        InadmissibleError,
        CertificationError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
