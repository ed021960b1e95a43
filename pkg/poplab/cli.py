# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Command-line interface.

Exit status: 0 on success (every verified claim passed), 1 when a request
exceeds the enumeration cap, 2 for invalid input, 3 for a mathematical failure
(no recurrence found, or a claim failed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from contextlib import contextmanager
from typing import (
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .banded import BandedSpec, banded_count, banded_sequence, find_recurrence, kfib
from .config import FORMATS, RunConfig
from .enumerator import AvoiderQuery, count_avoiders, count_sequence, distribution
from .gfseries import solve_system, solved_counts, theorem_series, univariate
from .patterns import parse_pop_list
from .perm_core import MAX_N_ENV, EnumerationCapError
from .plotting import plot_sequences
from .poly import VARIABLES, MultiPoly, XSeries
from .verification import ClaimReport, verify_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CAP = 1
EXIT_USAGE = 2
EXIT_MATH = 3


def _int_pair(text: str) -> Tuple[int, int]:
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected two integers a,b; got {text!r}"
        ) from None
    return (first, second)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers; got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="plain")
    common.add_argument(
        "--jobs", type=int, default=None,
        help="worker processes for enumeration (default: all cores)",
    )
    common.add_argument(
        "--max-n", type=int, default=None,
        help=f"raise the enumeration cap for this run (also settable via {MAX_N_ENV})",
    )
    common.add_argument(
        "--allow-large", action="store_true", help="acknowledge a raised --max-n"
    )
    common.add_argument(
        "--log-level", default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )

    pops = argparse.ArgumentParser(add_help=False)
    pops.add_argument(
        "--pops", action="append", default=[],
        help="POPs to avoid: Pj:4,Pt:5, classical:2413 or 'pop k=3 below=3<1'",
    )
    pops.add_argument("--separable", action="store_true")

    parser = argparse.ArgumentParser(
        prog="poplab",
        description="Enumerate and verify permutation classes avoiding POPs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    count = sub.add_parser("count", parents=[common, pops], help="count avoiders")
    count.add_argument("--banded", type=_int_pair, help="window slack a,b")
    size = count.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int)
    size.add_argument("--n-max", type=int, help="print the sequence n = 0..N")
    count.add_argument("--plot", metavar="PATH", help="save a plot of the sequence")
    count.add_argument("--linear", action="store_true", help="linear y axis for --plot")

    dist = sub.add_parser(
        "distribution", parents=[common, pops], help="joint statistic distribution"
    )
    dist.add_argument("--n", type=int, required=True)

    rec = sub.add_parser(
        "recurrence", parents=[common, pops], help="minimal linear recurrence"
    )
    source = rec.add_mutually_exclusive_group(required=True)
    source.add_argument("--banded", type=_int_pair, help="window slack a,b")
    source.add_argument("--system", dest="pair", type=_int_pair, help="j,l")
    source.add_argument("--seq", type=_int_list, help="literal terms a_0,a_1,...")
    source.add_argument(
        "--from-pops", action="store_true", help="count the --pops class"
    )
    rec.add_argument("--terms", type=int, default=12)

    verify = sub.add_parser("verify", parents=[common], help="check registered claims")
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", dest="all_claims", action="store_true")
    which.add_argument("--claim", dest="claims", action="append")
    verify.add_argument("--n-max", type=int, help="override every claim's n_max")

    kf = sub.add_parser("kfib", parents=[common], help="k-Fibonacci numbers")
    kf.add_argument("--k", type=int, required=True)
    kf.add_argument("--n", type=int, required=True)

    series = sub.add_parser("series", parents=[common], help="expand F_{j,l}")
    series.add_argument("--pair", type=_int_pair, required=True, help="j,l")
    series.add_argument("--order", type=int, default=10)
    series.add_argument("--system", action="store_true", help="use the solved system")
    series.add_argument("--ones", action="store_true", help="set p..t to 1")
    return parser


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def format_sequence(values: Sequence[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([str(v) for v in values])
    if fmt == "csv":
        return _csv([("n", "value")] + [(n, v) for n, v in enumerate(values)])
    return ", ".join(str(v) for v in values)


def format_poly(poly: MultiPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly.to_json())
    if fmt == "csv":
        rows = [e + (c,) for e, c in poly.terms()]
        return _csv([VARIABLES + ("coefficient",)] + rows)
    return str(poly)


def format_series(series: XSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series.to_json())
    if fmt == "csv":
        rows: List[Sequence[Any]] = [("n",) + VARIABLES + ("coefficient",)]
        for n, coeff in enumerate(series.coeffs):
            rows.extend((n,) + e + (c,) for e, c in coeff.terms())
        return _csv(rows)
    return str(series)


def format_reports(reports: Sequence[ClaimReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2)
    rows = [
        (r.name, r.status, len(r.comparisons), len(r.failures()), f"{r.elapsed:.2f}")
        for r in reports
    ]
    if fmt == "csv":
        return _csv([("claim", "status", "comparisons", "failures", "seconds")] + rows)
    width = max((len(r.name) for r in reports), default=5)
    lines = [f"{'claim':<{width}}  status   checks  failed  seconds"]
    for name, status, checks, failed, seconds in rows:
        lines.append(
            f"{name:<{width}}  {status:<7}  {checks:>6}  {failed:>6}  {seconds:>7}"
        )
        for comp in next(r for r in reports if r.name == name).failures():
            lines.append(
                f"    {comp.label}: expected {comp.expected}, got {comp.actual}"
            )
    return "\n".join(lines)


def _scalar(fmt: str, fields: Mapping[str, Any], key: str) -> str:
    if fmt == "json":
        return json.dumps({k: str(v) if k == key else v for k, v in fields.items()})
    if fmt == "csv":
        return _csv([tuple(fields), tuple(fields.values())])
    return str(fields[key])


def _query(cfg: RunConfig, n: int) -> AvoiderQuery:
    return AvoiderQuery(n, tuple(parse_pop_list(cfg.pops)), cfg.separable)


def cmd_count(cfg: RunConfig) -> int:
    spec = BandedSpec(*cfg.banded) if cfg.banded else None
    if cfg.n is not None:
        if spec is not None:
            value = banded_count(cfg.n, spec)
        else:
            value = count_avoiders(_query(cfg, cfg.n), jobs=cfg.jobs)
        print(_scalar(cfg.fmt, {"n": cfg.n, "count": value}, "count"))
        return EXIT_OK

    if spec is not None:
        values = banded_sequence(spec, cfg.n_max)
        label = f"banded {spec}"
    else:
        pops = parse_pop_list(cfg.pops)
        values = count_sequence(pops, cfg.separable, cfg.n_max, jobs=cfg.jobs)
        label = ",".join(str(p) for p in pops) or "all"
    print(format_sequence(values, cfg.fmt))
    plot_sequences({label: values}, cfg.plotting, title="avoider counts")
    return EXIT_OK


def cmd_distribution(cfg: RunConfig) -> int:
    poly = distribution(_query(cfg, cfg.n), jobs=cfg.jobs)
    print(format_poly(poly, cfg.fmt))
    return EXIT_OK


def _recurrence_input(cfg: RunConfig) -> List[int]:
    if cfg.seq is not None:
        return list(cfg.seq)
    last = cfg.terms - 1
    if cfg.banded is not None:
        return banded_sequence(BandedSpec(*cfg.banded), last)
    if cfg.pair is not None:
        return solved_counts(*cfg.pair, last)
    return count_sequence(parse_pop_list(cfg.pops), cfg.separable, last, jobs=cfg.jobs)


def cmd_recurrence(cfg: RunConfig) -> int:
    rec = find_recurrence(_recurrence_input(cfg))
    if cfg.fmt == "json":
        print(json.dumps(rec.to_json()))
    elif cfg.fmt == "csv":
        print(_csv([("power", "coefficient")]
                   + [(i, str(c)) for i, c in enumerate(rec.coefficients, start=1)]))
    else:
        print(rec.denominator())
    return EXIT_OK


def cmd_verify(cfg: RunConfig, claims: Mapping[str, Mapping[str, Any]]) -> int:
    names = None if cfg.all_claims else cfg.claims
    reports = verify_all(claims, names=names, n_max=cfg.n_max, jobs=cfg.jobs)
    print(format_reports(reports, cfg.fmt))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MATH


def cmd_kfib(cfg: RunConfig) -> int:
    value = kfib(cfg.k, cfg.n)
    print(_scalar(cfg.fmt, {"k": cfg.k, "n": cfg.n, "value": value}, "value"))
    return EXIT_OK


def cmd_series(cfg: RunConfig) -> int:
    j, l = cfg.pair  # noqa: E741
    if cfg.system:
        series = solve_system(j, l, cfg.order)
    else:
        series = theorem_series(j, l, cfg.order)
    if cfg.ones:
        print(format_sequence(univariate(series), cfg.fmt))
    else:
        print(format_series(series, cfg.fmt))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "count": cmd_count,
    "distribution": cmd_distribution,
    "recurrence": cmd_recurrence,
    "kfib": cmd_kfib,
    "series": cmd_series,
}


@contextmanager
def _cap_override(cfg: RunConfig) -> Iterator[None]:
    """Expose --max-n through the environment so worker processes see it too."""
    if cfg.max_n is None:
        yield
        return
    previous = os.environ.get(MAX_N_ENV)
    os.environ[MAX_N_ENV] = str(cfg.max_n)
    try:
        yield
    finally:
        if previous is None:
            del os.environ[MAX_N_ENV]
        else:
            os.environ[MAX_N_ENV] = previous


def _default_claims() -> Mapping[str, Mapping[str, Any]]:
    from configs import CLAIMS

    return CLAIMS


def main(
    argv: Optional[Sequence[str]] = None,
    all_claims: Optional[Mapping[str, Mapping[str, Any]]] = None,
) -> int:
    """Run one subcommand and return its exit status.

    Args:
        argv: Arguments after the program name; defaults to ``sys.argv[1:]``.
        all_claims: Claim registry for ``verify``; defaults to ``configs.CLAIMS``.
    """
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    logging.basicConfig(
        level=getattr(logging, ns.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    try:
        cfg = RunConfig.from_namespace(ns)
        with _cap_override(cfg):
            if cfg.subcommand == "verify":
                claims = _default_claims() if all_claims is None else all_claims
                return cmd_verify(cfg, claims)
            return COMMANDS[cfg.subcommand](cfg)
    except EnumerationCapError as err:
        logger.error("%s", err)
        return EXIT_CAP
    except ValueError as err:
        logger.error("%s", err)
        return EXIT_USAGE
    except ArithmeticError as err:
        logger.error("%s", err)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
