"""Command-line front end.

Subcommands: `verify` runs named checks over a prime range with optional
parallel workers and machine-readable reports, `search` runs the zero-value
prime searches, `eval` evaluates a single sum, `identities` proves the
polynomial identities, and `oracle` compares the modular evaluators against
the exact-rational oracle.

Exit codes: 0 on success, 1 when a proven check fails, 2 on usage errors.
Conjecture-class and recorded results never affect the exit code.  Output is
byte-identical across runs and worker counts; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .checks import (
    CONJECTURE,
    PROVEN,
    RECORDED,
    REGISTRY,
    CheckResult,
    SearchTarget,
    check_names,
    run_suite,
    search_zero,
    standard_arguments,
)
from .errors import CongrlabError, NotPIntegral
from .modring import PrimePower, primes_in_range
from .oracle import (
    IDENTITY_SIZE_BOUNDS,
    IdentityKind,
    iter_identity_sizes,
    oracle_sum_exact,
    reduce_mod,
    verify_poly_identity,
)
from .sums import (
    FamilyKind,
    WeightKind,
    central_binomial_sum,
    jacobi_like_sum,
)

P_CEILING = 10_000


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated settings for one `verify` run."""

    names: list[str]
    p_min: int
    p_max: int
    a_set: Optional[list[Fraction]]
    output_format: str
    out_path: Optional[str]
    jobs: int

    def validate(self) -> None:
        if not 5 <= self.p_min <= self.p_max <= P_CEILING:
            raise UsageError(
                f"need 5 <= p-min <= p-max <= {P_CEILING}, "
                f"got [{self.p_min}, {self.p_max}]")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {self.jobs}")
        for name in self.names:
            if name not in REGISTRY:
                raise UsageError(f"unknown check {name!r}")


def sieve_primes(p_min: int, p_max: int) -> list[int]:
    """All primes in [max(5, p_min), p_max], ascending."""
    return primes_in_range(max(5, p_min), p_max)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse argument {text!r} as c/d") from None


def _format_a(a: Optional[Fraction]) -> Optional[str]:
    if a is None:
        return None
    return f"{a.numerator}/{a.denominator}"


def _result_row(r: CheckResult) -> dict:
    return {
        "check": r.check,
        "p": r.p,
        "a": _format_a(r.a),
        "modulus": r.modulus,
        "lhs": r.lhs.value,
        "rhs": r.rhs.value,
        "pass": r.passed,
        "status": r.status,
    }


def _verdict(r: CheckResult) -> str:
    if r.status == CONJECTURE:
        return "consistent" if r.passed else "INCONSISTENT"
    if r.status == RECORDED:
        return "recorded(match)" if r.passed else "recorded(mismatch)"
    return "pass" if r.passed else "FAIL"


def _emit(results: Sequence[CheckResult], fmt: str, stream: TextIO) -> None:
    if fmt == "jsonl":
        for r in results:
            stream.write(json.dumps(_result_row(r)) + "\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["check", "p", "a", "modulus", "lhs", "rhs", "pass", "status"])
        for r in results:
            row = _result_row(r)
            writer.writerow([
                row["check"], row["p"], row["a"] or "", row["modulus"],
                row["lhs"], row["rhs"], "true" if row["pass"] else "false",
                row["status"],
            ])
    elif fmt == "table":
        for r in results:
            a_text = _format_a(r.a) or "-"
            stream.write(
                f"{r.check:<22} p={r.p:<6} a={a_text:<8} mod={r.modulus:<12} "
                f"lhs={r.lhs.value:<12} rhs={r.rhs.value:<12} {_verdict(r)}\n")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown format {fmt!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.checks == "all":
        statuses = [PROVEN, RECORDED]
        if args.include_conjectures:
            statuses.append(CONJECTURE)
        names = check_names(statuses)
    else:
        names = [n.strip() for n in args.checks.split(",") if n.strip()]
        if not names:
            raise UsageError("--checks got an empty list")
    if args.a_set == "default":
        a_set = None
    else:
        a_set = [_parse_fraction(t) for t in args.a_set.split(",") if t.strip()]
        if not a_set:
            raise UsageError("--a-set got an empty list")
    jobs = args.jobs
    if jobs is None:
        env = os.environ.get("CONGRLAB_JOBS", "")
        jobs = int(env) if env.isdigit() and int(env) > 0 else 1
    config = RunConfig(
        names=names,
        p_min=args.p_min,
        p_max=args.p_max,
        a_set=a_set,
        output_format=args.format,
        out_path=args.out,
        jobs=jobs,
    )
    config.validate()
    started = time.perf_counter()
    results = list(run_suite(config.names, config.p_min, config.p_max,
                             a_set=config.a_set, jobs=config.jobs))
    elapsed = time.perf_counter() - started
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            _emit(results, config.output_format, handle)
    else:
        _emit(results, config.output_format, sys.stdout)
    required_failures = sum(
        1 for r in results if r.status == PROVEN and not r.passed)
    consistent = sum(1 for r in results if r.status == CONJECTURE and r.passed)
    conjectures = sum(1 for r in results if r.status == CONJECTURE)
    print(
        f"{len(results)} results, {required_failures} proven-check failures"
        + (f", conjectures consistent in range: {consistent}/{conjectures}"
           if conjectures else "")
        + f" ({elapsed:.1f}s)",
        file=sys.stderr,
    )
    return 1 if required_failures else 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.p_max < 5:
        raise UsageError(f"--p-max must be >= 5, got {args.p_max}")
    found = search_zero(SearchTarget(args.target), args.p_max)
    for p in found:
        print(p)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    weight = WeightKind(args.weight)
    p, e = args.p, args.exp
    try:
        PrimePower(p, e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.family == "generic":
        if args.a is None:
            raise UsageError("--family generic requires --a C/D")
        value = jacobi_like_sum(_parse_fraction(args.a), weight, p, e)
    else:
        if args.a is not None:
            raise UsageError("--a only applies to --family generic")
        family = FamilyKind(args.family)
        value = central_binomial_sum(family, weight, p, e)
    print(f"{value.value} (mod {value.modulus.m})")
    return 0


def _cmd_identities(args: argparse.Namespace) -> int:
    failures = 0
    for kind in IdentityKind:
        checked = 0
        bad = []
        for size in iter_identity_sizes(kind, args.max_size):
            checked += 1
            if not verify_poly_identity(kind, *size):
                bad.append(size)
        status = "ok" if not bad else f"FAILED at {bad}"
        bound = IDENTITY_SIZE_BOUNDS[kind]
        cap = bound if args.max_size is None else min(bound, args.max_size)
        print(f"{kind.value:<12} sizes <= {cap:<3} ({checked} instances): {status}")
        failures += len(bad)
    return 1 if failures else 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    p, e = args.p, args.exp
    try:
        modulus = PrimePower(p, e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if e > 2:
        raise UsageError("oracle comparison supports --exp 1 or 2")
    a = _parse_fraction(args.a)
    mismatches = 0
    print(f"a = {_format_a(a)}, modulus {modulus.m}")
    for weight in WeightKind:
        try:
            modular = str(jacobi_like_sum(a, weight, p, e).value)
        except NotPIntegral:
            modular = "not p-integral"
        try:
            exact = str(reduce_mod(oracle_sum_exact(a, weight, p), modulus).value)
        except NotPIntegral:
            exact = "not p-integral"
        match = "ok" if modular == exact else "MISMATCH"
        mismatches += modular != exact
        print(f"{weight.value:<14} modular={modular:<16} oracle={exact:<16} {match}")
    return 1 if mismatches else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congrlab",
        description="Exact verification of prime-power congruences for "
                    "binomial sums with harmonic-number weights.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_verify = sub.add_parser("verify", help="run named checks over a prime range")
    p_verify.add_argument("--checks", default="all",
                          help="'all' or comma-separated check names")
    p_verify.add_argument("--p-min", type=int, default=5)
    p_verify.add_argument("--p-max", type=int, default=499)
    p_verify.add_argument("--a-set", default="default",
                          help="'default' or comma-separated c/d arguments")
    p_verify.add_argument("--include-conjectures", action="store_true")
    p_verify.add_argument("--format", choices=("table", "jsonl", "csv"),
                          default="jsonl")
    p_verify.add_argument("--out", default=None, help="write the report here")
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="parallel workers (default: CONGRLAB_JOBS or 1)")
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="find primes with vanishing special values")
    p_search.add_argument("--target", required=True,
                          choices=[t.value for t in SearchTarget])
    p_search.add_argument("--p-max", type=int, required=True)
    p_search.set_defaults(func=_cmd_search)

    p_eval = sub.add_parser("eval", help="evaluate a single weighted sum")
    p_eval.add_argument("--p", type=int, required=True)
    p_eval.add_argument("--exp", type=int, required=True)
    p_eval.add_argument("--family", default="generic",
                        choices=["generic"] + [f.value for f in FamilyKind])
    p_eval.add_argument("--a", default=None, help="argument C/D for the generic family")
    p_eval.add_argument("--weight", required=True,
                        choices=[w.value for w in WeightKind])
    p_eval.set_defaults(func=_cmd_eval)

    p_id = sub.add_parser("identities", help="prove the polynomial identities")
    p_id.add_argument("--max-size", type=int, default=None)
    p_id.set_defaults(func=_cmd_identities)

    p_oracle = sub.add_parser("oracle",
                              help="modular vs exact-oracle values side by side")
    p_oracle.add_argument("--p", type=int, required=True)
    p_oracle.add_argument("--exp", type=int, required=True)
    p_oracle.add_argument("--a", default="1/2")
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (UsageError, CongrlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
