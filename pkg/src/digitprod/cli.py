"""Command line interface.

Subcommands: terms (range scans), trajectory (single orbits), verify
(claim checks), sieve (modular analysis of 9**a * 49**b).

Exit codes: 0 success or claim holds, 1 claim refuted, 2 b-file export
blocked by undecided values, 3 claim holds apart from undecided values,
64 usage error, 74 output file error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .conjectures import (
    HOLDS,
    HOLDS_WITH_UNDECIDED,
    REFUTED,
    ConjectureReport,
    check_cardinality,
    check_conjecture1,
    check_lemma1,
    check_no_nine,
    check_smooth_families,
    check_steps_bound,
    check_theorem1,
    second_iterate_profile,
)
from .core import (
    DEFAULT_BUDGET,
    EntersCycle,
    IterationBudget,
    ReachesOne,
    Undecided,
    decimal_string,
    iterate_trajectory,
)
from .residues import (
    residue_table_mod_100,
    sieve_binary_residues,
    verify_periodic_congruence,
)
from .sequences import (
    ScanPartition,
    export_bfile,
    export_json,
    export_trajectory_csv,
    export_trajectory_json,
    parallel_scan,
)

CLAIMS = (
    "lemma1",
    "theorem1",
    "conjecture1",
    "profile0125",
    "smooth-families",
    "no-nine",
    "steps-bound",
    "cardinality",
)

_VERIFY_DEFAULTS = {
    "lemma1": {"limit": 10**6},
    "theorem1": {"limit": 10**6},
    "conjecture1": {"limit": 10**8},
    "profile0125": {"limit": 10**6},
    "smooth-families": {"limit": 10**6},
    "no-nine": {"limit": 10**7},
    "steps-bound": {"limit": 10**6, "k": 2, "bound": 3},
    "cardinality": {"limit": 1000, "k": 4, "k2": 5},
}

_STATUS_EXIT = {HOLDS: 0, REFUTED: 1, HOLDS_WITH_UNDECIDED: 3}


class _Parser(argparse.ArgumentParser):
    """argparse terminates with status 2; usage errors here are 64."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _int_at_least(minimum: int):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return convert


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-steps",
        type=_int_at_least(1),
        default=DEFAULT_BUDGET.max_steps,
        help="stop an orbit after this many applications",
    )
    parser.add_argument(
        "--max-digits",
        type=_int_at_least(1),
        default=DEFAULT_BUDGET.max_digits,
        help="stop an orbit once an iterate exceeds this many digits",
    )


def _add_out_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out", default=None, help="write output to this file instead of stdout"
    )


def _emit(text: str, out: Optional[str]) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 74
    return 0


def _budget_from(args: argparse.Namespace) -> IterationBudget:
    return IterationBudget(max_steps=args.max_steps, max_digits=args.max_digits)


def _cmd_terms(args: argparse.Namespace) -> int:
    budget = _budget_from(args)
    if args.k >= 3 and args.max_digits == DEFAULT_BUDGET.max_digits:
        print(
            "note: orbits for k >= 3 can grow very large before the budget "
            "decides them; --max-digits 10000 classifies much faster",
            file=sys.stderr,
        )
    chunk = args.chunk if args.chunk else min(args.limit, 65536)
    print(
        f"scanning 1..{args.limit} with k={args.k} on {args.threads} thread(s)",
        file=sys.stderr,
    )
    table = parallel_scan(
        ScanPartition(1, args.limit, chunk), args.k, budget, args.threads
    )
    print(
        f"{len(table.records)} terms, {len(table.undecided)} undecided",
        file=sys.stderr,
    )
    if args.format == "bfile":
        if table.undecided:
            print(
                f"error: {len(table.undecided)} undecided values; "
                "resolve them (larger budget) before exporting a b-file",
                file=sys.stderr,
            )
            return 2
        text = export_bfile(table, offset=args.offset)
    elif args.format == "json":
        text = export_json(table)
    else:
        lines = []
        for record in table.records:
            pen = "-" if record.penultimate is None else str(record.penultimate)
            lines.append(f"{record.n} {record.steps} {pen}\n")
        for value in table.undecided:
            lines.append(f"{value} undecided -\n")
        text = "".join(lines)
    return _emit(text, args.out)


def _cmd_trajectory(args: argparse.Namespace) -> int:
    budget = _budget_from(args)
    traj = iterate_trajectory(args.n, args.k, budget)
    if args.format == "json":
        text = export_trajectory_json(traj)
    elif args.format == "csv":
        text = export_trajectory_csv(traj)
    else:
        lines = [
            f"step {i}: {decimal_string(v)}\n" for i, v in enumerate(traj.iterates)
        ]
        outcome = traj.outcome
        if isinstance(outcome, ReachesOne):
            lines.append(f"outcome: reaches 1 after {outcome.steps} steps\n")
        elif isinstance(outcome, EntersCycle):
            lines.append(
                f"outcome: enters cycle at index {outcome.entry_index} "
                f"(entry {decimal_string(outcome.entry_value)}, "
                f"length {outcome.length})\n"
            )
        else:
            assert isinstance(outcome, Undecided)
            lines.append(f"outcome: undecided ({outcome.reason})\n")
        text = "".join(lines)
    return _emit(text, args.out)


def _resolved(args: argparse.Namespace, name: str) -> int:
    explicit = getattr(args, name)
    if explicit is not None:
        return explicit
    defaults = _VERIFY_DEFAULTS[args.claim]
    if name not in defaults:
        raise SystemExit(
            f"digitprod verify: error: --{name} does not apply to {args.claim}"
        )
    return defaults[name]


def _run_claim(args: argparse.Namespace) -> ConjectureReport:
    budget = _budget_from(args)
    threads = args.threads
    claim = args.claim
    if claim == "lemma1":
        return check_lemma1(_resolved(args, "limit"), budget, threads=threads)
    if claim == "theorem1":
        return check_theorem1(_resolved(args, "limit"), budget, threads=threads)
    if claim == "conjecture1":
        return check_conjecture1(_resolved(args, "limit"), budget)
    if claim == "profile0125":
        return second_iterate_profile(_resolved(args, "limit"), budget, threads=threads)
    if claim == "smooth-families":
        return check_smooth_families(_resolved(args, "limit"))
    if claim == "no-nine":
        return check_no_nine(_resolved(args, "limit"), budget, threads=threads)
    if claim == "steps-bound":
        return check_steps_bound(
            _resolved(args, "limit"),
            _resolved(args, "k"),
            _resolved(args, "bound"),
            budget,
            threads=threads,
        )
    return check_cardinality(
        _resolved(args, "limit"),
        _resolved(args, "k"),
        _resolved(args, "k2"),
        budget,
        threads=threads,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    print(f"verifying {args.claim}", file=sys.stderr)
    report = _run_claim(args)
    if args.format == "json":
        payload = {
            "claim_id": report.claim_id,
            "bound": report.bound,
            "k": report.k,
            "status": report.status,
            "counterexamples": list(report.counterexamples),
            "undecided_count": report.undecided_count,
            "elapsed": report.elapsed,
            "notes": report.notes,
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"claim: {report.claim_id}\n",
            f"status: {report.status}\n",
            f"bound: {report.bound}\n",
            f"k: {report.k}\n",
        ]
        if report.counterexamples:
            shown = ", ".join(str(c) for c in report.counterexamples[:10])
            extra = len(report.counterexamples) - min(10, len(report.counterexamples))
            suffix = f" (+{extra} more)" if extra else ""
            lines.append(f"counterexamples: {shown}{suffix}\n")
        else:
            lines.append("counterexamples: none\n")
        lines.append(f"undecided: {report.undecided_count}\n")
        lines.append(f"elapsed: {report.elapsed:.3f}s\n")
        if report.notes:
            lines.append(f"notes: {report.notes}\n")
        text = "".join(lines)
    code = _emit(text, args.out)
    if code:
        return code
    return _STATUS_EXIT[report.status]


def _cmd_sieve(args: argparse.Namespace) -> int:
    print(f"sieving binary residues mod 10**{args.r}", file=sys.stderr)
    report = sieve_binary_residues(args.r)
    residues = sorted({c.residue for c in report.surviving})
    spot_failures = 0
    spot_lines = []
    for cls in report.surviving[: args.spot_checks]:
        result = verify_periodic_congruence(
            cls.a_offset,
            cls.b_offset,
            cls.b_period,
            args.r,
            cls.residue,
            samples=args.samples,
        )
        ok = result.status == HOLDS
        spot_failures += 0 if ok else 1
        spot_lines.append(
            f"spot-check a={cls.a_offset} (mod {cls.a_period}), "
            f"b={cls.b_offset} (mod {cls.b_period}) -> {cls.residue}: "
            f"{'ok' if ok else 'FAILED'}\n"
        )
    if args.format == "json":
        payload = {
            "r": report.r,
            "modulus": 10**report.r,
            "a_order": report.a_order,
            "b_order": report.b_order,
            "surviving_count": report.surviving_count,
            "eliminated_count": report.eliminated_count,
            "complete": report.complete,
            "residues": residues,
            "classes": [
                {
                    "a_offset": c.a_offset,
                    "a_period": c.a_period,
                    "b_offset": c.b_offset,
                    "b_period": c.b_period,
                    "residue": c.residue,
                }
                for c in report.surviving
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"modulus: 10**{report.r}\n",
            f"ord(9) = {report.a_order}, ord(49) = {report.b_order}, "
            f"torus size {report.a_order * report.b_order}\n",
            f"surviving pairs: {report.surviving_count}\n",
            f"eliminated pairs: {report.eliminated_count}\n",
            f"achievable binary-digit residues: "
            f"{', '.join(str(x) for x in residues)}\n",
        ]
        if report.complete:
            lines.append("classes (complete):\n")
        else:
            lines.append("classes (one witness per residue; full list too large):\n")
        for c in report.surviving[:200]:
            lines.append(
                f"  9^a * 49^b = {c.residue} for a={c.a_offset} "
                f"(mod {c.a_period}), b={c.b_offset} (mod {c.b_period})\n"
            )
        if len(report.surviving) > 200:
            lines.append(f"  ... {len(report.surviving) - 200} more\n")
        lines.extend(spot_lines)
        if args.r == 2:
            lines.append("residues mod 100 by exponent pattern:\n")
            for a, parity, residue in residue_table_mod_100():
                lines.append(f"  9^{a} * 49^{parity} = {residue} (mod 100)\n")
        text = "".join(lines)
    code = _emit(text, args.out)
    if code:
        return code
    return 1 if spot_failures else 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="digitprod",
        description="Iterated powered digit products: scans, orbits, claim checks.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    terms = sub.add_parser(
        "terms",
        help="scan a range for integers whose orbit reaches 1",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    terms.add_argument("--k", type=_int_at_least(2), default=2, help="exponent")
    terms.add_argument(
        "--limit", type=_int_at_least(1), default=1000, help="scan 1..limit"
    )
    terms.add_argument(
        "--threads", type=_int_at_least(1), default=1, help="worker processes"
    )
    terms.add_argument(
        "--chunk",
        type=_int_at_least(1),
        default=0,
        help="chunk width for the scan partition (0 picks one automatically)",
    )
    terms.add_argument(
        "--format", choices=("text", "json", "bfile"), default="text"
    )
    terms.add_argument(
        "--offset",
        type=_int_at_least(0),
        default=1,
        help="first index for b-file output",
    )
    _add_budget_flags(terms)
    _add_out_flag(terms)
    terms.set_defaults(handler=_cmd_terms)

    traj = sub.add_parser(
        "trajectory",
        help="print one orbit step by step",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    traj.add_argument("n", type=_int_at_least(1), help="starting value")
    traj.add_argument("--k", type=_int_at_least(2), default=2, help="exponent")
    traj.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_budget_flags(traj)
    _add_out_flag(traj)
    traj.set_defaults(handler=_cmd_trajectory)

    verify = sub.add_parser(
        "verify",
        help="check a structural claim over a stated range",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        epilog=(
            "per-claim defaults: lemma1/theorem1/profile0125 --limit 1000000; "
            "no-nine --limit 10000000; conjecture1 --limit 100000000; "
            "smooth-families --limit 1000000; steps-bound --limit 1000000 "
            "--k 2 --bound 3; cardinality --limit 1000 --k 4 --k2 5"
        ),
    )
    verify.add_argument("claim", choices=CLAIMS)
    verify.add_argument(
        "--limit", type=_int_at_least(1), default=None, help="scan 1..limit"
    )
    verify.add_argument(
        "--bound",
        type=_int_at_least(1),
        default=None,
        help="step bound (steps-bound only)",
    )
    verify.add_argument(
        "--k", type=_int_at_least(2), default=None, help="exponent"
    )
    verify.add_argument(
        "--k2",
        type=_int_at_least(2),
        default=None,
        help="second exponent (cardinality only)",
    )
    verify.add_argument(
        "--threads", type=_int_at_least(1), default=1, help="worker processes"
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    _add_budget_flags(verify)
    _add_out_flag(verify)
    verify.set_defaults(handler=_cmd_verify)

    sieve = sub.add_parser(
        "sieve",
        help="sieve 9^a * 49^b mod 10^r against binary-digit residues",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sieve.add_argument(
        "--r", type=_int_at_least(1), default=2, help="number of trailing digits"
    )
    sieve.add_argument(
        "--samples",
        type=_int_at_least(1),
        default=3,
        help="exponent samples per spot-checked class",
    )
    sieve.add_argument(
        "--spot-checks",
        type=_int_at_least(0),
        default=4,
        help="number of surviving classes to spot-check",
    )
    sieve.add_argument("--format", choices=("text", "json"), default="text")
    _add_out_flag(sieve)
    sieve.set_defaults(handler=_cmd_sieve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 64


if __name__ == "__main__":
    sys.exit(main())
