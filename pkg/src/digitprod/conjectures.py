"""Empirical verification of structural claims about terms.

Each checker scans a stated range, collects counterexamples, and
returns a ConjectureReport. A claim holds when the scan finished with
no counterexamples and nothing left undecided by the iteration budget;
counterexamples always force the refuted status.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

from .core import (
    DEFAULT_BUDGET,
    IterationBudget,
    Membership,
    decimal_string,
    step,
)
from .sequences import TermTable, _classify_value, enumerate_terms
from .smooth import seven_smooth_up_to

HOLDS = "holds"
REFUTED = "refuted"
HOLDS_WITH_UNDECIDED = "holds-with-undecided"


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of one verification scan.

    status is refuted exactly when counterexamples is nonempty;
    undecided_count reports values the budget could not classify.
    """

    claim_id: str
    bound: int
    k: int
    status: str
    counterexamples: tuple[int, ...]
    undecided_count: int
    elapsed: float
    notes: str = ""


@dataclass(frozen=True)
class DigitProfile:
    """Decimal digit counts of a value, indexed 0 through 9."""

    value: int
    counts: tuple[int, ...]

    @classmethod
    def of(cls, value: int) -> "DigitProfile":
        if value < 0:
            raise ValueError("digit profiles are defined for nonnegative integers")
        counts = [0] * 10
        for ch in decimal_string(value):
            counts[ord(ch) - 48] += 1
        return cls(value, tuple(counts))

    def support(self) -> frozenset[int]:
        return frozenset(d for d in range(10) if self.counts[d])

    def count(self, digit: int) -> int:
        return self.counts[digit]


def _build_report(
    claim_id: str,
    bound: int,
    k: int,
    counterexamples: list[int],
    undecided_count: int,
    started: float,
    notes: str = "",
) -> ConjectureReport:
    if counterexamples:
        status = REFUTED
    elif undecided_count:
        status = HOLDS_WITH_UNDECIDED
    else:
        status = HOLDS
    return ConjectureReport(
        claim_id=claim_id,
        bound=bound,
        k=k,
        status=status,
        counterexamples=tuple(counterexamples),
        undecided_count=undecided_count,
        elapsed=time.perf_counter() - started,
        notes=notes,
    )


def check_steps_bound(
    limit: int = 10**6,
    k: int = 2,
    bound: int = 3,
    budget: IterationBudget = DEFAULT_BUDGET,
    table: Optional[TermTable] = None,
    threads: int = 1,
) -> ConjectureReport:
    """No term up to limit needs more than `bound` applications."""
    started = time.perf_counter()
    if table is None:
        table = enumerate_terms(limit, k, budget, threads=threads)
    bad = [r.n for r in table.records if r.steps > bound]
    notes = f"{len(table.records)} terms scanned, max steps {max((r.steps for r in table.records), default=0)}"
    return _build_report(
        "steps-bound", limit, k, bad, len(table.undecided), started, notes
    )


def check_theorem1(
    limit: int = 10**6,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConjectureReport:
    """Squared digit products reach 1 within three applications."""
    report = check_steps_bound(limit, 2, 3, budget, threads=threads)
    return ConjectureReport(
        claim_id="theorem1",
        bound=report.bound,
        k=2,
        status=report.status,
        counterexamples=report.counterexamples,
        undecided_count=report.undecided_count,
        elapsed=report.elapsed,
        notes=report.notes,
    )


def _is_even_power_of_ten(v: int) -> bool:
    s = str(v)
    return (
        s[0] == "1"
        and set(s[1:]) <= {"0"}
        and len(s) % 2 == 1
        and len(s) > 1
    )


def check_lemma1(
    limit: int = 10**6,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConjectureReport:
    """The iterate feeding the final step is an even power of ten.

    One-step terms are their own penultimate iterate; for those the
    digit product is already 1, so every digit is 0 or 1.
    """
    started = time.perf_counter()
    table = enumerate_terms(limit, 2, budget, threads=threads)
    bad = []
    for record in table.records:
        if record.steps == 0:
            continue
        if record.steps == 1:
            if not set(str(record.n)) <= {"0", "1"}:
                bad.append(record.n)
        elif not _is_even_power_of_ten(record.penultimate):
            bad.append(record.n)
    notes = f"{len(table.records)} terms scanned"
    return _build_report("lemma1", limit, 2, bad, len(table.undecided), started, notes)


def _square_terms_scan(
    limit: int,
    steps: int,
    budget: IterationBudget,
) -> tuple[list[int], int]:
    found = []
    undecided = 0
    for m in range(1, math.isqrt(limit) + 1):
        n = m * m
        member, s, _ = _classify_value(n, 2, budget)
        if member is Membership.UNDECIDED:
            undecided += 1
        elif member is Membership.YES and s == steps:
            found.append(n)
    return found, undecided


def find_square_terms_with_steps(
    limit: int,
    steps: int,
    budget: IterationBudget = DEFAULT_BUDGET,
) -> list[int]:
    """Perfect squares up to limit that converge in exactly `steps`.

    Only the isqrt(limit) square roots are visited, so the limit can
    far exceed what a dense scan tolerates. Exponent fixed to 2.
    """
    return _square_terms_scan(limit, steps, budget)[0]


def check_conjecture1(
    limit: int = 10**8,
    budget: IterationBudget = DEFAULT_BUDGET,
) -> ConjectureReport:
    """No perfect square up to limit needs exactly three applications."""
    started = time.perf_counter()
    squares, undecided = _square_terms_scan(limit, 3, budget)
    notes = f"{math.isqrt(limit)} roots scanned"
    return _build_report("conjecture1", limit, 2, squares, undecided, started, notes)


_FIRST_ITERATE_SUPPORT = frozenset({0, 1, 2, 5})


def second_iterate_profile(
    limit: int = 10**6,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConjectureReport:
    """Three-step terms step first to a value with digits in {0,1,2,5}.

    The claimed profile also balances the digits 2 and 5, making the
    value's digit product an exact power of ten.
    """
    started = time.perf_counter()
    table = enumerate_terms(limit, 2, budget, threads=threads)
    bad = []
    checked = 0
    for record in table.records:
        if record.steps != 3:
            continue
        checked += 1
        first = DigitProfile.of(step(record.n, 2))
        if not (
            first.support() <= _FIRST_ITERATE_SUPPORT
            and first.count(2) == first.count(5)
        ):
            bad.append(record.n)
    notes = f"{checked} three-step terms checked"
    return _build_report(
        "profile0125", limit, 2, bad, len(table.undecided), started, notes
    )


def scan_candidate_squares(bound: int) -> list[int]:
    """Roots m up to bound whose square has a power-of-ten digit product.

    The digit product of m*m is a power of ten exactly when its digits
    stay inside {0,1,2,4,5,8} and the exponents of 2 and 5 balance:
    each 2 adds one factor of two, each 4 two, each 8 three, and each
    5 one factor of five.
    """
    found = []
    for m in range(1, bound + 1):
        profile = DigitProfile.of(m * m)
        if not profile.support() <= frozenset({0, 1, 2, 4, 5, 8}):
            continue
        twos = profile.count(2) + 2 * profile.count(4) + 3 * profile.count(8)
        if twos == profile.count(5):
            found.append(m)
    return found


def scan_smooth_squares_0125(bound: int) -> list[int]:
    """7-smooth v up to bound whose square uses only digits 0,1,2,5
    with as many twos as fives."""
    allowed = frozenset({0, 1, 2, 5})
    found = []
    for v in seven_smooth_up_to(bound):
        profile = DigitProfile.of(v * v)
        if profile.support() <= allowed and profile.count(2) == profile.count(5):
            found.append(v)
    return found


def _three_families(bound: int) -> set[int]:
    members = set()
    for base in (1, 5, 105):
        v = base
        while v <= bound:
            members.add(v)
            v *= 10
    return members


def check_smooth_families(bound: int = 10**6) -> ConjectureReport:
    """The values found by scan_smooth_squares_0125 form three families.

    Claimed families: powers of ten, 5 times powers of ten, and 105
    times powers of ten. Any value in exactly one of scan and families
    is a counterexample.
    """
    started = time.perf_counter()
    found = set(scan_smooth_squares_0125(bound))
    expected = _three_families(bound)
    mismatched = sorted(found ^ expected)
    notes = f"{len(found)} values found, {len(expected)} expected"
    return _build_report("smooth-families", bound, 2, mismatched, 0, started, notes)


def check_no_nine(
    limit: int = 10**7,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConjectureReport:
    """No term up to limit contains the digit 9."""
    started = time.perf_counter()
    table = enumerate_terms(limit, 2, budget, threads=threads)
    bad = [r.n for r in table.records if "9" in str(r.n)]
    notes = f"{len(table.records)} terms scanned"
    return _build_report("no-nine", limit, 2, bad, len(table.undecided), started, notes)


def compare_cardinalities(
    limit: int,
    k1: int,
    k2: int,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> tuple[int, int]:
    """Term counts for two exponents over the same range."""
    first, second = _cardinality_tables(limit, k1, k2, budget, threads)
    return len(first.records), len(second.records)


def _cardinality_tables(
    limit: int,
    k1: int,
    k2: int,
    budget: IterationBudget,
    threads: int,
) -> tuple[TermTable, TermTable]:
    return (
        enumerate_terms(limit, k1, budget, threads=threads),
        enumerate_terms(limit, k2, budget, threads=threads),
    )


def check_cardinality(
    limit: int = 1000,
    k1: int = 4,
    k2: int = 5,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> ConjectureReport:
    """Both exponents admit exactly the same terms up to limit."""
    started = time.perf_counter()
    first, second = _cardinality_tables(limit, k1, k2, budget, threads)
    terms1 = [r.n for r in first.records]
    terms2 = [r.n for r in second.records]
    mismatched = sorted(set(terms1) ^ set(terms2))
    undecided = len(first.undecided) + len(second.undecided)
    notes = (
        f"k={k1} has {len(terms1)} terms, k={k2} has {len(terms2)} terms"
    )
    return _build_report(
        "cardinality", limit, k1, mismatched, undecided, started, notes
    )
