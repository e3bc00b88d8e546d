"""Term enumeration, closure transforms, and sequence exports.

A term is a positive integer whose orbit under the map reaches 1. This
module scans ranges for terms, records step counts and penultimate
iterates, and exports the results as OEIS-style b-files, JSON reports,
or trajectory CSVs.

Range scans classify each n through the value P(n)**k it steps to.
Distinct n share few distinct images, so a per-process memo over those
images turns a scan of a million integers into a few thousand trajectory
computations plus table lookups.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    DEFAULT_BUDGET,
    EntersCycle,
    IterationBudget,
    Membership,
    ReachesOne,
    Trajectory,
    Undecided,
    _BLOCK_PRODUCT,
    decimal_string,
    iterate_trajectory,
)


@dataclass(frozen=True)
class TermRecord:
    """A term with its convergence data.

    penultimate is the iterate immediately before 1, absent for the
    fixed point itself (steps = 0).
    """

    n: int
    steps: int
    penultimate: Optional[int]


@dataclass(frozen=True)
class TermTable:
    """Scan result: terms ascending, plus values the budget left open."""

    k: int
    limit: int
    records: tuple[TermRecord, ...]
    undecided: tuple[int, ...]
    budget: IterationBudget


@dataclass(frozen=True)
class ScanPartition:
    """A closed range [lo, hi] tiled by chunks of the given width."""

    lo: int
    hi: int
    chunk: int

    def __post_init__(self) -> None:
        if self.lo < 1:
            raise ValueError("partition lo must be >= 1")
        if self.lo > self.hi:
            raise ValueError("partition requires lo <= hi")
        if self.chunk < 1:
            raise ValueError("chunk width must be >= 1")

    def ranges(self) -> Iterator[tuple[int, int]]:
        a = self.lo
        while a <= self.hi:
            yield a, min(a + self.chunk - 1, self.hi)
            a += self.chunk


def _classify_value(v: int, k: int, budget: IterationBudget) -> tuple[Membership, Optional[int], Optional[int]]:
    """(membership, steps, penultimate) for the orbit starting at v."""
    traj = iterate_trajectory(v, k, budget)
    outcome = traj.outcome
    if isinstance(outcome, ReachesOne):
        s = outcome.steps
        return (Membership.YES, s, traj.iterates[s - 1] if s >= 1 else None)
    if isinstance(outcome, EntersCycle):
        return (Membership.NO, None, None)
    return (Membership.UNDECIDED, None, None)


def _scan_chunk(
    lo: int,
    hi: int,
    k: int,
    budget: IterationBudget,
    memo: dict,
) -> tuple[list[tuple[int, int, Optional[int]]], list[int]]:
    """Classify [lo, hi]; returns (term rows, undecided values).

    Every n >= 2 is classified through v = P(n)**k with one application
    already spent, so the memo runs under a budget of max_steps - 1.
    Membership, step count, and penultimate iterate all lift exactly:
    the orbit of n is n followed by the orbit of v.
    """
    records: list[tuple[int, int, Optional[int]]] = []
    undecided: list[int] = []
    if budget.max_steps == 1:
        for n in range(lo, hi + 1):
            member = _classify_value(n, k, budget)[0]
            if member is Membership.YES:
                records.append((n, 0, None) if n == 1 else (n, 1, n))
            elif member is Membership.UNDECIDED:
                undecided.append(n)
        return records, undecided

    inner = IterationBudget(budget.max_steps - 1, budget.max_digits)
    size_cap = 10 ** budget.max_digits if budget.max_digits < 19 else None
    blocks = _BLOCK_PRODUCT
    get = memo.get
    for n in range(lo, hi + 1):
        if n == 1:
            records.append((1, 0, None))
            continue
        if size_cap is not None and n >= size_cap:
            undecided.append(n)
            continue
        p = blocks[n % 1000]
        m = n // 1000
        while m:
            p *= blocks[m % 1000]
            m //= 1000
        v = p * p if k == 2 else p ** k
        hit = get(v)
        if hit is None:
            hit = memo[v] = _classify_value(v, k, inner)
        member, s, pen = hit
        if member is Membership.YES:
            records.append((n, s + 1, n if s == 0 else pen))
        elif member is Membership.UNDECIDED:
            undecided.append(n)
    return records, undecided


_WORKER_K: int = 2
_WORKER_BUDGET: IterationBudget = DEFAULT_BUDGET
_WORKER_MEMO: dict = {}


def _init_worker(k: int, budget: IterationBudget) -> None:
    global _WORKER_K, _WORKER_BUDGET, _WORKER_MEMO
    _WORKER_K = k
    _WORKER_BUDGET = budget
    _WORKER_MEMO = {}


def _scan_chunk_worker(bounds: tuple[int, int]) -> tuple[list, list]:
    lo, hi = bounds
    return _scan_chunk(lo, hi, _WORKER_K, _WORKER_BUDGET, _WORKER_MEMO)


def _assemble_table(
    k: int,
    limit: int,
    budget: IterationBudget,
    chunk_results: list[tuple[list, list]],
) -> TermTable:
    records = []
    undecided = []
    for recs, undec in chunk_results:
        records.extend(recs)
        undecided.extend(undec)
    return TermTable(
        k=k,
        limit=limit,
        records=tuple(TermRecord(n, s, pen) for n, s, pen in records),
        undecided=tuple(undecided),
        budget=budget,
    )


def parallel_scan(
    partition: ScanPartition,
    k: int,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> TermTable:
    """Scan a partitioned range for terms, optionally across processes.

    Chunks tile the range in ascending order and results merge in that
    same order, so the output is identical for every chunk width and
    thread count.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    chunks = list(partition.ranges())
    if threads == 1 or len(chunks) == 1:
        memo: dict = {}
        results = [_scan_chunk(lo, hi, k, budget, memo) for lo, hi in chunks]
    else:
        with multiprocessing.Pool(
            processes=threads, initializer=_init_worker, initargs=(k, budget)
        ) as pool:
            results = pool.map(_scan_chunk_worker, chunks)
    return _assemble_table(k, partition.hi, budget, results)


def enumerate_terms(
    limit: int,
    k: int,
    budget: IterationBudget = DEFAULT_BUDGET,
    threads: int = 1,
) -> TermTable:
    """All terms n <= limit with step counts and penultimate iterates."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    partition = ScanPartition(lo=1, hi=limit, chunk=min(limit, 65536))
    return parallel_scan(partition, k, budget, threads=threads)


def closure_insert(n: int, digit: int, position: int) -> int:
    """Splice a 0 or 1 digit into n at the given position.

    Position counts from the most significant end; 0 prefixes and the
    digit count suffixes. Prefixing a zero would change the digit count
    on re-reading, so it is rejected.
    """
    if digit not in (0, 1):
        raise ValueError("only digits 0 and 1 preserve the digit product")
    if n < 1:
        raise ValueError("closure_insert expects a positive integer")
    s = str(n)
    if not 0 <= position <= len(s):
        raise ValueError(f"position {position} outside [0, {len(s)}]")
    if position == 0 and digit == 0:
        raise ValueError("inserting a leading zero is not allowed")
    return int(s[:position] + str(digit) + s[position:])


def digit_permutations(n: int) -> set[int]:
    """Distinct integers from permuting the digits of n.

    Arrangements with a leading zero collapse to shorter integers and
    are excluded; the transform preserves the digit count.
    """
    if n < 1:
        raise ValueError("digit_permutations expects a positive integer")
    s = str(n)
    return {
        int("".join(perm))
        for perm in set(itertools.permutations(s))
        if perm[0] != "0"
    }


def export_bfile(table: TermTable, offset: int = 1) -> str:
    """OEIS b-file text: one "index value" line per term, no header.

    Export certifies the scan, so any undecided value blocks it.
    """
    if not table.records:
        raise ValueError("refusing to export an empty table")
    if table.undecided:
        raise ValueError(
            f"{len(table.undecided)} undecided values block b-file export"
        )
    return "".join(
        f"{offset + i} {record.n}\n" for i, record in enumerate(table.records)
    )


def export_json(table: TermTable) -> str:
    """JSON report with stable key order, undecided values included."""
    report = {
        "k": table.k,
        "limit": table.limit,
        "terms": [
            {"n": r.n, "steps": r.steps, "penultimate": r.penultimate}
            for r in table.records
        ],
        "undecided": list(table.undecided),
        "budget": {
            "max_steps": table.budget.max_steps,
            "max_digits": table.budget.max_digits,
        },
    }
    return json.dumps(report, indent=2) + "\n"


def export_trajectory_csv(traj: Trajectory) -> str:
    """CSV rows (n, step_index, value), one per iterate."""
    lines = ["n,step_index,value\n"]
    start = decimal_string(traj.start)
    for i, value in enumerate(traj.iterates):
        lines.append(f"{start},{i},{decimal_string(value)}\n")
    return "".join(lines)


def export_trajectory_json(traj: Trajectory) -> str:
    """JSON for one trajectory; values rendered without size limits."""
    outcome = traj.outcome
    if isinstance(outcome, ReachesOne):
        outcome_json = f'{{"kind": "reaches-one", "steps": {outcome.steps}}}'
    elif isinstance(outcome, EntersCycle):
        outcome_json = (
            '{"kind": "enters-cycle", '
            f'"entry_index": {outcome.entry_index}, '
            f'"entry_value": {decimal_string(outcome.entry_value)}, '
            f'"length": {outcome.length}}}'
        )
    else:
        assert isinstance(outcome, Undecided)
        outcome_json = f'{{"kind": "undecided", "reason": {json.dumps(outcome.reason)}}}'
    values = ", ".join(decimal_string(v) for v in traj.iterates)
    return (
        "{\n"
        f'  "start": {traj.start},\n'
        f'  "k": {traj.k},\n'
        f'  "iterates": [{values}],\n'
        f'  "outcome": {outcome_json}\n'
        "}\n"
    )
