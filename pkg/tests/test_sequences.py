import json

from hypothesis import given, strategies as st
import pytest

import oracle_naive as oracle
from fixtures import S2_TERMS_TO_1000, S4_TERMS_TO_1000
from digitprod import (
    IterationBudget,
    ScanPartition,
    TermRecord,
    TermTable,
    closure_insert,
    digit_permutations,
    enumerate_terms,
    export_bfile,
    export_json,
    export_trajectory_csv,
    export_trajectory_json,
    is_term,
    iterate_trajectory,
    parallel_scan,
    step,
    steps_to_one,
    Membership,
)


def test_enumerate_matches_naive_k2():
    table = enumerate_terms(300, 2)
    rows = [(r.n, r.steps, r.penultimate) for r in table.records]
    assert rows == oracle.terms_up_to(300, 2)
    assert table.undecided == ()


def test_enumerate_matches_naive_k3_small_budget():
    budget = IterationBudget(max_steps=64, max_digits=300)
    table = enumerate_terms(300, 3, budget)
    rows = [(r.n, r.steps, r.penultimate) for r in table.records]
    assert rows == oracle.terms_up_to(300, 3, max_steps=64, max_digits=300)
    assert list(table.undecided) == sorted(table.undecided)


def test_enumerate_k2_has_no_undecided_at_scale():
    table = enumerate_terms(20000, 2)
    assert table.undecided == ()
    assert [r.n for r in table.records] == sorted(r.n for r in table.records)


def test_records_satisfy_step_contract():
    table = enumerate_terms(2000, 2)
    for r in table.records:
        if r.steps == 0:
            assert r.n == 1
            assert r.penultimate is None
        else:
            assert step(r.penultimate, 2) == 1
            assert steps_to_one(r.n, 2) == r.steps


def test_budget_recorded_on_table():
    budget = IterationBudget(max_steps=8, max_digits=50)
    table = enumerate_terms(50, 2, budget)
    assert table.budget == budget
    assert table.k == 2
    assert table.limit == 50


def test_enumerate_rejects_bad_limit():
    with pytest.raises(ValueError):
        enumerate_terms(0, 2)


@pytest.mark.parametrize(
    "n,digit,position,expected",
    (
        (375, 0, 1, 3075),
        (375, 1, 3, 3751),
        (1, 0, 1, 10),
        (1, 1, 0, 11),
        (52, 0, 2, 520),
    ),
)
def test_closure_insert(n, digit, position, expected):
    assert closure_insert(n, digit, position) == expected


@pytest.mark.parametrize(
    "n,digit,position",
    (
        (375, 2, 1),
        (375, 0, 0),
        (375, 0, 4),
        (375, 1, -1),
        (0, 1, 0),
    ),
)
def test_closure_insert_rejects(n, digit, position):
    with pytest.raises(ValueError):
        closure_insert(n, digit, position)


def test_digit_permutations():
    assert digit_permutations(375) == {357, 375, 537, 573, 735, 753}
    assert digit_permutations(105) == {105, 150, 501, 510}
    assert digit_permutations(7) == {7}
    assert digit_permutations(100) == {100}


@given(st.integers(min_value=1, max_value=99999))
def test_digit_permutations_preserve_length_and_product(n):
    from digitprod import product_nonzero_digits

    for p in digit_permutations(n):
        assert len(str(p)) == len(str(n))
        assert sorted(str(p)) == sorted(str(n))
        assert product_nonzero_digits(p) == product_nonzero_digits(n)


def test_terms_closed_under_insertion_and_permutation():
    table = enumerate_terms(10**4, 2)
    for r in table.records:
        digits = len(str(r.n))
        variants = set()
        for position in range(digits + 1):
            for digit in (0, 1):
                if position == 0 and digit == 0:
                    continue
                variants.add(closure_insert(r.n, digit, position))
        variants |= digit_permutations(r.n)
        for v in variants:
            assert is_term(v, 2) is Membership.YES
            if r.steps >= 1 and sorted(str(v)) == sorted(str(r.n)):
                assert steps_to_one(v, 2) == r.steps


def test_export_bfile_s2_lines():
    table = enumerate_terms(1000, 2)
    lines = export_bfile(table).splitlines()
    assert lines[:3] == ["1 1", "2 5", "3 10"]
    assert lines[-1] == f"{len(S2_TERMS_TO_1000)} 1000"
    assert len(lines) == len(S2_TERMS_TO_1000)


def test_export_bfile_s4_last_line():
    # formatter contract on a certified table; scan verdicts are separate
    records = tuple(
        TermRecord(n=n, steps=1, penultimate=n) for n in S4_TERMS_TO_1000
    )
    table = TermTable(
        k=4, limit=1000, records=records, undecided=(), budget=IterationBudget()
    )
    lines = export_bfile(table).splitlines()
    assert lines[-1] == "23 1000"


def test_export_bfile_custom_offset():
    table = enumerate_terms(10, 2)
    assert export_bfile(table, offset=5).splitlines()[0] == "5 1"


def test_export_bfile_blocks_undecided():
    table = enumerate_terms(50, 3, IterationBudget(max_steps=64, max_digits=40))
    assert table.undecided
    with pytest.raises(ValueError):
        export_bfile(table)


def test_export_bfile_blocks_empty():
    empty = TermTable(
        k=2, limit=0, records=(), undecided=(), budget=IterationBudget()
    )
    with pytest.raises(ValueError):
        export_bfile(empty)


def test_export_json_schema():
    budget = IterationBudget(max_steps=16, max_digits=100)
    table = enumerate_terms(30, 2, budget)
    payload = json.loads(export_json(table))
    assert payload["k"] == 2
    assert payload["limit"] == 30
    assert payload["budget"] == {"max_steps": 16, "max_digits": 100}
    assert payload["undecided"] == []
    assert payload["terms"][0] == {"n": 1, "steps": 0, "penultimate": None}
    assert {t["n"] for t in payload["terms"]} == {
        r.n for r in table.records
    }


def test_export_trajectory_csv():
    traj = iterate_trajectory(375, 2)
    assert export_trajectory_csv(traj) == (
        "n,step_index,value\n"
        "375,0,375\n"
        "375,1,11025\n"
        "375,2,100\n"
        "375,3,1\n"
    )


def test_export_trajectory_json_outcomes():
    reached = json.loads(export_trajectory_json(iterate_trajectory(375, 2)))
    assert reached["iterates"] == [375, 11025, 100, 1]
    assert reached["outcome"] == {"kind": "reaches-one", "steps": 3}

    cycling = json.loads(export_trajectory_json(iterate_trajectory(4, 2)))
    assert cycling["outcome"] == {
        "kind": "enters-cycle",
        "entry_index": 3,
        "entry_value": 324,
        "length": 5,
    }

    budget = IterationBudget(max_steps=64, max_digits=100)
    undecided = json.loads(export_trajectory_json(iterate_trajectory(4, 3, budget)))
    assert undecided["outcome"] == {"kind": "undecided", "reason": "size-exceeded"}


def test_scan_partition_validation():
    with pytest.raises(ValueError):
        ScanPartition(lo=0, hi=10, chunk=5)
    with pytest.raises(ValueError):
        ScanPartition(lo=10, hi=5, chunk=5)
    with pytest.raises(ValueError):
        ScanPartition(lo=1, hi=10, chunk=0)


@given(
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=0, max_value=500),
    st.integers(min_value=1, max_value=600),
)
def test_scan_partition_covers_range(lo, span, chunk):
    part = ScanPartition(lo=lo, hi=lo + span, chunk=chunk)
    seen = []
    for a, b in part.ranges():
        assert b - a + 1 <= chunk
        seen.extend(range(a, b + 1))
    assert seen == list(range(lo, lo + span + 1))


def test_parallel_scan_single_value():
    table = parallel_scan(ScanPartition(lo=1, hi=1, chunk=1), 2, IterationBudget())
    assert table.records == (TermRecord(n=1, steps=0, penultimate=None),)
    assert table.undecided == ()


@pytest.mark.parametrize("chunk", (1, 7, 100, 4096))
def test_partition_independence(chunk):
    budget = IterationBudget(max_steps=64, max_digits=200)
    table = parallel_scan(ScanPartition(lo=1, hi=1500, chunk=chunk), 3, budget)
    baseline = parallel_scan(ScanPartition(lo=1, hi=1500, chunk=1500), 3, budget)
    assert export_json(table) == export_json(baseline)


def test_thread_count_does_not_change_output():
    budget = IterationBudget(max_steps=64, max_digits=200)
    part = ScanPartition(lo=1, hi=3000, chunk=256)
    one = parallel_scan(part, 2, budget, threads=1)
    two = parallel_scan(part, 2, budget, threads=2)
    assert export_json(one) == export_json(two)


def test_parallel_scan_partial_range():
    table = parallel_scan(ScanPartition(lo=100, hi=200, chunk=17), 2, IterationBudget())
    expected = [row for row in oracle.terms_up_to(200, 2) if row[0] >= 100]
    assert [(r.n, r.steps, r.penultimate) for r in table.records] == expected
