from hypothesis import given, settings, strategies as st
import pytest

import oracle_naive as oracle
from digitprod import (
    DEFAULT_BUDGET,
    SIZE_EXCEEDED,
    STEPS_EXHAUSTED,
    EntersCycle,
    IterationBudget,
    Membership,
    ReachesOne,
    Undecided,
    decimal_digit_count,
    decimal_string,
    digits_of,
    is_term,
    iterate_trajectory,
    product_nonzero_digits,
    step,
    steps_to_one,
)


@pytest.mark.parametrize(
    "n,expected",
    (
        (0, "0"),
        (1, "1"),
        (10, "10"),
        (10**18, "1" + "0" * 18),
        (123456789012345678901234567890, "123456789012345678901234567890"),
    ),
)
def test_decimal_string_small(n, expected):
    assert decimal_string(n) == expected


def test_decimal_string_rejects_negative():
    with pytest.raises(ValueError):
        decimal_string(-345)


@given(st.integers(min_value=0, max_value=10**40))
def test_decimal_string_matches_str(n):
    assert decimal_string(n) == str(n)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2000, max_value=12000), st.integers(min_value=2, max_value=9))
def test_decimal_string_big_matches_str(digits, lead):
    # spans both sides of the 8192-bit fast path
    n = lead * 10**digits + 12345
    assert decimal_string(n) == str(n)


@given(st.integers(min_value=1, max_value=10**30))
def test_decimal_digit_count(n):
    assert decimal_digit_count(n) == len(str(n))


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=2400, max_value=9000))
def test_decimal_digit_count_near_power_of_ten(digits):
    assert decimal_digit_count(10**digits) == digits + 1
    assert decimal_digit_count(10**digits - 1) == digits
    assert decimal_digit_count(10**digits + 1) == digits + 1


def test_digits_of():
    assert digits_of(375) == [3, 7, 5]
    assert digits_of(0) == [0]
    assert digits_of(1002) == [1, 0, 0, 2]


@pytest.mark.parametrize(
    "n,expected",
    (
        (0, 1),
        (1, 1),
        (10, 1),
        (375, 105),
        (455, 100),
        (51151104, 100),
        (11239424, 1728),
    ),
)
def test_product_nonzero_digits(n, expected):
    assert product_nonzero_digits(n) == expected


@given(st.integers(min_value=0, max_value=10**18))
def test_product_matches_naive(n):
    assert product_nonzero_digits(n) == oracle.digit_product(n)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=500, max_value=3000), st.integers(min_value=0, max_value=2**64))
def test_product_matches_naive_big(digits, salt):
    n = (salt << digits) + 10**digits + salt
    assert product_nonzero_digits(n) == oracle.digit_product(n)


@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=2, max_value=6))
def test_step_matches_naive(n, k):
    assert step(n, k) == oracle.apply_map(n, k)


def test_step_rejects_bad_exponent():
    with pytest.raises(ValueError):
        step(10, 1)
    with pytest.raises(ValueError):
        step(10, 0)


def test_budget_validation():
    with pytest.raises(ValueError):
        IterationBudget(max_steps=0)
    with pytest.raises(ValueError):
        IterationBudget(max_digits=0)
    assert DEFAULT_BUDGET.max_steps == 64


def test_trajectory_4_squared_enters_cycle():
    traj = iterate_trajectory(4, 2)
    assert traj.iterates == (4, 16, 36, 324, 576, 44100, 256, 3600, 324)
    assert traj.outcome == EntersCycle(entry_index=3, entry_value=324, length=5)


def test_trajectory_375_squared_reaches_one():
    traj = iterate_trajectory(375, 2)
    assert traj.iterates == (375, 11025, 100, 1)
    assert traj.outcome == ReachesOne(steps=3)


def test_trajectory_217_cubed_reaches_one():
    traj = iterate_trajectory(217, 3)
    assert traj.iterates == (
        217,
        2744,
        11239424,
        5159780352,
        54010152000000000,
        8000000,
        512,
        1000,
        1,
    )
    assert traj.outcome == ReachesOne(steps=8)


def test_trajectory_start_validation():
    with pytest.raises(ValueError):
        iterate_trajectory(0, 2)
    with pytest.raises(ValueError):
        iterate_trajectory(-5, 2)


def test_trajectory_steps_exhausted():
    traj = iterate_trajectory(4, 2, IterationBudget(max_steps=2))
    assert traj.outcome == Undecided(reason=STEPS_EXHAUSTED)
    assert traj.iterates == (4, 16, 36)


def test_trajectory_size_exceeded_appends_oversized():
    traj = iterate_trajectory(4, 3, IterationBudget(max_steps=64, max_digits=100))
    assert traj.outcome == Undecided(reason=SIZE_EXCEEDED)
    assert decimal_digit_count(traj.iterates[-1]) > 100
    for value in traj.iterates[:-1]:
        assert decimal_digit_count(value) <= 100


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=2, max_value=4))
@settings(max_examples=150, deadline=None)
def test_trajectory_matches_naive_orbit(n, k):
    budget = IterationBudget(max_steps=40, max_digits=200)
    traj = iterate_trajectory(n, k, budget)
    verdict, values = oracle.orbit(n, k, max_steps=40, max_digits=200)
    assert list(traj.iterates) == values
    if verdict[0] == "one":
        assert traj.outcome == ReachesOne(steps=verdict[1])
    elif verdict[0] == "cycle":
        assert traj.outcome == EntersCycle(
            entry_index=verdict[1], entry_value=values[-1], length=verdict[2]
        )
    else:
        assert isinstance(traj.outcome, Undecided)


@given(st.integers(min_value=1, max_value=2000))
def test_trajectory_chain_consistency(n):
    traj = iterate_trajectory(n, 2)
    for a, b in zip(traj.iterates, traj.iterates[1:]):
        assert step(a, 2) == b


@pytest.mark.parametrize(
    "n,k,expected",
    ((1, 2, 0), (5, 2, 3), (455, 2, 2), (357, 2, 3), (255, 2, 3), (217, 3, 8)),
)
def test_steps_to_one(n, k, expected):
    assert steps_to_one(n, k) == expected


def test_steps_to_one_none_for_cycle():
    assert steps_to_one(4, 2) is None


@pytest.mark.parametrize("j", range(0, 19))
@pytest.mark.parametrize("k", (2, 3, 4, 5))
def test_powers_of_ten_are_terms(j, k):
    n = 10**j
    assert is_term(n, k) is Membership.YES
    assert steps_to_one(n, k) == (0 if n == 1 else 1)


def test_is_term_verdicts():
    assert is_term(5, 2) is Membership.YES
    assert is_term(4, 2) is Membership.NO
    assert is_term(4, 3, IterationBudget(max_steps=64, max_digits=50)) is Membership.UNDECIDED
