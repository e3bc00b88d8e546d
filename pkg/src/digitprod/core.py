"""Exact arithmetic for the iterated nonzero-digit-product map.

The map under study sends a positive integer n to P(n)**k, where P(n) is
the product of the nonzero decimal digits of n and k >= 2 is a fixed
exponent. Iterating the map from n either reaches the fixed point 1,
enters a cycle, or grows past any budget we are willing to spend. This
module provides the digit primitives, a single application of the map,
and full trajectory computation with exact cycle detection.

Iterates under k >= 3 routinely exceed a million digits before a budget
trips, so the digit primitives avoid CPython's quadratic int-to-decimal
conversion. ``decimal_string`` converts through the C decimal module
with a divide-and-conquer split, which keeps even million-digit values
in fraction-of-a-second territory.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

# Product of the nonzero digits of every 3-digit block value. Blocks with
# value < 100 behave as if left-padded with zeros, which multiply as 1,
# so the table doubles as P(n) for all n < 1000.
_BLOCK_PRODUCT = tuple(
    (1 if r // 100 == 0 else r // 100)
    * (1 if r // 10 % 10 == 0 else r // 10 % 10)
    * (1 if r % 10 == 0 else r % 10)
    for r in range(1000)
)

_LOG10_2 = math.log10(2)

# Above this bit length, str() and Decimal() casts on CPython 3.10 go
# quadratic; route through the divide-and-conquer conversion instead.
_STR_FAST_BITS = 8192

_EXACT_DECIMAL_CTX = decimal.Context(
    prec=decimal.MAX_PREC,
    Emax=decimal.MAX_EMAX,
    Emin=decimal.MIN_EMIN,
)
_EXACT_DECIMAL_CTX.traps[decimal.Inexact] = True


def _powers_for_split(w: int, base: decimal.Decimal, limit: int) -> dict[int, decimal.Decimal]:
    """Exactly the base powers a half-splitting recursion on width w needs.

    Each needed exponent is derived from a smaller one by squaring or a
    single extra multiply, so no power is computed more than once.
    """
    seen = set()
    need = set()
    widths = {w}
    while widths:
        cur = widths.pop()
        if cur in seen or cur <= limit:
            continue
        seen.add(cur)
        lo = cur >> 1
        need.add(lo)
        widths.add(lo)
        widths.add(cur - lo)
    powers: dict[int, decimal.Decimal] = {}
    for n in sorted(need):
        lo = n >> 1
        if n - 1 in powers:
            powers[n] = powers[n - 1] * base
        elif lo in powers:
            sq = powers[lo] * powers[lo]
            powers[n] = sq if n == 2 * lo else sq * base
        else:
            powers[n] = base ** n
    return powers


def decimal_string(n: int) -> str:
    """Decimal representation of a nonnegative int, fast at any size.

    Small values go through str(). Large values are split in half by bit
    width and recombined as exact Decimals, whose multiplication is
    asymptotically fast, then rendered. This sidesteps both the 3.10
    quadratic conversion and the interpreter's int-to-str digit limit.
    """
    if n < 0:
        raise ValueError("decimal_string expects a nonnegative integer")
    if n.bit_length() <= _STR_FAST_BITS:
        return str(n)

    D = decimal.Decimal
    with decimal.localcontext(_EXACT_DECIMAL_CTX):
        powers = _powers_for_split(n.bit_length(), D(2), _STR_FAST_BITS)

        def build(x: int, w: int) -> decimal.Decimal:
            if w <= _STR_FAST_BITS:
                return D(x)
            w2 = w >> 1
            return build(x & ((1 << w2) - 1), w2) + build(x >> w2, w - w2) * powers[w2]

        return str(build(n, n.bit_length()))


def decimal_digit_count(n: int) -> int:
    """Exact count of decimal digits of a nonnegative int.

    Uses the bit length and a float log estimate; only when the estimate
    lands within 1e-9 of an integer boundary does it fall back to an
    exact power-of-ten comparison.
    """
    if n < 0:
        raise ValueError("decimal_digit_count expects a nonnegative integer")
    bits = n.bit_length()
    if bits <= _STR_FAST_BITS:
        return len(str(n))
    top = n >> (bits - 53)
    log10n = math.log10(top) + (bits - 53) * _LOG10_2
    frac = log10n - math.floor(log10n)
    if frac < 1e-9 or frac > 1 - 1e-9:
        d = round(log10n)
        return d + 1 if n >= 10 ** d else d
    return math.floor(log10n) + 1


def digits_of(n: int) -> list[int]:
    """Base-10 digits of n, most significant first; digits_of(0) is [0]."""
    if n < 0:
        raise ValueError("digits_of expects a nonnegative integer")
    return [int(c) for c in decimal_string(n)]


def product_nonzero_digits(n: int) -> int:
    """P(n): the product of the nonzero decimal digits of n.

    The empty product convention gives P(0) = 1. The result is always
    7-smooth since every digit factors over {2, 3, 5, 7}.
    """
    if n < 0:
        raise ValueError("product_nonzero_digits expects a nonnegative integer")
    if n.bit_length() <= 64:
        p = _BLOCK_PRODUCT[n % 1000]
        n //= 1000
        while n:
            p *= _BLOCK_PRODUCT[n % 1000]
            n //= 1000
        return p
    s = decimal_string(n)
    c2, c3, c4, c5 = s.count("2"), s.count("3"), s.count("4"), s.count("5")
    c6, c7, c8, c9 = s.count("6"), s.count("7"), s.count("8"), s.count("9")
    return 2 ** (c2 + 2 * c4 + c6 + 3 * c8) * 3 ** (c3 + c6 + 2 * c9) * 5 ** c5 * 7 ** c7


def _check_exponent(k: int) -> None:
    if k < 2:
        raise ValueError(f"exponent k must be >= 2, got {k}")


def step(n: int, k: int) -> int:
    """One application of the map: P(n) raised to the k-th power."""
    _check_exponent(k)
    return product_nonzero_digits(n) ** k


@dataclass(frozen=True)
class IterationBudget:
    """Caps on trajectory work: map applications and digits per iterate."""

    max_steps: int = 64
    max_digits: int = 10 ** 6

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.max_digits < 1:
            raise ValueError("max_digits must be >= 1")


DEFAULT_BUDGET = IterationBudget()

STEPS_EXHAUSTED = "steps-exhausted"
SIZE_EXCEEDED = "size-exceeded"


@dataclass(frozen=True)
class ReachesOne:
    steps: int


@dataclass(frozen=True)
class EntersCycle:
    entry_index: int
    entry_value: int
    length: int


@dataclass(frozen=True)
class Undecided:
    reason: str


Outcome = Union[ReachesOne, EntersCycle, Undecided]


class Membership(Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Trajectory:
    """An orbit prefix: start, exponent, the iterates seen, and the verdict.

    iterates[0] is the start value and iterates[i+1] = step(iterates[i], k)
    for every consecutive pair. When a cycle is detected the first repeated
    value is appended once, so the repetition is visible in the chain.
    """

    start: int
    k: int
    iterates: tuple[int, ...]
    outcome: Outcome


def iterate_trajectory(n: int, k: int, budget: IterationBudget = DEFAULT_BUDGET) -> Trajectory:
    """Iterate the map from n until 1, a repeat, or a budget trip.

    Cycle detection keeps a value-to-index map over exact iterates, so the
    reported entry index and minimal length are exact. An iterate larger
    than the digit cap is still appended, but never expanded; the outcome
    is then Undecided with reason "size-exceeded".
    """
    if n < 1:
        raise ValueError("trajectory start must be a positive integer")
    _check_exponent(k)
    iterates = [n]
    seen = {n: 0}
    applied = 0
    while True:
        current = iterates[-1]
        if current == 1:
            outcome: Outcome = ReachesOne(steps=len(iterates) - 1)
            break
        if applied >= budget.max_steps:
            outcome = Undecided(reason=STEPS_EXHAUSTED)
            break
        if decimal_digit_count(current) > budget.max_digits:
            outcome = Undecided(reason=SIZE_EXCEEDED)
            break
        nxt = step(current, k)
        applied += 1
        if nxt in seen:
            outcome = EntersCycle(
                entry_index=seen[nxt],
                entry_value=nxt,
                length=len(iterates) - seen[nxt],
            )
            iterates.append(nxt)
            break
        seen[nxt] = len(iterates)
        iterates.append(nxt)
    return Trajectory(start=n, k=k, iterates=tuple(iterates), outcome=outcome)


def steps_to_one(n: int, k: int, budget: IterationBudget = DEFAULT_BUDGET) -> Optional[int]:
    """Number of applications needed to first reach 1, or None."""
    outcome = iterate_trajectory(n, k, budget).outcome
    return outcome.steps if isinstance(outcome, ReachesOne) else None


def is_term(n: int, k: int, budget: IterationBudget = DEFAULT_BUDGET) -> Membership:
    """Whether the orbit of n reaches 1. Budget trips stay UNDECIDED."""
    outcome = iterate_trajectory(n, k, budget).outcome
    if isinstance(outcome, ReachesOne):
        return Membership.YES
    if isinstance(outcome, EntersCycle):
        return Membership.NO
    return Membership.UNDECIDED
