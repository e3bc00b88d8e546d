"""Modular sieve over values of the form 9**a * 49**b.

Squares of 7-smooth odd numbers coprime to 5 are exactly the values
9**a * 49**b, and candidates for binary-digit squares must match such
a value modulo 10**r. Both 9 and 49 have known multiplicative orders
mod 10**r, so the pairs (a, b) live on a finite torus. This module
sieves that torus against residues whose digits are all 0 or 1,
reporting the survivors exactly even when they are far too numerous
to list.

The key structural facts, recomputed rather than assumed: the subgroup
generated by 9 has index at most 2 in the group generated by 9 and 49,
so solving 9**a * 49**b == x needs one discrete log in the cyclic
group generated by 9 per choice of b mod beta, where beta is the least
positive j with 49**j in that subgroup. Solution sets are cosets of
the kernel of (a, b) -> 9**a * 49**b, a cyclic group of order
ord(49) / beta.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from typing import Optional

from .conjectures import ConjectureReport, _build_report
from .core import decimal_digit_count


@dataclass(frozen=True)
class ResidueClass:
    """Pairs (a, b) with 9**a * 49**b == residue (mod modulus).

    Membership means a == a_offset (mod a_period) and b == b_offset
    (mod b_period), with every member pair yielding the residue. Since
    a and b vary independently within the class, the periods are
    forced to be multiples of the orders of 9 and 49, so a faithful
    class pins down one pair on the torus.
    """

    a_offset: int
    a_period: int
    b_offset: int
    b_period: int
    modulus: int
    residue: int


@dataclass(frozen=True)
class SieveReport:
    """Sieve outcome for one modulus 10**r.

    surviving_count and eliminated_count are always exact. complete
    tells whether `surviving` lists every class or one witness per
    achievable residue; the full list is materialized only when it
    fits the requested cap.
    """

    r: int
    a_order: int
    b_order: int
    surviving: tuple[ResidueClass, ...]
    surviving_count: int
    eliminated_count: int
    complete: bool


def squares_mod(m: int) -> set[int]:
    """All quadratic residues modulo m, by direct enumeration, O(m)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return {(x * x) % m for x in range(m)}


def _is_square_mod_2pow(t: int, e: int) -> bool:
    t %= 1 << e
    if t == 0:
        return True
    v = (t & -t).bit_length() - 1
    if v % 2:
        return False
    u = t >> v
    rem = e - v
    if rem == 1:
        return True
    if rem == 2:
        return u % 4 == 1
    return u % 8 == 1


def _is_square_mod_5pow(t: int, e: int) -> bool:
    t %= 5**e
    if t == 0:
        return True
    v = 0
    while t % 5 == 0:
        t //= 5
        v += 1
    if v % 2:
        return False
    return t % 5 in (1, 4)


def exclude_suffix(suffix: str) -> bool:
    """True when no perfect square ends with the given 0/1 digits.

    Short suffixes are settled by enumerating squares; longer ones
    split the modulus 10**L into its 2-power and 5-power parts, where
    squareness of the unit part reduces to a residue test.
    """
    if not suffix or set(suffix) - {"0", "1"}:
        raise ValueError("suffix must be a nonempty string of 0s and 1s")
    length = len(suffix)
    t = int(suffix)
    if length <= 4:
        return t not in _cached_squares_mod(10**length)
    return not (_is_square_mod_2pow(t, length) and _is_square_mod_5pow(t, length))


@lru_cache(maxsize=None)
def _cached_squares_mod(m: int) -> frozenset[int]:
    return frozenset(squares_mod(m))


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_order(base: int, modulus: int) -> int:
    """Least e >= 1 with base**e == 1 (mod modulus).

    Computes Euler phi from the factored modulus, then strips each
    prime of phi while the power still fixes 1. Feasible whenever
    trial division reaches the square roots of modulus and phi.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(base, modulus) != 1:
        raise ValueError("base must be coprime to the modulus")
    phi = 1
    for p, e in _factorize(modulus).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for q in _factorize(phi):
        while order % q == 0 and pow(base, order // q, modulus) == 1:
            order //= q
    return order


def _bsgs_table(base: int, order: int, modulus: int) -> tuple[int, dict[int, int]]:
    m = math.isqrt(order) + 1
    table: dict[int, int] = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * base % modulus
    return m, table


def _bsgs_dlog(
    base: int,
    target: int,
    order: int,
    modulus: int,
    table: Optional[tuple[int, dict[int, int]]] = None,
) -> Optional[int]:
    """e in [0, order) with base**e == target (mod modulus), if any."""
    if table is None:
        table = _bsgs_table(base, order, modulus)
    m, baby = table
    giant = pow(base, -m, modulus)
    gamma = target % modulus
    for i in range(m + 1):
        j = baby.get(gamma)
        if j is not None:
            e = (i * m + j) % order
            if pow(base, e, modulus) == target % modulus:
                return e
            return None
        gamma = gamma * giant % modulus
    return None


def binary_digit_values(num_digits: int) -> list[int]:
    """The 2**num_digits integers below 10**num_digits with 0/1 digits."""
    if num_digits < 1:
        raise ValueError("num_digits must be >= 1")
    values = set()
    for bits in itertools.product("01", repeat=num_digits):
        values.add(int("".join(bits)))
    return sorted(values)


def sieve_binary_residues(
    r: int,
    max_r: int = 9,
    materialize_limit: int = 100_000,
) -> SieveReport:
    """Sieve the (a, b) torus mod 10**r for binary-digit residues.

    Work grows with 2**r candidate residues and the square root of
    ord(9, 10**r), never with the torus size, so r = 9 takes well
    under a second even though its torus holds 6.25e13 pairs. When
    the survivors outnumber materialize_limit the report keeps one
    canonical witness class per achievable residue and marks itself
    incomplete; the counts stay exact either way.
    """
    if not 1 <= r <= max_r:
        raise ValueError(f"r must be between 1 and {max_r}")
    modulus = 10**r
    a_order = multiplicative_order(9, modulus)
    b_order = multiplicative_order(49, modulus)
    table = _bsgs_table(9, a_order, modulus)

    beta = b_order
    alpha = 0
    for j in sorted(_divisors(b_order)):
        e = _bsgs_dlog(9, pow(49, j, modulus), a_order, modulus, table)
        if e is not None:
            beta, alpha = j, e
            break
    kernel_size = b_order // beta
    kernel_step_a = (a_order - alpha) % a_order

    witnesses: list[tuple[int, int, int]] = []
    inv49 = pow(49, -1, modulus)
    for candidate in _binary_residues_ending_in_one(r):
        target = candidate
        for b0 in range(beta):
            a0 = _bsgs_dlog(9, target, a_order, modulus, table)
            if a0 is not None:
                witnesses.append((candidate, a0, b0))
                break
            target = target * inv49 % modulus

    surviving_count = len(witnesses) * kernel_size
    eliminated_count = a_order * b_order - surviving_count
    complete = surviving_count <= materialize_limit

    classes: list[ResidueClass] = []
    if complete:
        for residue, a0, b0 in witnesses:
            for t in range(kernel_size):
                classes.append(
                    ResidueClass(
                        a_offset=(a0 + t * kernel_step_a) % a_order,
                        a_period=a_order,
                        b_offset=(b0 + t * beta) % b_order,
                        b_period=b_order,
                        modulus=modulus,
                        residue=residue,
                    )
                )
        classes.sort(key=lambda c: (c.residue, c.b_offset, c.a_offset))
    else:
        for residue, a0, b0 in sorted(witnesses):
            classes.append(
                ResidueClass(
                    a_offset=a0,
                    a_period=a_order,
                    b_offset=b0,
                    b_period=b_order,
                    modulus=modulus,
                    residue=residue,
                )
            )
    return SieveReport(
        r=r,
        a_order=a_order,
        b_order=b_order,
        surviving=tuple(classes),
        surviving_count=surviving_count,
        eliminated_count=eliminated_count,
        complete=complete,
    )


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _binary_residues_ending_in_one(r: int) -> list[int]:
    """Binary-digit residues mod 10**r that 9**a * 49**b can reach.

    Such values are coprime to 10, so the last digit must be 1; the
    remaining r - 1 digits range over 0 and 1 freely.
    """
    if r == 1:
        return [1]
    return [10 * v + 1 for v in binary_digit_values(r - 1)]


def residue_table_mod_100() -> tuple[tuple[int, str, int], ...]:
    """Residues of 9**a * 49**b mod 100 with b's parity tied to a's.

    49 squares to 1 mod 100, so each row covers every b of the stated
    parity; five rows exhaust the distinct values for a >= 1 because 9
    has order 10 and stepping a by 1 flips the relevant parity.
    """
    rows = []
    for a in range(1, 6):
        parity = "odd" if a % 2 else "even"
        residue = pow(9, a, 100) * pow(49, a % 2, 100) % 100
        rows.append((a, parity, residue))
    return tuple(rows)


def verify_periodic_congruence(
    a: int,
    b_offset: int,
    b_period: int,
    r: int,
    target: int,
    samples: int = 15,
) -> ConjectureReport:
    """Spot-check 9**a * 49**(b_offset + t*b_period) == target mod 10**r.

    Samples t = 0 .. samples-1; failing exponents b are reported as
    counterexamples.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if b_period < 1:
        raise ValueError("b_period must be >= 1")
    started = time.perf_counter()
    modulus = 10**r
    nine_part = pow(9, a, modulus)
    bad = []
    for t in range(samples):
        b = b_offset + t * b_period
        if nine_part * pow(49, b, modulus) % modulus != target % modulus:
            bad.append(b)
    notes = f"a={a}, b=b_offset+t*b_period for t<{samples}, modulus 10**{r}"
    return _build_report("periodic-congruence", samples, 2, bad, 0, started, notes)


_DIGIT_LENGTH_GUARD = Decimal("1e-6")


def _exact_digit_length(a: int, b: int) -> int:
    return decimal_digit_count(9**a * 49**b)


def digit_length_of_power_product(a: int, b: int) -> int:
    """Decimal digit count of 9**a * 49**b without forming the value.

    Uses 60-digit logarithms; if the exponent lands within 1e-6 of an
    integer the cheap path cannot be trusted and the value is built
    and counted exactly instead.
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    if a == 0 and b == 0:
        return 1
    with localcontext() as ctx:
        ctx.prec = 60
        ln10 = Decimal(10).ln()
        t = (a * Decimal(9).ln() + b * Decimal(49).ln()) / ln10
        frac = t - int(t)
    if frac < _DIGIT_LENGTH_GUARD or frac > 1 - _DIGIT_LENGTH_GUARD:
        return _exact_digit_length(a, b)
    return int(t) + 1


def search_binary_digit_squares(root_bound: int) -> list[int]:
    """Roots d <= root_bound whose square has only 0/1 digits.

    A square with 0/1 digits is 0, 1, or 100 mod 1000, which admits
    only 38 of the 1000 possible root suffixes; everything else is
    skipped without squaring.
    """
    if root_bound < 1:
        raise ValueError("root_bound must be >= 1")
    residues = {0, 1, 100}
    allowed = tuple(d for d in range(1000) if d * d % 1000 in residues)
    binary_digits = {"0", "1"}
    found = []
    for base in range(0, root_bound + 1, 1000):
        for off in allowed:
            d = base + off
            if 1 <= d <= root_bound and set(str(d * d)) <= binary_digits:
                found.append(d)
    return found


def heuristic_expected_count(num_digits: int) -> float:
    """Heuristic density of binary-digit squares with the given length."""
    if num_digits < 1:
        raise ValueError("num_digits must be >= 1")
    return (math.sqrt(5) * 10.0) ** (-num_digits)


def count_ones_multiple_of_nine(candidate: int) -> bool:
    """Digit-sum test for a binary-digit value divisible by nine.

    A multiple of nine has digit sum divisible by nine, and for 0/1
    digits the sum is the count of ones. True means consistent.
    """
    s = str(candidate)
    if set(s) - {"0", "1"}:
        raise ValueError("candidate must have only 0/1 digits")
    return s.count("1") % 9 == 0


def strip_trailing_zero_pairs(n: int) -> tuple[int, int]:
    """Largest q with n == core * 100**q; returns (core, q)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = 0
    while n % 100 == 0:
        n //= 100
        q += 1
    return n, q


def is_power_of_ten(v: int) -> bool:
    if v < 1:
        return False
    s = str(v)
    return s[0] == "1" and set(s[1:]) <= {"0"}
