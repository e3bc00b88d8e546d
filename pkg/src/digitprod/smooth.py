"""7-smooth factorization and digit-product preimages.

P(n) is a product of decimal digits, so its prime factors all lie in
{2, 3, 5, 7}. This module tests that property, splits a value into its
smooth part and cofactor, and answers the inverse question: which
integers occur as P(m), and what is the smallest such m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

SMOOTH_PRIMES = (2, 3, 5, 7)

# Cheapest digit spellings of 2**a * 3**b leftovers after greedy 8s and 9s.
_REMAINDER_DIGITS = {
    (0, 0): (),
    (1, 0): (2,),
    (2, 0): (4,),
    (0, 1): (3,),
    (1, 1): (6,),
    (2, 1): (2, 6),
}


@dataclass(frozen=True)
class Factorization:
    """value = 2**e2 * 3**e3 * 5**e5 * 7**e7 * cofactor, cofactor coprime to 210."""

    value: int
    exponents: dict[int, int]
    cofactor: int

    def is_smooth(self) -> bool:
        return self.cofactor == 1


def factor_smooth(v: int) -> Factorization:
    """Split v into exponents of 2, 3, 5, 7 and the remaining cofactor."""
    if v < 1:
        raise ValueError("factor_smooth expects a positive integer")
    exponents = {}
    rest = v
    for p in SMOOTH_PRIMES:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        exponents[p] = e
    return Factorization(value=v, exponents=exponents, cofactor=rest)


def is_seven_smooth(v: int) -> bool:
    """True iff v has no prime factor exceeding 7."""
    return factor_smooth(v).cofactor == 1


def digit_product_preimage(v: int) -> Optional[int]:
    """Smallest m with P(m) = v, or None when v is not 7-smooth.

    Fives and sevens can only come from the literal digits 5 and 7. The
    2-3 part is spelled with as few digits as possible (greedy 9s for
    3**2, greedy 8s for 2**3, then a fixed table for what remains), and
    sorting the digits ascending makes the value minimal for that count.
    """
    if v < 1:
        raise ValueError("digit_product_preimage expects a positive integer")
    f = factor_smooth(v)
    if f.cofactor != 1:
        return None
    if v == 1:
        return 1
    e2, e3 = f.exponents[2], f.exponents[3]
    digits = [8] * (e2 // 3) + [9] * (e3 // 2)
    digits += _REMAINDER_DIGITS[(e2 % 3, e3 % 2)]
    digits += [5] * f.exponents[5] + [7] * f.exponents[7]
    digits.sort()
    m = 0
    for d in digits:
        m = m * 10 + d
    return m


def seven_smooth_up_to(bound: int) -> list[int]:
    """All 7-smooth integers in [1, bound], ascending."""
    if bound < 1:
        raise ValueError("seven_smooth_up_to expects bound >= 1")
    out = []
    p2 = 1
    while p2 <= bound:
        p23 = p2
        while p23 <= bound:
            p235 = p23
            while p235 <= bound:
                p2357 = p235
                while p2357 <= bound:
                    out.append(p2357)
                    p2357 *= 7
                p235 *= 5
            p23 *= 3
        p2 *= 2
    out.sort()
    return out
