"""Integer and rational primitives.

Python ints are already arbitrary precision and ``fractions.Fraction`` keeps
itself reduced with a positive denominator, so this module only pins down the
conventions the rest of the package relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction

DEFAULT_MAX_PAIRS = 10**8
DEFAULT_MAX_VERTICES = 10**5
DEFAULT_SUBSET_CAP = 12


class CapExceeded(ValueError):
    """A brute-force enumeration would exceed its configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Integer division that must be exact; a remainder means a broken identity."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def format_decimal(x: Fraction, digits: int) -> str:
    """Fixed-point rendering of ``x`` rounded half-to-even at ``digits`` places."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    mag = abs(scaled)
    if digits == 0:
        return f"{sign}{mag}"
    whole, frac = divmod(mag, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
