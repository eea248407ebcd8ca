"""Exact integer floors of golden-ratio and exponential expressions.

Every result is produced with integer and rational arithmetic only. No
float ever enters the result path, so values stay exact at arbitrary
magnitude (Python ints are unbounded; intermediates like 5*c*c are safe
well past the 10**9 working range).
"""

from dataclasses import dataclass
from fractions import Fraction
import math


def isqrt(x):
    """Integer square root: the unique s >= 0 with s*s <= x < (s+1)*(s+1).

    Args:
        x: non-negative integer.
    """
    if x < 0:
        raise ValueError("isqrt requires x >= 0")
    return math.isqrt(x)


def floor_mul_sqrt5(c):
    """floor(c * sqrt(5)) for any integer c.

    For c != 0, 5*c*c is never a perfect square (the prime 5 appears to
    an odd power), so isqrt(5*c*c) sits strictly below |c|*sqrt(5). The
    negative branch therefore needs the usual extra -1.
    """
    if c == 0:
        return 0
    s = isqrt(5 * c * c)
    return s if c > 0 else -s - 1


def floor_affine_sqrt5(a, b, d, m):
    """floor((a + b*sqrt(5)) * m / d) exactly, for integers with d >= 1.

    Computed as (a*m + floor(b*m*sqrt(5))) // d. Why that is exact: for
    b*m != 0 the real value y = a*m + b*m*sqrt(5) is irrational, so with
    K = floor(y) it lies strictly inside the open unit interval
    (K, K + 1) whose endpoints are integers. On [K, K + 1) the function
    floor(y / d) is constant and equals K // d, because y / d can only
    cross an integer where y crosses a multiple of d, and the first
    multiple of d above K // d * d is at least K + 1. For b*m == 0 the
    value is the plain rational a*m/d and floor division is already it.
    """
    if d < 1:
        raise ValueError("floor_affine_sqrt5 requires d >= 1")
    bm = b * m
    if bm == 0:
        return (a * m) // d
    return (a * m + floor_mul_sqrt5(bm)) // d


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with rational endpoints enclosing a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def pins_floor(self):
        """True when every point of the interval shares one floor value."""
        return math.floor(self.lo) == math.floor(self.hi)


def exp_enclosure(t, terms):
    """Rational enclosure of e**t from a Taylor partial sum plus a tail bound.

    The partial sum S = sum_{j<=terms} t**j / j! underestimates e**t; the
    omitted tail is below head * (terms + 2) / (terms + 2 - t) where head
    is the first omitted term, a geometric majorant valid whenever
    terms + 2 > t.

    Args:
        t: non-negative integer exponent.
        terms: number of Taylor terms past the constant 1.
    """
    if terms + 2 <= t:
        raise ValueError("tail bound needs terms + 2 > t")
    term = Fraction(1)
    total = Fraction(1)
    for j in range(1, terms + 1):
        term *= Fraction(t, j)
        total += term
    head = term * Fraction(t, terms + 1)
    tail = head * Fraction(terms + 2, terms + 2 - t)
    return RationalInterval(total, total + tail)


def floor_exp(t):
    """floor(e**t) for integer t >= 0, exact.

    Taylor terms are added until the enclosing interval pins a single
    floor value. Termination is guaranteed because e**t is irrational
    for t >= 1, so the enclosure eventually separates from the integers
    on both sides.
    """
    if t < 0:
        raise ValueError("floor_exp requires t >= 0")
    if t == 0:
        return 1
    terms = 2 * t + 8
    while True:
        box = exp_enclosure(t, terms)
        if box.pins_floor():
            return math.floor(box.lo)
        terms += 8
