"""
Closed rational interval arithmetic.

Intervals are plain `(lo, hi)` tuples of `Fraction` with lo <= hi. They are only ever
used as enclosures of exact values, never as values in their own right.
"""
from fractions import Fraction
from typing import Iterable

Interval = tuple[Fraction, Fraction]


def point(x) -> Interval:
    x = Fraction(x)
    return (x, x)


def iadd(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def imul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def ihorner(coeffs: Iterable[Fraction], x: Interval) -> Interval:
    """Encloses the values of a polynomial (constant term first) over the interval x."""
    acc = point(0)
    for c in reversed(tuple(coeffs)):
        acc = iadd(imul(acc, x), point(c))
    return acc


def contains_zero(a: Interval) -> bool:
    return a[0] <= 0 <= a[1]
