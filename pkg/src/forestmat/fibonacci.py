"""Fibonacci and Lucas numbers as exact Python ints, plus the golden ratio.

``fib_odd(i)`` is F(2i-1) and ``fib_even(i)`` is F(2i). ``fib(-1)`` is 1 so
that ``lucas(i) = fib(i-1) + fib(i+1)`` holds at i = 0; smaller indices are
rejected.
"""

from __future__ import annotations

from decimal import Decimal, localcontext

from .errors import DomainError

# digits used for golden-ratio comparisons
PRECISION = 60


def fib(i: int) -> int:
    if i < -1:
        raise DomainError(f"fib is defined for i >= -1, got {i}")
    if i == -1:
        return 1
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def fib_odd(i: int) -> int:
    if i < 1:
        raise DomainError(f"fib_odd is defined for i >= 1, got {i}")
    return fib(2 * i - 1)


def fib_even(i: int) -> int:
    if i < 0:
        raise DomainError(f"fib_even is defined for i >= 0, got {i}")
    return fib(2 * i)


def lucas(i: int) -> int:
    if i < 0:
        raise DomainError(f"lucas is defined for i >= 0, got {i}")
    return fib(i - 1) + fib(i + 1)


def golden_ratio(prec: int = PRECISION) -> Decimal:
    """(sqrt(5) + 1) / 2 to ``prec`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = prec + 5
        phi = (Decimal(5).sqrt() + 1) / 2
        ctx.prec = prec
        return +phi


def inverse_golden_ratio(prec: int = PRECISION) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec + 5
        inv = (Decimal(5).sqrt() - 1) / 2
        ctx.prec = prec
        return +inv
